#include "divcor/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <set>
#include <thread>

#include "divcor/errors.hpp"
#include "divcor/primes.hpp"

namespace divcor {

std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

void mpz_set_u128_value(mpz_class& z, u128 v) {
    z = static_cast<unsigned long>(v >> 64);
    z <<= 64;
    z += static_cast<unsigned long>(v);
}

u64 tau_prime_power(unsigned k, unsigned e) {
    if (k < 1 || k > 8) throw domain_error("tau_prime_power: k out of range [1,8]");
    if (e > 120) throw domain_error("tau_prime_power: exponent out of range (e <= 120)");
    // binomial(e+k-1, k-1): fits u64 for k <= 8, e <= 120
    u64 r = 1;
    for (unsigned i = 1; i < k; ++i) {
        r *= (e + i);
        r /= i;
    }
    return r;
}

namespace {

constexpr u64 kMaxSieveN = u64(1) << 40;

void check_table_args(unsigned k, u64 lo, u64 hi) {
    if (k < 2 || k > 5) throw domain_error("tau_table: k out of range [2,5]");
    if (lo < 1 || lo >= hi) throw domain_error("tau_table: require 1 <= lo < hi");
    if (hi > kMaxSieveN) throw domain_error("tau_table: hi exceeds 2^40");
}

// tau_k on [lo, hi) into values[0..hi-lo); primes must cover sqrt(hi-1).
void fill_segment(unsigned k, u64 lo, u64 hi, const std::vector<std::uint32_t>& primes,
                  std::vector<u64>& values, std::vector<u64>& rem) {
    const u64 len = hi - lo;
    values.assign(len, 1);
    rem.resize(len);
    for (u64 i = 0; i < len; ++i) rem[i] = lo + i;
    for (std::uint32_t p : primes) {
        u64 pp = p;
        if (pp * pp >= hi) break;
        u64 first = ((lo + pp - 1) / pp) * pp;
        for (u64 m = first; m < hi; m += pp) {
            u64 i = m - lo;
            unsigned e = 0;
            while (rem[i] % pp == 0) {
                rem[i] /= pp;
                ++e;
            }
            values[i] *= tau_prime_power(k, e);
        }
    }
    for (u64 i = 0; i < len; ++i)
        if (rem[i] > 1) values[i] *= k; // leftover large prime
}

unsigned resolve_threads(const SieveConfig& cfg) {
    unsigned t = cfg.threads ? cfg.threads : std::thread::hardware_concurrency();
    return t ? t : 1;
}

} // namespace

TauTable tau_table(unsigned k, u64 lo, u64 hi, const SieveConfig& cfg) {
    check_table_args(k, lo, hi);
    u64 need = (hi - lo) * 16; // values + rem
    if (need > cfg.memory_budget_bytes)
        throw resource_error("tau_table: range needs " + std::to_string(need) +
                             " bytes, over the memory budget of " +
                             std::to_string(cfg.memory_budget_bytes));
    TauTable t;
    t.k = k;
    t.lo = lo;
    t.hi = hi;
    auto primes = primes_up_to(static_cast<std::uint32_t>(isqrt_u64(hi - 1)) + 1);
    std::vector<u64> rem;
    fill_segment(k, lo, hi, primes, t.values, rem);
    return t;
}

std::string CorrelationRecord::to_csv() const {
    return std::to_string(k) + "," + std::to_string(ell) + "," + std::to_string(h) + "," +
           std::to_string(X) + "," + u128_to_string(value);
}

std::vector<CorrelationRecord> correlate_checkpoints(unsigned k, unsigned ell, u64 h,
                                                     const std::vector<u64>& checkpoints,
                                                     const SieveConfig& cfg) {
    if (k < 2 || k > 5 || ell < 2 || ell > 5) throw domain_error("correlate: k, ell in [2,5]");
    if (h < 1) throw domain_error("correlate: h >= 1");
    if (checkpoints.empty()) throw domain_error("correlate: no checkpoints");
    for (std::size_t i = 1; i < checkpoints.size(); ++i)
        if (checkpoints[i] <= checkpoints[i - 1])
            throw domain_error("correlate: checkpoints must be strictly increasing");
    const u64 X = checkpoints.back();
    if (X < 1) throw domain_error("correlate: X >= 1");
    if (X + h > kMaxSieveN) throw domain_error("correlate: X + h exceeds the sieve range 2^40");

    const u64 seg = std::max<u64>(cfg.segment_size, 1 << 14);
    const unsigned nthreads = resolve_threads(cfg);
    const u64 nsegs = (X + seg - 1) / seg;

    // per-segment partial sums; checkpoint segments are handled separately
    std::vector<u128> segsum(nsegs, 0);
    auto primes = primes_up_to(static_cast<std::uint32_t>(isqrt_u64(X + h)) + 1);

    std::atomic<u64> next{0};
    std::vector<std::thread> pool;
    auto worker = [&]() {
        std::vector<u64> va, ra, vb, rb;
        while (true) {
            u64 s = next.fetch_add(1);
            if (s >= nsegs) break;
            u64 lo = s * seg + 1, hi = std::min(X, (s + 1) * seg) + 1; // [lo, hi)
            u128 acc = 0;
            if (k == ell && h <= seg) {
                fill_segment(k, lo, hi + h, primes, va, ra); // covers [lo, hi+h)
                for (u64 n = lo; n < hi; ++n)
                    acc += static_cast<u128>(va[n - lo]) * va[n - lo + h];
            } else {
                fill_segment(k, lo, hi, primes, va, ra);
                fill_segment(ell, lo + h, hi + h, primes, vb, rb);
                for (u64 n = lo; n < hi; ++n)
                    acc += static_cast<u128>(va[n - lo]) * vb[n - lo];
            }
            segsum[s] = acc;
        }
    };
    for (unsigned t = 0; t + 1 < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    // prefix-accumulate to each checkpoint; re-sieve the straddling segment
    std::vector<CorrelationRecord> out;
    std::vector<u64> va, ra, vb, rb;
    u128 prefix = 0;
    u64 done_segs = 0;
    for (u64 cp : checkpoints) {
        u64 full = cp / seg; // segments fully below cp
        while (done_segs < full) prefix += segsum[done_segs++];
        u128 val = prefix;
        u64 lo = full * seg + 1;
        if (lo <= cp) {
            u64 hi = cp + 1;
            if (k == ell && h <= seg) {
                fill_segment(k, lo, hi + h, primes, va, ra);
                for (u64 n = lo; n < hi; ++n) val += static_cast<u128>(va[n - lo]) * va[n - lo + h];
            } else {
                fill_segment(k, lo, hi, primes, va, ra);
                fill_segment(ell, lo + h, hi + h, primes, vb, rb);
                for (u64 n = lo; n < hi; ++n) val += static_cast<u128>(va[n - lo]) * vb[n - lo];
            }
        }
        CorrelationRecord r;
        r.k = k;
        r.ell = ell;
        r.h = h;
        r.X = cp;
        r.value = val;
        out.push_back(r);
    }
    return out;
}

CorrelationRecord correlate(unsigned k, unsigned ell, u64 X, u64 h, const SieveConfig& cfg) {
    return correlate_checkpoints(k, ell, h, {X}, cfg).front();
}

HooleyTriple hooley_identity_check(u64 n, u64 X) {
    if (n < 1 || n > X) throw domain_error("hooley_identity_check: require 1 <= n <= X");
    auto fac = factorize(n);
    // enumerate all divisors
    std::vector<u64> divs{1};
    for (auto [p, e] : fac) {
        std::size_t base = divs.size();
        u64 pe = 1;
        for (unsigned t = 1; t <= e; ++t) {
            pe *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pe);
        }
    }
    auto cube_le = [](u64 t, u128 bound) {
        u128 c = static_cast<u128>(t) * t;
        return c * t <= bound;
    };
    const u128 Xb = X;
    const u128 X2 = static_cast<u128>(X) * X;
    HooleyTriple r;
    for (u64 l1 : divs) {
        if (n % l1) continue;
        u64 m = n / l1;
        for (u64 l2 : divs) {
            if (m % l2) continue;
            u64 l3 = m / l2;
            ++r.tau3;
            bool c1 = cube_le(l1, Xb);
            bool c12 = cube_le(l1 * l2, X2);
            bool c3 = cube_le(l3, Xb);
            bool c2v = cube_le(l2, Xb);
            if (c12 && c1) ++r.sigma1;
            if (c12 && c1 && c3) ++r.sigma2;
            if (c1 && c2v && c3) ++r.sigma3;
        }
    }
    r.holds = (3 * r.sigma1 + r.sigma3 >= 3 * r.sigma2) &&
              (3 * r.sigma1 + r.sigma3 - 3 * r.sigma2 == r.tau3);
    return r;
}

HooleySums hooley_sigma_sums(u64 X, u64 h, const SieveConfig& cfg) {
    if (X < 1 || h < 1) throw domain_error("hooley_sigma_sums: X, h >= 1");
    TauTable t = tau_table(3, 1, X + h + 1, cfg);
    const u64 c3 = icbrt(X);       // floor X^{1/3}
    const u128 X2 = static_cast<u128>(X) * X;
    HooleySums s;
    s.X = X;
    s.h = h;
    auto ap_sum = [&](u64 q, u64 upper) {
        // sum tau_3(n) over h < n <= upper, n = h (mod q)
        u128 acc = 0;
        for (u64 n = h + q; n <= upper; n += q) acc += t.at(n);
        return acc;
    };
    for (u64 l1 = 1; l1 <= c3; ++l1) {
        for (u64 l2 = 1;; ++l2) {
            u64 q = l1 * l2;
            u128 qc = static_cast<u128>(q) * q;
            if (qc * q > X2) break; // q > X^{2/3}
            s.sigma11 += ap_sum(q, X + h);
            s.sigma21 += ap_sum(q, q * c3 + h);
        }
        for (u64 l3 = 1; l3 <= c3; ++l3) {
            u64 q = l1 * l3;
            s.sigma31 += ap_sum(q, q * c3 + h);
        }
    }
    return s;
}

CoprimeTauCache::CoprimeTauCache(unsigned k, u64 X, const SieveConfig& cfg)
    : table_(tau_table(k, 1, X + 1, cfg)) {}

u128 CoprimeTauCache::ap_sum(u64 q, u64 h) const {
    u64 X = table_.hi - 1;
    u64 n0 = h % q;
    if (n0 == 0) n0 = q;
    u128 acc = 0;
    for (u64 n = n0; n <= X; n += q) acc += table_.at(n);
    return acc;
}

u128 CoprimeTauCache::coprime_sum(u64 q) {
    u64 X = table_.hi - 1;
    if (q == 0) throw domain_error("coprime_sum: q >= 1");
    auto fac = factorize(q);
    if (fac.size() > 15) throw resource_error("coprime_sum: rad(q) has more than 15 prime factors");
    u64 rad = 1;
    for (auto [p, e] : fac) rad *= p;
    for (auto& [r, v] : memo_)
        if (r == rad) return v;
    // inclusion-exclusion over squarefree divisors d | rad: mu(d) sum_{m<=X/d} tau(dm)
    u128 total = 0;
    bool negagg = false;
    u128 pos = 0, neg = 0;
    std::vector<u64> ps;
    for (auto [p, e] : fac) ps.push_back(p);
    for (u64 mask = 0; mask < (u64(1) << ps.size()); ++mask) {
        u64 d = 1;
        int bits = 0;
        for (std::size_t i = 0; i < ps.size(); ++i)
            if (mask & (u64(1) << i)) {
                d *= ps[i];
                ++bits;
            }
        if (d > X) continue;
        u128 inner = 0;
        for (u64 m = d; m <= X; m += d) inner += table_.at(m);
        if (bits % 2 == 0) pos += inner;
        else neg += inner;
    }
    (void)negagg;
    total = pos - neg;
    memo_.emplace_back(rad, total);
    return total;
}

u128 coprime_tau_sum(unsigned k, u64 X, u64 q, const SieveConfig& cfg) {
    CoprimeTauCache ctx(k, X, cfg);
    return ctx.coprime_sum(q);
}

std::string APSampling::describe() const {
    if (all) return "all";
    return "random(m=" + std::to_string(count) + ",seed=" + std::to_string(seed) + ")";
}

u64 default_q_limit(unsigned k, u64 X) {
    // floor(X^{(k-1)/k}) = max{q : q^k <= X^{k-1}}
    if (k == 2) return isqrt_u64(X);
    if (k == 3) return ifloor23(X);
    throw domain_error("default_q_limit: k in {2,3}");
}

std::string APRemainderRecord::to_csv() const {
    return std::to_string(k) + "," + std::to_string(h) + "," + std::to_string(X) + "," +
           std::to_string(q_limit) + "," + delta_sum.get_num().get_str() + "," +
           delta_sum.get_den().get_str();
}

APRemainderRecord ap_remainder_sum(unsigned k, u64 X, u64 h, u64 q_limit,
                                   const APSampling& sampling, const SieveConfig& cfg) {
    if (k != 2 && k != 3) throw domain_error("ap_remainder_sum: k in {2,3}");
    if (h < 1 || X < 1) throw domain_error("ap_remainder_sum: h, X >= 1");
    u64 qmax = default_q_limit(k, X);
    if (q_limit == 0) q_limit = qmax;
    if (q_limit > qmax)
        throw domain_error("ap_remainder_sum: q_limit above floor(X^{(k-1)/k})");

    // selected moduli
    std::vector<u64> qs;
    if (sampling.all) {
        qs.resize(q_limit);
        for (u64 q = 1; q <= q_limit; ++q) qs[q - 1] = q;
    } else {
        if (sampling.count >= q_limit) {
            qs.resize(q_limit);
            for (u64 q = 1; q <= q_limit; ++q) qs[q - 1] = q;
        } else {
            // Floyd's sampling without replacement, deterministic in seed
            std::mt19937_64 rng(sampling.seed);
            std::set<u64> chosen;
            for (u64 j = q_limit - sampling.count + 1; j <= q_limit; ++j) {
                u64 t = rng() % j + 1;
                if (!chosen.insert(t).second) chosen.insert(j);
            }
            qs.assign(chosen.begin(), chosen.end());
        }
    }

    // cost model: AP sums cost sum X/q; coprime sums cost sum_{d | rad} X/d
    // per distinct radical (memoized)
    double cost = 0;
    {
        std::set<u64> rads;
        for (u64 q : qs) {
            cost += static_cast<double>(X) / static_cast<double>(q);
            u64 q1 = q / gcd_u64(h, q);
            if (q1 > 0) {
                u64 rad = radical(q1);
                if (rads.insert(rad).second) {
                    double inner = 0;
                    for (auto [p, e] : factorize(rad)) inner += 1.0 / static_cast<double>(p);
                    cost += static_cast<double>(X) * (1.0 + inner) * 2.0;
                }
            }
        }
    }
    if (cost > cfg.ops_budget)
        throw resource_error(
            "ap_remainder_sum: estimated cost " + std::to_string(static_cast<double>(cost)) +
            " table reads exceeds budget " + std::to_string(cfg.ops_budget) +
            " (model: AP sums sum_q X/q plus memoized inclusion-exclusion sum_d X/d per radical)");

    CoprimeTauCache ctx(k, X, cfg);
    APRemainderRecord rec;
    rec.k = k;
    rec.h = h;
    rec.X = X;
    rec.q_limit = q_limit;
    rec.sampling = sampling.describe();
    if (!sampling.all) rec.q_sampled = qs;
    mpq_class total(0);
    mpz_class apz, cz;
    for (u64 q : qs) {
        u64 q1 = q / gcd_u64(h, q);
        u64 phi1 = euler_phi(q1);
        u128 ap = ctx.ap_sum(q, h);
        u128 cop = ctx.coprime_sum(q1);
        // delta = ap - cop/phi1, exactly
        mpz_set_u128_value(apz, ap);
        mpz_set_u128_value(cz, cop);
        mpq_class delta(apz * static_cast<long>(phi1) - cz, mpz_class(static_cast<long>(phi1)));
        delta.canonicalize();
        if (delta < 0) delta = -delta;
        total += delta;
    }
    rec.delta_sum = total;
    return rec;
}

} // namespace divcor
