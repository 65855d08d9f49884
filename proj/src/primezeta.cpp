#include "divcor/primezeta.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "divcor/errors.hpp"
#include "divcor/primes.hpp"
#include "divcor/zeta.hpp"

namespace divcor {

namespace {

const std::vector<std::int8_t>& mobius_small() {
    static std::vector<std::int8_t> mu = mobius_up_to(4096);
    return mu;
}

void check_k_range(unsigned K) {
    if (K + 1 >= 4096) throw precision_error("prime zeta: Mobius truncation range exceeded");
}

unsigned k_cutoff(double s, unsigned digits, unsigned m = 0) {
    // Term k behaves like k^{m-1} 2^{-ks}; solve k s log2(2) - (m-1) log2(k) >= need.
    double need = (static_cast<double>(digits) + 8.0) * std::log2(10.0);
    double k = std::max(2.0, need / s);
    for (int it = 0; it < 4; ++it)
        k = (need + (m > 0 ? (m - 1) * std::log2(std::max(2.0, k)) : 0.0)) / s;
    return static_cast<unsigned>(k) + 3;
}

} // namespace

BigReal prime_zeta(const BigReal& s, unsigned digits) {
    double sd = s.to_double();
    if (sd < 1.5) throw domain_error("prime_zeta: s < 1.5 is outside the supported domain");
    const unsigned work = digits + 8;
    unsigned K = k_cutoff(sd, digits);
    check_k_range(K);
    BigReal acc = BigReal::with_digits(work);
    for (unsigned k = 1; k <= K; ++k) {
        int mu = mobius_small()[k];
        if (mu == 0) continue;
        BigReal ks = s * static_cast<unsigned long>(k);
        BigReal lz = log(zeta_jet(ks, 0, work)[0]);
        lz /= static_cast<unsigned long>(k);
        if (mu > 0) acc += lz; else acc -= lz;
    }
    return acc;
}

BigReal prime_zeta_deriv(unsigned m, const BigReal& s, unsigned digits) {
    if (m == 0) return prime_zeta(s, digits);
    if (m > 12) throw domain_error("prime_zeta_deriv: order too large");
    double sd = s.to_double();
    if (sd < 1.5) throw domain_error("prime_zeta_deriv: s < 1.5 is outside the supported domain");
    const unsigned work = digits + 8;
    unsigned K = k_cutoff(sd, digits, m);
    check_k_range(K);
    BigReal acc = BigReal::with_digits(work);
    BigReal fact = BigReal::from_ui(1, work);
    for (unsigned t = 2; t <= m; ++t) fact *= static_cast<unsigned long>(t);
    for (unsigned k = 1; k <= K; ++k) {
        int mu = mobius_small()[k];
        if (mu == 0) continue;
        BigReal ks = s * static_cast<unsigned long>(k);
        auto lj = log_zeta_jet(ks, m, work);
        BigReal term = lj[m] * fact; // (log zeta)^{(m)}(ks)
        // times k^{m-1}
        BigReal kp = BigReal::from_ui(1, work);
        for (unsigned t = 0; t + 1 < m; ++t) kp *= static_cast<unsigned long>(k);
        term *= kp;
        if (mu > 0) acc += term; else acc -= term;
    }
    return acc;
}

const BigReal& prime_zeta_deriv_int(unsigned m, unsigned N, unsigned digits) {
    static std::map<std::tuple<unsigned, unsigned, unsigned>, BigReal> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> lk(mx);
    auto key = std::make_tuple(m, N, digits);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    BigReal v = prime_zeta_deriv(m, BigReal::from_ui(N, digits), digits);
    return cache.emplace(key, std::move(v)).first->second;
}

BigReal prime_log_power_sum(unsigned m, unsigned N, const std::vector<std::uint32_t>& excluded,
                            unsigned digits) {
    if (N < 2) throw domain_error("prime_log_power_sum: N < 2 diverges");
    std::uint64_t exkey = 1;
    for (auto p : excluded) exkey *= p;
    static std::map<std::tuple<unsigned, unsigned, std::uint64_t, unsigned>, BigReal> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> lk(mx);
    auto key = std::make_tuple(m, N, exkey, digits);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    auto is_excluded = [&](std::uint32_t p) {
        return std::find(excluded.begin(), excluded.end(), p) != excluded.end();
    };
    std::uint32_t p1 = 2;
    while (is_excluded(p1)) {
        std::uint32_t q = p1 + 1;
        while (true) {
            bool prime = q >= 2;
            for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= q; ++d)
                if (q % d == 0) { prime = false; break; }
            if (prime) break;
            ++q;
        }
        p1 = q;
    }

    BigReal v;
    const double dN = static_cast<double>(N);
    // direct summation is viable once the needed prime cutoff is modest
    double lg_pcut = std::log10(static_cast<double>(p1)) + (static_cast<double>(digits) + 6.0) / dN;
    if (dN >= 16.0 && lg_pcut <= 7.3) {
        const unsigned work = digits + 10;
        double pcut_d = std::pow(10.0, lg_pcut) + 64.0;
        std::uint32_t pcut = static_cast<std::uint32_t>(pcut_d);
        BigReal acc = BigReal::with_digits(work);
        for (std::uint32_t p : primes_up_to(pcut)) {
            if (is_excluded(p)) continue;
            BigReal ip = BigReal::from_ui(1, work) / BigReal::from_ui(p, work);
            BigReal t = BigReal::pow_ui(ip, N);
            if (m > 0) {
                BigReal lp = BigReal::log_ui(p, work);
                for (unsigned i = 0; i < m; ++i) t *= lp;
            }
            acc += t;
        }
        v = std::move(acc);
    } else {
        // Mobius route; the boost absorbs the |P - sum_excl| cancellation,
        // which costs about N log10(p1/2) digits
        const unsigned work =
            digits + static_cast<unsigned>(dN * std::log10(static_cast<double>(p1))) + 14;
        BigReal s = prime_zeta_deriv(m, BigReal::from_ui(N, work), work);
        if (m % 2 == 1) s = -s;
        for (std::uint32_t p : excluded) {
            BigReal ip = BigReal::from_ui(1, work) / BigReal::from_ui(p, work);
            BigReal t = BigReal::pow_ui(ip, N);
            if (m > 0) {
                BigReal lp = BigReal::log_ui(p, work);
                for (unsigned i = 0; i < m; ++i) t *= lp;
            }
            s -= t;
        }
        v = std::move(s);
    }
    return cache.emplace(key, std::move(v)).first->second;
}

BigComplex prime_zeta_complex(const BigComplex& s, unsigned digits) {
    double re = s.re.to_double();
    if (re < 1.3) throw domain_error("prime_zeta_complex: Re s < 1.3");
    const unsigned work = digits + 8;
    unsigned K = k_cutoff(re, digits);
    check_k_range(K);
    BigComplex acc = BigComplex::zero(work);
    for (unsigned k = 1; k <= K; ++k) {
        int mu = mobius_small()[k];
        if (mu == 0) continue;
        BigComplex ks = s * BigReal::from_ui(k, work);
        BigComplex lz = clog(zeta_jet(ks, 0, work)[0]);
        BigReal inv_k = BigReal::from_ui(1, work) / BigReal::from_ui(k, work);
        lz = lz * inv_k;
        if (mu > 0) acc += lz; else acc -= lz;
    }
    return acc;
}

} // namespace divcor
