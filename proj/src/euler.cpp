#include "divcor/euler.hpp"

#include <algorithm>
#include <cmath>

#include "divcor/errors.hpp"
#include "divcor/primes.hpp"
#include "divcor/primezeta.hpp"

namespace divcor {

PrimeExpansion PrimeExpansion::from_p_rational(RatVec num_p, RatVec den_p, unsigned log_weight,
                                               std::size_t order, std::vector<std::uint32_t> excluded) {
    PrimeExpansion e;
    e.coeffs = rat_from_p_rational(num_p, den_p, order);
    e.log_weight = log_weight;
    e.excluded_primes = std::move(excluded);
    e.num_p = std::move(num_p);
    e.den_p = std::move(den_p);
    e.truncated = true;
    std::size_t n0 = 0;
    while (n0 < e.coeffs.size() && e.coeffs[n0] == 0) ++n0;
    e.n0 = static_cast<int>(n0);
    if (e.n0 < 2) throw domain_error("prime expansion must start at 1/p^2 or deeper");
    return e;
}

namespace {

// log2|q|, robust for huge rationals.
double lg_abs(const mpq_class& q) {
    if (q == 0) return -1e9;
    long en = 0, ed = 0;
    double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
    double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
    return std::log2(std::fabs(mn)) + en - (std::log2(std::fabs(md)) + ed);
}

std::uint32_t smallest_unexcluded(const std::vector<std::uint32_t>& excl) {
    for (std::uint32_t p : primes_up_to(211))
        if (std::find(excl.begin(), excl.end(), p) == excl.end()) return p;
    throw domain_error("excluded-prime list covers all supported small primes");
}

// Series value sum a_N x^N at x = 1/p with a certified geometric tail, used
// for excluded primes when no exact rational form is attached.
BigReal series_value_at(const PrimeExpansion& e, std::uint32_t p, unsigned digits) {
    const unsigned work = digits + 10;
    BigReal x = BigReal::from_ui(1, work) / BigReal::from_ui(p, work);
    BigReal acc = BigReal::with_digits(work);
    BigReal xn = BigReal::pow_ui(x, static_cast<unsigned long>(e.n0));
    for (std::size_t n = static_cast<std::size_t>(e.n0); n < e.coeffs.size(); ++n) {
        if (e.coeffs[n] != 0) acc += BigReal::from_mpq(e.coeffs[n].get_mpq_t(), work) * xn;
        xn *= x;
    }
    // growth-ratio tail check
    double lgr = -1e9;
    std::size_t nm = e.coeffs.size() - 1;
    for (std::size_t i = nm; i + 10 > nm && i > static_cast<std::size_t>(e.n0); --i)
        if (e.coeffs[i] != 0 && e.coeffs[i - 1] != 0)
            lgr = std::max(lgr, lg_abs(e.coeffs[i]) - lg_abs(e.coeffs[i - 1]));
    double q = (lgr < -1e8) ? 0.0 : std::exp2(lgr) / p;
    if (q > 0.95) throw precision_error("excluded-prime series evaluation does not converge fast enough");
    double lg_tail = lg_abs(e.coeffs[nm]) - static_cast<double>(nm + 1) * std::log2(p) +
                     std::log2(1.0 / (1.0 - std::max(q, 0.5))) + 4.0;
    if (lg_tail > -3.3219 * (static_cast<double>(digits) + 2))
        throw precision_error("excluded-prime series tail above target precision; increase N_max");
    return acc;
}

BigReal sum_core(const PrimeExpansion& e, unsigned digits, bool add_back_excluded) {
    if (e.n0 < 2) throw domain_error("prime expansion must start at 1/p^2 or deeper");
    const unsigned work = digits + 10;
    const unsigned m = e.log_weight;
    const std::uint32_t p1 = smallest_unexcluded(e.excluded_primes);
    const double lg_p1 = std::log2(static_cast<double>(p1));
    const double lg_logp1_m = m * std::log2(std::max(1.0001, std::log(static_cast<double>(p1)))) + 1.0;
    const double lg_eps = -3.3219280948873623 * (static_cast<double>(digits) + 2);

    const std::size_t nmax = e.coeffs.size() - 1;

    // suffix bounds on |a_N| * S(N, m) in log2 space (conservative slop +3)
    std::vector<double> lg_term(nmax + 1, -1e9);
    for (std::size_t n = static_cast<std::size_t>(e.n0); n <= nmax; ++n)
        if (e.coeffs[n] != 0)
            lg_term[n] = lg_abs(e.coeffs[n]) - static_cast<double>(n) * lg_p1 + lg_logp1_m + 3.0;
    std::vector<double> suffix(nmax + 2, -1e9);
    for (std::size_t n = nmax + 1; n-- > static_cast<std::size_t>(e.n0);) {
        double hi = std::max(suffix[n + 1], lg_term[n]);
        if (hi < -1e8) { suffix[n] = -1e9; continue; }
        suffix[n] = hi + std::log2(std::exp2(suffix[n + 1] - hi) + std::exp2(lg_term[n] - hi));
    }

    // beyond-n_max tail from coefficient growth (exact polynomials have none)
    double lgr = -1e9;
    bool any = e.truncated;
    if (e.truncated) {
    for (std::size_t i = nmax; i + 12 > nmax && i > static_cast<std::size_t>(e.n0); --i)
        if (e.coeffs[i] != 0 && e.coeffs[i - 1] != 0)
            lgr = std::max(lgr, lg_abs(e.coeffs[i]) - lg_abs(e.coeffs[i - 1]));
    }
    if (any && lgr > -1e8) {
        double q = std::exp2(lgr) / p1;
        if (q > 0.95)
            throw precision_error("prime-expansion coefficients grow too fast for certified tail (rho/p >= 0.95)");
        double lg_beyond = lg_abs(e.coeffs[nmax]) + lgr - static_cast<double>(nmax + 1) * lg_p1 + lg_logp1_m +
                           std::log2(1.0 / (1.0 - std::max(q, 0.5))) + 4.0;
        if (lg_beyond > lg_eps)
            throw precision_error("prime-expansion tail above target precision at N_max = " +
                                  std::to_string(nmax) + "; increase N_max");
    }

    // stop once the suffix bound is negligible
    std::size_t n_stop = nmax + 1;
    for (std::size_t n = static_cast<std::size_t>(e.n0); n <= nmax; ++n)
        if (suffix[n] < lg_eps - 1) { n_stop = n; break; }

    BigReal acc = BigReal::with_digits(work);
    for (std::size_t n = static_cast<std::size_t>(e.n0); n < n_stop; ++n) {
        if (e.coeffs[n] == 0) continue;
        BigReal s = prime_log_power_sum(m, static_cast<unsigned>(n), e.excluded_primes, work);
        acc += BigReal::from_mpq(e.coeffs[n].get_mpq_t(), work) * s;
    }

    if (add_back_excluded) {
        for (std::uint32_t p : e.excluded_primes) {
            BigReal rv = (!e.den_p.empty())
                             ? BigReal::from_mpq(rat_eval_p(e.num_p, e.den_p, p).get_mpq_t(), work)
                             : series_value_at(e, p, digits);
            BigReal lp = BigReal::log_ui(p, work);
            BigReal lm = BigReal::from_ui(1, work);
            for (unsigned t = 0; t < m; ++t) lm *= lp;
            acc += rv * lm;
        }
    }
    return acc;
}

} // namespace

BigReal euler_sum(const PrimeExpansion& e, unsigned digits) { return sum_core(e, digits, true); }

BigReal euler_product(const PrimeExpansion& e, unsigned digits) {
    if (e.log_weight != 0) throw domain_error("euler_product expects log_weight 0");
    const unsigned work = digits + 10;
    // local factor 1 + R; positivity probe on small primes
    for (std::uint32_t p : primes_up_to(97)) {
        BigReal local;
        if (!e.den_p.empty()) {
            mpq_class v = rat_eval_p(e.num_p, e.den_p, p) + 1;
            local = BigReal::from_mpq(v.get_mpq_t(), work);
        } else {
            local = series_value_at(e, p, digits) + BigReal::from_ui(1, work);
        }
        if (!(local.sign() > 0))
            throw domain_error("euler_product: nonpositive local factor at p = " + std::to_string(p));
    }

    RatVec one_plus = e.coeffs;
    if (one_plus.empty()) one_plus.assign(1, mpq_class(0));
    one_plus[0] += 1;
    PrimeExpansion le;
    le.truncated = true;
    std::size_t log_order = std::max<std::size_t>(e.coeffs.size() - 1,
                                                  std::max<std::size_t>(1200, digits * 4 + 64));
    le.coeffs = rat_log(one_plus, log_order);
    le.log_weight = 0;
    le.excluded_primes = e.excluded_primes;
    std::size_t n0 = 0;
    while (n0 < le.coeffs.size() && le.coeffs[n0] == 0) ++n0;
    le.n0 = static_cast<int>(n0);
    if (le.n0 < 2) throw domain_error("euler_product: log expansion has a 1/p term (divergent product)");

    BigReal r = exp(sum_core(le, digits, false));
    for (std::uint32_t p : e.excluded_primes) {
        BigReal local;
        if (!e.den_p.empty()) {
            mpq_class v = rat_eval_p(e.num_p, e.den_p, p) + 1;
            local = BigReal::from_mpq(v.get_mpq_t(), work);
        } else {
            local = series_value_at(e, p, digits) + BigReal::from_ui(1, work);
        }
        r *= local;
    }
    return r;
}

} // namespace divcor
