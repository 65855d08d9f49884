#include "divcor/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "divcor/errors.hpp"

namespace divcor {

const mpq_class& bernoulli_2j(unsigned j) {
    static std::vector<mpq_class> even; // B_0, B_2, B_4, ...
    static std::vector<mpq_class> all;  // B_0, B_1, B_2, ...
    static std::mutex mx;
    std::lock_guard<std::mutex> lk(mx);
    while (even.size() <= j) {
        if (all.empty()) { all.emplace_back(1); even.emplace_back(1); continue; }
        // sum_{i=0}^{m} C(m+1, i) B_i = 0  =>  B_m
        std::size_t m = all.size();
        mpq_class acc(0);
        mpz_class binom(1);
        for (std::size_t i = 0; i < m; ++i) {
            // binom = C(m+1, i)
            if (i == 0) binom = 1;
            else binom = binom * static_cast<long>(m + 2 - i) / static_cast<long>(i);
            acc += mpq_class(binom) * all[i];
        }
        mpq_class bm = -acc / mpq_class(static_cast<long>(m + 1));
        bm.canonicalize();
        all.push_back(bm);
        if (m % 2 == 0) even.push_back(bm);
    }
    return even[j];
}

namespace {

// ---- scalar shims so one jet implementation serves BigReal and BigComplex

struct RealOps {
    using S = BigReal;
    static S zero(unsigned d) { return BigReal::with_digits(d); }
    static S from_real(const BigReal& x) { return x; }
    static S pow_neg(unsigned long n, const BigReal& s0, unsigned digits) {
        // n^{-s0}
        BigReal b = BigReal::from_ui(n, digits);
        BigReal r = pow(b, -s0);
        return r;
    }
    static double abs_d(const S& x) { return std::fabs(x.to_double()); }
    static S inv(const S& x, unsigned digits) { return BigReal::from_ui(1, digits) / x; }
    static S mul_real(const S& a, const BigReal& b) { return a * b; }
};

struct ComplexOps {
    using S = BigComplex;
    static S zero(unsigned d) { return BigComplex::zero(d); }
    static S from_real(const BigReal& x) { return BigComplex(x, BigReal(x.prec_bits())); }
    static S pow_neg(unsigned long n, const BigComplex& s0, unsigned digits) {
        return neg_cpow(n, s0, digits);
    }
    static double abs_d(const S& x) { return std::sqrt(norm2(x).to_double()); }
    static S inv(const S& x, unsigned digits) {
        return BigComplex(BigReal::from_ui(1, digits), BigReal::with_digits(digits)) / x;
    }
    static S mul_real(const S& a, const BigReal& b) { return a * b; }
};

template <class Ops>
std::vector<typename Ops::S> jet_mul(const std::vector<typename Ops::S>& a,
                                     const std::vector<typename Ops::S>& b,
                                     unsigned order, unsigned digits) {
    std::vector<typename Ops::S> r(order + 1, Ops::zero(digits));
    for (unsigned i = 0; i < a.size() && i <= order; ++i)
        for (unsigned j = 0; j + i <= order && j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

// exp(-eps * ln n) coefficients as reals: (-ln n)^m / m!
std::vector<BigReal> exp_jet_coeffs(const BigReal& lnn, unsigned order, unsigned digits) {
    std::vector<BigReal> e(order + 1, BigReal::with_digits(digits));
    e[0] = BigReal::from_ui(1, digits);
    for (unsigned m = 1; m <= order; ++m) {
        e[m] = e[m - 1] * (-lnn);
        e[m] /= static_cast<unsigned long>(m);
    }
    return e;
}

template <class Ops>
std::vector<typename Ops::S> em_jet(const typename Ops::S& s0, double sigma0, double abs_s0,
                                    double imag_abs, unsigned order, unsigned digits, bool reg1) {
    using S = typename Ops::S;
    const unsigned work = digits + 10;
    const double eps_log10 = -(static_cast<double>(digits) + 6.0);

    unsigned N = std::max<unsigned>(32, static_cast<unsigned>(digits * 0.6 + imag_abs * 2 + order * 4));
    for (int attempt = 0; attempt < 5; ++attempt, N *= 2) {
        std::vector<S> acc(order + 1, Ops::zero(work));
        // partial sum over n < N
        for (unsigned long n = 1; n < N; ++n) {
            S c = Ops::pow_neg(n, s0, work);
            if (n == 1) { acc[0] += c; continue; }
            BigReal lnn = BigReal::log_ui(n, work);
            BigReal pw = BigReal::from_ui(1, work);
            for (unsigned m = 0; m <= order; ++m) {
                acc[m] += Ops::mul_real(c, pw);
                if (m < order) { pw *= -lnn; pw /= static_cast<unsigned long>(m + 1); }
            }
        }
        BigReal lnN = BigReal::log_ui(N, work);
        std::vector<BigReal> eN = exp_jet_coeffs(lnN, order, work);
        S NpowS = Ops::pow_neg(N, s0, work); // N^{-s0}

        // pole term
        if (reg1) {
            // (N^{-eps} - 1)/eps : coefficient m is (-lnN)^{m+1}/(m+1)!
            BigReal pw = -lnN;
            for (unsigned m = 0; m <= order; ++m) {
                acc[m] += Ops::from_real(pw);
                pw *= -lnN;
                pw /= static_cast<unsigned long>(m + 2);
            }
        } else {
            // N^{1-s0} e_N(eps) / (s0 - 1 + eps); inverse of the linear jet is
            // i0 * (-i0)^m with i0 = 1/(s0-1).
            S one = Ops::from_real(BigReal::from_ui(1, work));
            S i0 = Ops::inv(s0 - one, work);
            std::vector<S> invj(order + 1, Ops::zero(work));
            S cur = i0;
            for (unsigned m = 0; m <= order; ++m) {
                invj[m] = cur;
                cur = cur * (-i0);
            }
            std::vector<S> en(order + 1, Ops::zero(work));
            for (unsigned m = 0; m <= order; ++m) en[m] = Ops::from_real(eN[m]);
            std::vector<S> pole = jet_mul<Ops>(invj, en, order, work);
            BigReal Nreal = BigReal::from_ui(N, work);
            for (unsigned m = 0; m <= order; ++m) acc[m] += Ops::mul_real(pole[m] * NpowS, Nreal);
        }

        // + N^{-s0} e_N / 2
        {
            BigReal half = BigReal::from_ui(1, work) / 2ul;
            for (unsigned m = 0; m <= order; ++m) acc[m] += Ops::mul_real(NpowS, eN[m] * half);
        }

        // Bernoulli corrections
        std::vector<S> Q(order + 1, Ops::zero(work)); // product of (s0 + i + eps)
        Q[0] = s0;
        if (order >= 1) Q[1] = Ops::from_real(BigReal::from_ui(1, work));
        BigReal Npow = BigReal::from_ui(1, work) / BigReal::from_ui(N, work); // N^{1-2j} for j=1
        bool certified = false;
        double prev_mag = 1e300;
        unsigned J = 1;
        const unsigned Jmax = 420;
        std::vector<S> omitted;
        for (; J <= Jmax; ++J) {
            // term_j = B_2j/(2j)! * Q * N^{-s0-2j+1} e_N
            BigReal bf = BigReal::from_mpq(bernoulli_2j(J).get_mpq_t(), work);
            // divide by (2j)!
            for (unsigned t = 1; t <= 2 * J; ++t) bf /= static_cast<unsigned long>(t);
            std::vector<S> term(order + 1, Ops::zero(work));
            for (unsigned m = 0; m <= order; ++m) {
                S q_en = Ops::zero(work);
                for (unsigned i = 0; i <= m; ++i) q_en += Ops::mul_real(Q[i], eN[m - i]);
                term[m] = Ops::mul_real(q_en * NpowS, bf * Npow);
            }
            double mag = 0;
            for (auto& t : term) mag = std::max(mag, Ops::abs_d(t));
            double target = std::pow(10.0, eps_log10) * std::max(1.0, Ops::abs_d(acc[0]));
            if (mag * 64.0 * (abs_s0 + 2.0 * J + 2.0) / std::max(1.0, sigma0 + 2.0 * J + 1.0) < target) {
                certified = true;
                break;
            }
            if (mag > prev_mag) break; // divergence onset: enlarge N
            prev_mag = mag;
            for (unsigned m = 0; m <= order; ++m) acc[m] += term[m];
            // extend Q by (s0 + (2j-1) + eps)(s0 + 2j + eps)
            for (int rep = 0; rep < 2; ++rep) {
                unsigned off = 2 * J - 1 + static_cast<unsigned>(rep);
                S s_off = s0 + Ops::from_real(BigReal::from_ui(off, work));
                std::vector<S> nq(order + 1, Ops::zero(work));
                for (unsigned m = 0; m <= order; ++m) {
                    nq[m] = Q[m] * s_off;
                    if (m >= 1) nq[m] += Q[m - 1];
                }
                Q = std::move(nq);
            }
            Npow /= static_cast<unsigned long>(N);
            Npow /= static_cast<unsigned long>(N);
        }
        if (certified) return acc;
    }
    throw precision_error("Euler-Maclaurin zeta failed to certify at requested precision");
}

std::vector<std::vector<BigReal>>& stieltjes_cache(unsigned digits) {
    static std::map<unsigned, std::vector<std::vector<BigReal>>> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> lk(mx);
    return cache[digits];
}

} // namespace

std::vector<BigReal> zeta_jet(const BigReal& s0, unsigned order, unsigned digits, bool regularized_at_one) {
    if (regularized_at_one && !(s0 == BigReal::from_ui(1, digits)))
        throw domain_error("regularized zeta jet requires s0 = 1");
    if (!regularized_at_one && s0 == BigReal::from_ui(1, digits))
        throw domain_error("zeta has a pole at s = 1");
    return em_jet<RealOps>(s0, s0.to_double(), std::fabs(s0.to_double()), 0.0, order, digits, regularized_at_one);
}

std::vector<BigComplex> zeta_jet(const BigComplex& s0, unsigned order, unsigned digits) {
    double re = s0.re.to_double(), im = s0.im.to_double();
    if (im == 0 && re == 1.0 && s0.im.is_zero()) throw domain_error("zeta has a pole at s = 1");
    return em_jet<ComplexOps>(s0, re, std::hypot(re, im), std::fabs(im), order, digits, false);
}

static void check_zeta_domain(double re, double ab) {
    if (re <= -2.0) throw domain_error("zeta: Re s <= -2 outside supported domain");
    if (ab > 100.0) throw domain_error("zeta: |s| > 100 outside supported domain");
}

BigComplex zeta(const BigComplex& s, unsigned digits) {
    double re = s.re.to_double(), im = s.im.to_double();
    if (s.im.is_zero() && s.re == BigReal::from_ui(1, digits)) throw domain_error("zeta pole at s = 1");
    check_zeta_domain(re, std::hypot(re, im));
    return zeta_jet(s, 0, digits)[0];
}

BigReal zeta(const BigReal& s, unsigned digits) {
    if (s == BigReal::from_ui(1, digits)) throw domain_error("zeta pole at s = 1");
    check_zeta_domain(s.to_double(), std::fabs(s.to_double()));
    return zeta_jet(s, 0, digits)[0];
}

BigComplex zeta_derivative(unsigned m, const BigComplex& s, unsigned digits) {
    if (m > 12) throw domain_error("zeta_derivative: order too large");
    auto j = zeta_jet(s, m, digits);
    BigReal f = BigReal::from_ui(1, digits);
    for (unsigned t = 2; t <= m; ++t) f *= static_cast<unsigned long>(t);
    return j[m] * f;
}

BigReal zeta_derivative(unsigned m, const BigReal& s, unsigned digits) {
    if (m > 12) throw domain_error("zeta_derivative: order too large");
    auto j = zeta_jet(s, m, digits);
    BigReal f = BigReal::from_ui(1, digits);
    for (unsigned t = 2; t <= m; ++t) f *= static_cast<unsigned long>(t);
    return j[m] * f;
}

BigReal stieltjes(unsigned m, unsigned digits) {
    if (m > 40) throw domain_error("stieltjes: order above cached range");
    auto& slot = stieltjes_cache(digits);
    static std::mutex mx;
    std::lock_guard<std::mutex> lk(mx);
    if (slot.empty()) {
        unsigned order = 40;
        auto jet = zeta_jet(BigReal::from_ui(1, digits), order, digits, true);
        std::vector<BigReal> gam;
        BigReal fact = BigReal::from_ui(1, digits);
        for (unsigned i = 0; i <= order; ++i) {
            if (i >= 2) fact *= static_cast<unsigned long>(i);
            BigReal g = jet[i] * fact;
            if (i % 2 == 1) g = -g;
            gam.push_back(g);
        }
        slot.push_back(std::move(gam));
    }
    return slot[0][m];
}

std::vector<BigReal> log_zeta_jet(const BigReal& s0, unsigned order, unsigned digits) {
    auto a = zeta_jet(s0, order, digits);
    // log of a jet with a[0] > 0:
    // g_0 = log a_0 ; g_n = a_n/a_0 - (1/n) sum_{k=1}^{n-1} k g_k a_{n-k} / a_0
    std::vector<BigReal> g(order + 1, BigReal::with_digits(digits));
    g[0] = log(a[0]);
    for (unsigned n = 1; n <= order; ++n) {
        BigReal acc = a[n];
        for (unsigned k = 1; k < n; ++k) {
            BigReal t = g[k] * a[n - k];
            t *= static_cast<unsigned long>(k);
            t /= static_cast<unsigned long>(n);
            acc -= t;
        }
        g[n] = acc / a[0];
    }
    return g;
}

} // namespace divcor
