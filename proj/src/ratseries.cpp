#include "divcor/ratseries.hpp"

namespace divcor {

RatVec rat_mul(const RatVec& a, const RatVec& b, std::size_t order) {
    RatVec r(order + 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
        if (a[i] == 0) continue;
        std::size_t jmax = std::min(b.size() - 1, order - i);
        for (std::size_t j = 0; j <= jmax; ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

RatVec rat_div(const RatVec& a, const RatVec& b, std::size_t order) {
    if (b.empty() || b[0] == 0) throw singularity_error("rational series division by series with zero constant term");
    RatVec q(order + 1, mpq_class(0));
    for (std::size_t n = 0; n <= order; ++n) {
        mpq_class acc = n < a.size() ? a[n] : mpq_class(0);
        std::size_t kmax = std::min(n, b.size() - 1);
        for (std::size_t k = 1; k <= kmax; ++k) acc -= b[k] * q[n - k];
        q[n] = acc / b[0];
    }
    return q;
}

RatVec rat_log(const RatVec& a, std::size_t order) {
    if (a.empty() || a[0] != 1) throw domain_error("rat_log requires constant term 1");
    // g_n = a_n - (1/n) sum_{k=1}^{n-1} k g_k a_{n-k}
    RatVec g(order + 1, mpq_class(0));
    for (std::size_t n = 1; n <= order; ++n) {
        mpq_class acc = n < a.size() ? a[n] : mpq_class(0);
        for (std::size_t k = 1; k < n; ++k) {
            std::size_t j = n - k;
            if (j < a.size() && a[j] != 0 && g[k] != 0)
                acc -= mpq_class(static_cast<long>(k)) * g[k] * a[j] / mpq_class(static_cast<long>(n));
        }
        g[n] = acc;
    }
    return g;
}

RatVec rat_from_p_rational(const RatVec& num_p, const RatVec& den_p, std::size_t order) {
    if (den_p.empty() || den_p.back() == 0) throw domain_error("denominator must have nonzero leading coefficient");
    if (num_p.empty()) return RatVec(order + 1, mpq_class(0));
    if (num_p.size() > den_p.size()) throw domain_error("p-rational must vanish at infinity (deg num < deg den expected)");
    std::size_t dn = num_p.size() - 1, dd = den_p.size() - 1;
    // num(1/x)/den(1/x) = x^{dd-dn} * rev(num)(x)/rev(den)(x)
    RatVec nr(num_p.rbegin(), num_p.rend());
    RatVec dr(den_p.rbegin(), den_p.rend());
    RatVec q = rat_div(nr, dr, order);
    std::size_t shift = dd - dn;
    RatVec out(order + 1, mpq_class(0));
    for (std::size_t i = 0; i + shift <= order; ++i) out[i + shift] = q[i];
    return out;
}

mpq_class poly_eval_ui(const RatVec& poly, unsigned long x) {
    mpq_class r(0);
    for (std::size_t i = poly.size(); i-- > 0;) {
        r *= static_cast<long>(x);
        r += poly[i];
    }
    return r;
}

mpq_class rat_eval_p(const RatVec& num_p, const RatVec& den_p, unsigned long p) {
    mpq_class d = poly_eval_ui(den_p, p);
    if (d == 0) throw domain_error("denominator vanishes at p");
    return poly_eval_ui(num_p, p) / d;
}

} // namespace divcor
