#include "divcor/series.hpp"

#include <algorithm>
#include <sstream>

#include "divcor/errors.hpp"
#include "divcor/zeta.hpp"

namespace divcor {

// ---------------------------------------------------------------- LPoly

void LPoly::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

LPoly& LPoly::operator+=(const LPoly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), BigReal());
    for (std::size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
    return *this;
}

LPoly operator*(const LPoly& a, const LPoly& b) {
    LPoly r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, BigReal());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
}

LPoly operator*(const LPoly& a, const BigReal& s) {
    LPoly r = a;
    for (auto& x : r.c) x *= s;
    return r;
}

LPoly LPoly::operator-() const {
    LPoly r = *this;
    for (auto& x : r.c) x = -x;
    return r;
}

BigReal LPoly::eval(const BigReal& L) const {
    BigReal r(L.prec_bits());
    for (std::size_t i = c.size(); i-- > 0;) {
        r *= L;
        r += c[i];
    }
    return r;
}

std::string LogPolynomial::to_json(unsigned sig_digits) const {
    std::ostringstream os;
    os << "{\"degree\":" << degree << ",\"coefficients\":[";
    for (int i = 0; i <= degree; ++i) {
        if (i) os << ",";
        os << '"' << (i < static_cast<int>(coeffs.size()) ? coeffs[i].to_string(sig_digits) : "0") << '"';
    }
    os << "],\"log_base\":\"natural\"}";
    return os.str();
}

BigReal LogPolynomial::eval_at_logx(const BigReal& L) const {
    BigReal r(L.prec_bits());
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        r *= L;
        r += coeffs[i];
    }
    return r;
}

// ---------------------------------------------------------------- MSeries

namespace {

inline bool ring_zero(const BigReal& x) { return x.is_zero(); }
inline bool ring_zero(const LPoly& x) { return x.is_zero(); }

inline void check_same_vars(const std::vector<VarWindow>& a, const std::vector<VarWindow>& b) {
    if (a.size() != b.size()) throw domain_error("series variable lists differ");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].name != b[i].name) throw domain_error("series variable lists differ");
}

} // namespace

template <class C>
void MSeries<C>::add_term(const Key& k, C v) {
    if (k.size() != vars_.size()) throw domain_error("exponent arity mismatch");
    for (std::size_t i = 0; i < k.size(); ++i)
        if (k[i] < vars_[i].min_e || k[i] > vars_[i].max_valid) return; // outside window
    if (ring_zero(v)) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, std::move(v));
    } else {
        it->second += v;
        if (ring_zero(it->second)) terms_.erase(it);
    }
}

template <class C>
MSeries<C>& MSeries<C>::operator+=(const MSeries& o) {
    check_same_vars(vars_, o.vars_);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        vars_[i].min_e = std::min(vars_[i].min_e, o.vars_[i].min_e);
        vars_[i].max_valid = std::min(vars_[i].max_valid, o.vars_[i].max_valid);
    }
    for (auto& [k, v] : o.terms_) add_term(k, v);
    return *this;
}

template <class C>
std::vector<int> MSeries<C>::support_min() const {
    std::vector<int> lo(vars_.size(), 0);
    bool first = true;
    for (auto& [k, v] : terms_) {
        for (std::size_t i = 0; i < k.size(); ++i)
            lo[i] = first ? k[i] : std::min(lo[i], k[i]);
        first = false;
    }
    return lo;
}

template <class C>
MSeries<C> MSeries<C>::mul(const MSeries& a, const MSeries& b) {
    check_same_vars(a.vars_, b.vars_);
    MSeries r;
    r.vars_ = a.vars_;
    std::vector<int> alo = a.support_min(), blo = b.support_min();
    for (std::size_t i = 0; i < r.vars_.size(); ++i) {
        r.vars_[i].min_e = alo[i] + blo[i];
        // completeness: e <= min(a.valid + b.lo, b.valid + a.lo)
        r.vars_[i].max_valid =
            std::min(a.vars_[i].max_valid + blo[i], b.vars_[i].max_valid + alo[i]);
    }
    Key k(r.vars_.size());
    for (auto& [ka, va] : a.terms_)
        for (auto& [kb, vb] : b.terms_) {
            bool ok = true;
            for (std::size_t i = 0; i < k.size(); ++i) {
                k[i] = ka[i] + kb[i];
                if (k[i] > r.vars_[i].max_valid || k[i] < r.vars_[i].min_e) { ok = false; break; }
            }
            if (ok) r.add_term(k, va * vb);
        }
    return r;
}

template <class C>
MSeries<C> MSeries<C>::clamped(const std::vector<VarWindow>& w) const {
    check_same_vars(vars_, w);
    MSeries r;
    r.vars_ = w;
    for (std::size_t i = 0; i < w.size(); ++i)
        r.vars_[i].max_valid = std::min(w[i].max_valid, vars_[i].max_valid);
    for (auto& [k, v] : terms_) r.add_term(k, v);
    return r;
}

template <class C>
MSeries<C> MSeries<C>::negate() const {
    MSeries r(vars_);
    for (auto& [k, v] : terms_) r.terms_.emplace(k, -v);
    return r;
}

template <class C>
MSeries<C> MSeries<C>::scale(const C& s) const {
    MSeries r(vars_);
    if (ring_zero(s)) return r;
    for (auto& [k, v] : terms_) {
        C t = v * s;
        if (!ring_zero(t)) r.terms_.emplace(k, std::move(t));
    }
    return r;
}

template <class C>
C MSeries<C>::coefficient(const Key& k) const {
    if (k.size() != vars_.size()) throw domain_error("exponent arity mismatch");
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] > vars_[i].max_valid || k[i] < vars_[i].min_e) {
            throw truncation_error("coefficient at " + vars_[i].name + "^" + std::to_string(k[i]) +
                                   " outside validity [" + std::to_string(vars_[i].min_e) + ", " +
                                   std::to_string(vars_[i].max_valid) + "]");
        }
    }
    auto it = terms_.find(k);
    if (it != terms_.end()) return it->second;
    return C{};
}

template class MSeries<BigReal>;
template class MSeries<LPoly>;

// --------------------------------------------------- scalar-series algebra

SeriesR series_inverse(const SeriesR& a, unsigned digits) {
    std::vector<int> zero_key(a.nvars(), 0);
    for (auto& [k, v] : a.terms())
        for (int e : k)
            if (e < 0) throw singularity_error("series inverse: negative exponents present");
    const BigReal* c = a.find(zero_key);
    if (!c || c->is_zero()) throw singularity_error("series inverse: zero constant term");
    BigReal inv_c = BigReal::from_ui(1, digits) / *c;
    // A = c(1 + N); 1/A = (1/c) sum_j (-N)^j
    SeriesR n = a.scale(inv_c);
    SeriesR acc(a.vars());
    acc.add_term(zero_key, BigReal::from_ui(1, digits));
    {
        // N = A/c - 1 : drop the constant 1
        SeriesR n2(n.vars());
        for (auto& [k, v] : n.terms())
            if (k != zero_key) n2.add_term(k, v);
        n = std::move(n2);
    }
    SeriesR pw = n;
    for (int j = 1; j <= 512 && !pw.empty(); ++j) {
        if (j % 2 == 1) acc += pw.negate();
        else acc += pw;
        pw = SeriesR::mul(pw, n).clamped(a.vars());
    }
    if (!pw.empty()) throw truncation_error("series inverse did not terminate within the window");
    return acc.scale(inv_c);
}

SeriesR series_div(const SeriesR& a, const SeriesR& b, unsigned digits) {
    return SeriesR::mul(a, series_inverse(b, digits));
}

SeriesR series_log(const SeriesR& a, unsigned digits) {
    std::vector<int> zero_key(a.nvars(), 0);
    const BigReal* c = a.find(zero_key);
    if (!c || !(abs(*c - BigReal::from_ui(1, digits)) < BigReal::eps10(static_cast<long>(digits), digits)))
        throw domain_error("series log requires constant term 1");
    SeriesR n(a.vars());
    for (auto& [k, v] : a.terms())
        if (k != zero_key) n.add_term(k, v);
    SeriesR acc(a.vars());
    SeriesR pw = n;
    for (int j = 1; j <= 512 && !pw.empty(); ++j) {
        BigReal coef = BigReal::from_ui(1, digits) / static_cast<unsigned long>(j);
        if (j % 2 == 0) coef = -coef;
        acc += pw.scale(coef);
        pw = SeriesR::mul(pw, n).clamped(a.vars());
    }
    if (!pw.empty()) throw truncation_error("series log did not terminate within the window");
    return acc;
}

SeriesR series_exp(const SeriesR& a, unsigned digits) {
    std::vector<int> zero_key(a.nvars(), 0);
    if (a.find(zero_key)) throw domain_error("series exp expects zero constant term");
    for (auto& [k, v] : a.terms())
        for (int e : k)
            if (e < 0) throw domain_error("series exp: negative exponents present");
    SeriesR acc(a.vars());
    acc.add_term(zero_key, BigReal::from_ui(1, digits));
    SeriesR pw = a;
    BigReal fact = BigReal::from_ui(1, digits);
    for (int j = 1; j <= 512 && !pw.empty(); ++j) {
        acc += pw.scale(BigReal::from_ui(1, digits) / fact);
        fact *= static_cast<unsigned long>(j + 1);
        pw = SeriesR::mul(pw, a).clamped(a.vars());
    }
    if (!pw.empty()) throw truncation_error("series exp did not terminate within the window");
    return acc;
}

// --------------------------------------------------------- constructors

namespace {

// multinomial powers of a linear form sum c_i x_i restricted to windows
SeriesR linear_form_series(const std::vector<VarWindow>& vars, const std::vector<int>& form,
                           unsigned digits) {
    SeriesR z{vars};
    for (std::size_t i = 0; i < form.size(); ++i) {
        if (form[i] == 0) continue;
        std::vector<int> k(vars.size(), 0);
        k[i] = 1;
        z.add_term(k, BigReal::from_si(form[i], digits));
    }
    return z;
}

} // namespace

SeriesR zeta_laurent(const std::vector<VarWindow>& vars, const std::vector<int>& form,
                     unsigned digits) {
    if (form.size() != vars.size()) throw domain_error("zeta_laurent: form arity mismatch");
    int dom = -1;
    for (std::size_t i = 0; i < form.size(); ++i)
        if (form[i] != 0) { dom = static_cast<int>(i); break; }
    if (dom < 0) throw domain_error("zeta_laurent: zero linear form");

    SeriesR out{vars};

    // 1/z part: z = c_d x_d (1 + rho), rho = sum over later (smaller)
    // variables of (c_i/c_d) x_i/x_d; 1/z = (1/c_d) x_d^{-1} sum_j (-rho)^j.
    // Expanded explicitly so nothing inside the window box is lost to
    // intermediate truncation.
    {
        std::vector<std::pair<std::size_t, long>> inner; // (var index, c_i)
        for (std::size_t i = dom + 1; i < form.size(); ++i)
            if (form[i] != 0) inner.emplace_back(i, form[i]);
        mpq_class inv_cd(1, form[dom]);
        int jmax = std::max(0, -1 - vars[dom].min_e);
        std::vector<int> comp(inner.size(), 0);
        for (int j = 0; j <= jmax; ++j) {
            if (inner.empty()) {
                if (j == 0) {
                    std::vector<int> k(vars.size(), 0);
                    k[dom] = -1;
                    out.add_term(k, BigReal::from_mpq(inv_cd.get_mpq_t(), digits));
                }
                continue;
            }
            // (-rho)^j = sum over compositions (t_1..t_m) of j of
            //   j!/prod t_i! * prod (-c_i/c_d)^{t_i} * x_d^{-j} prod x_i^{t_i}
            mpq_class fj(1);
            for (int t = 2; t <= j; ++t) fj *= t;
            std::function<void(std::size_t, int, mpq_class)> rec =
                [&](std::size_t idx, int left, mpq_class coef) {
                    if (idx + 1 == inner.size()) {
                        comp[idx] = left;
                        mpq_class c = coef;
                        for (int t = 1; t <= left; ++t) {
                            c *= -inner[idx].second;
                            c *= inv_cd;
                            c /= t;
                        }
                        std::vector<int> k(vars.size(), 0);
                        k[dom] = -1 - j;
                        for (std::size_t t = 0; t < inner.size(); ++t) k[inner[t].first] = comp[t];
                        c *= inv_cd; // the leading 1/c_d
                        out.add_term(k, BigReal::from_mpq(c.get_mpq_t(), digits));
                        return;
                    }
                    mpq_class c = coef;
                    for (int take = 0; take <= left; ++take) {
                        comp[idx] = take;
                        rec(idx + 1, left - take, c);
                        c *= -inner[idx].second;
                        c *= inv_cd;
                        c /= (take + 1);
                    }
                };
            rec(0, j, fj);
        }
    }

    // entire part: sum_{n>=0} (-1)^n gamma_n / n! z^n (z^n has nonnegative
    // exponents, so repeated multiplication cannot tighten validity)
    {
        SeriesR z = linear_form_series(vars, form, digits);
        SeriesR pw{vars};
        pw.add_term(std::vector<int>(vars.size(), 0), BigReal::from_ui(1, digits));
        BigReal fact = BigReal::from_ui(1, digits);
        for (int n = 0; n <= 64; ++n) {
            if (pw.empty()) break;
            BigReal g = stieltjes(static_cast<unsigned>(n), digits) / fact;
            if (n % 2 == 1) g = -g;
            out += pw.scale(g);
            fact *= static_cast<unsigned long>(n + 1);
            pw = SeriesR::mul(pw, z).clamped(vars);
        }
    }
    return out;
}

SeriesR measure_inverse(const std::vector<VarWindow>& vars, long k0, const std::vector<int>& form,
                        unsigned digits) {
    if (k0 == 0) throw domain_error("measure_inverse: zero constant");
    SeriesR a = linear_form_series(vars, form, digits);
    a.add_term(std::vector<int>(vars.size(), 0), BigReal::from_si(k0, digits));
    return series_inverse(a, digits);
}

SeriesL x_power(const std::vector<VarWindow>& vars, const std::vector<mpq_class>& form,
                unsigned digits) {
    if (form.size() != vars.size()) throw domain_error("x_power: form arity mismatch");
    SeriesL out{vars};
    // enumerate alpha within the nonnegative part of the windows
    std::vector<int> hi(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) hi[i] = std::max(0, vars[i].max_valid);
    std::vector<int> alpha(vars.size(), 0);
    while (true) {
        // coefficient: L^{|alpha|} prod (q_i^{alpha_i} / alpha_i!)
        mpq_class q(1);
        long tot = 0;
        bool zero = false;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            for (int t = 0; t < alpha[i]; ++t) {
                if (form[i] == 0) { zero = true; break; }
                q *= form[i];
                q /= static_cast<long>(t + 1);
            }
            if (zero) break;
            tot += alpha[i];
        }
        if (!zero) {
            LPoly lp;
            lp.c.assign(static_cast<std::size_t>(tot) + 1, BigReal());
            lp.c[static_cast<std::size_t>(tot)] = BigReal::from_mpq(q.get_mpq_t(), digits);
            out.add_term(alpha, std::move(lp));
        }
        // next alpha
        std::size_t i = 0;
        for (; i < vars.size(); ++i) {
            if (alpha[i] < hi[i]) { ++alpha[i]; break; }
            alpha[i] = 0;
        }
        if (i == vars.size()) break;
    }
    return out;
}

SeriesL promote(const SeriesR& a) {
    SeriesL r{a.vars()};
    for (auto& [k, v] : a.terms()) r.add_term(k, LPoly(v));
    return r;
}

SeriesL mul_rl(const SeriesR& a, const SeriesL& b) { return SeriesL::mul(promote(a), b); }

LPoly iterated_residue(const SeriesL& f) {
    std::vector<int> k(f.nvars(), -1);
    return f.coefficient(k);
}

LPoly iterated_residue(const SeriesR& f) {
    std::vector<int> k(f.nvars(), -1);
    return LPoly(f.coefficient(k));
}

LogPolynomial to_log_polynomial(const LPoly& p, int degree, const BigReal& tol) {
    for (std::size_t i = degree + 1; i < p.c.size(); ++i)
        if (!(abs(p.c[i]) < tol))
            throw truncation_error("sentinel L^" + std::to_string(i) + " coefficient above tolerance: " +
                                   p.c[i].to_string(6));
    LogPolynomial out;
    out.degree = degree;
    out.coeffs.assign(p.c.begin(), p.c.begin() + std::min<std::size_t>(p.c.size(), degree + 1));
    while (static_cast<int>(out.coeffs.size()) <= degree) out.coeffs.push_back(BigReal());
    return out;
}

} // namespace divcor
