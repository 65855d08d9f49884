#pragma once

// Truncated multivariate Laurent series and iterated residue extraction.
//
// Variables are ordered outermost first: on the nested contours the
// outermost variable has the largest radius, and expansions of mixed linear
// forms like 1/(w1 + w2 - s + 1) are geometric in the smaller variables over
// the dominant (outermost-present) one. Extracting the all-(-1) coefficient
// innermost-first then reproduces the iterated residue.
//
// Each variable carries a validity window [min_e, max_valid]: coefficients
// outside are unknown (truncated), and multiplication combines windows so a
// later extraction either is provably complete or raises truncation_error.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "divcor/bigfloat.hpp"

namespace divcor {

// Polynomial in L = log X with BigReal coefficients (constant-term first).
struct LPoly {
    std::vector<BigReal> c;

    LPoly() = default;
    explicit LPoly(BigReal v) { c.push_back(std::move(v)); }

    bool is_zero() const {
        for (auto& x : c)
            if (!x.is_zero()) return false;
        return true;
    }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    void trim();

    LPoly& operator+=(const LPoly& o);
    friend LPoly operator*(const LPoly& a, const LPoly& b);
    friend LPoly operator*(const LPoly& a, const BigReal& s);
    LPoly operator-() const;

    BigReal eval(const BigReal& L) const;
};

struct VarWindow {
    std::string name;
    int min_e;
    int max_valid;
};

struct LogPolynomial {
    int degree = 0;
    std::vector<BigReal> coeffs; // constant-term first
    std::string to_json(unsigned sig_digits) const;
    BigReal eval_at_logx(const BigReal& L) const;
};

template <class C>
class MSeries {
  public:
    using Key = std::vector<int>;

    MSeries() = default;
    explicit MSeries(std::vector<VarWindow> vars) : vars_(std::move(vars)) {}

    const std::vector<VarWindow>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::map<Key, C>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add_term(const Key& k, C v);
    const C* find(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? nullptr : &it->second;
    }

    MSeries& operator+=(const MSeries& o);
    // Restrict to the given windows (drop outside terms, cap validity).
    MSeries clamped(const std::vector<VarWindow>& w) const;
    friend MSeries operator+(MSeries a, const MSeries& b) { a += b; return a; }
    friend MSeries operator*(const MSeries& a, const MSeries& b) { return mul(a, b); }
    static MSeries mul(const MSeries& a, const MSeries& b);
    MSeries negate() const;
    MSeries scale(const C& s) const;

    // Completed coefficient at the given exponents; truncation_error outside
    // the tracked validity.
    C coefficient(const Key& k) const;

    // lowest exponent present per variable (window min if empty)
    std::vector<int> support_min() const;

  private:
    std::vector<VarWindow> vars_;
    std::map<Key, C> terms_;
    friend class SeriesOps;
};

using SeriesR = MSeries<BigReal>;   // scalar coefficients
using SeriesL = MSeries<LPoly>;     // L-polynomial coefficients

// Scalar-series algebra. inverse/exp require nonnegative exponents; log
// requires constant term 1 (factor out the constant first).
SeriesR series_inverse(const SeriesR& a, unsigned digits);
SeriesR series_div(const SeriesR& a, const SeriesR& b, unsigned digits);
SeriesR series_log(const SeriesR& a, unsigned digits);
SeriesR series_exp(const SeriesR& a, unsigned digits);

// zeta(1 + sum_i c_i x_i) within the given windows; c_i integers, not all 0.
SeriesR zeta_laurent(const std::vector<VarWindow>& vars, const std::vector<int>& form,
                     unsigned digits);

// 1 / (k0 + sum_i c_i x_i) with k0 != 0 (measure factors like 1/s = 1/(1+u)).
SeriesR measure_inverse(const std::vector<VarWindow>& vars, long k0, const std::vector<int>& form,
                        unsigned digits);

// exp(L * sum_i q_i x_i); rational q_i. Coefficient of x^alpha is
// L^{|alpha|} prod q_i^{alpha_i}/alpha_i!.
SeriesL x_power(const std::vector<VarWindow>& vars, const std::vector<mpq_class>& form,
                unsigned digits);

SeriesL promote(const SeriesR& a);
SeriesL mul_rl(const SeriesR& a, const SeriesL& b);

// Coefficient of all-(-1); the LPoly multiplying X^{value at the expansion
// point} after specializing the measure/x-power factors.
LPoly iterated_residue(const SeriesL& f);
LPoly iterated_residue(const SeriesR& f); // degenerate: scalar result as LPoly

// Convert an LPoly known to have tiny spill beyond `degree` into a
// LogPolynomial, checking the sentinel coefficients stay below tol.
LogPolynomial to_log_polynomial(const LPoly& p, int degree, const BigReal& tol);

} // namespace divcor
