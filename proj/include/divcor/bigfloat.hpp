#pragma once

// Arbitrary-precision real/complex scalars on top of MPFR.
//
// Precision is carried per value, in bits; public constructors take decimal
// digits and add guard bits. Binary operations produce results at the larger
// of the two operand precisions, so precision never silently degrades.

#include <gmp.h>
#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

#include "divcor/errors.hpp"

namespace divcor {

inline mpfr_prec_t bits_for_digits(unsigned digits) {
    // 10^d needs d*log2(10) bits; 32 guard bits absorb per-op rounding.
    return static_cast<mpfr_prec_t>(digits * 3.3219280948873623 + 0.5) + 32;
}

class BigReal {
  public:
    BigReal() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit BigReal(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
    BigReal(const BigReal& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigReal(BigReal&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~BigReal() { mpfr_clear(v_); }

    static BigReal with_digits(unsigned digits) { return BigReal(bits_for_digits(digits)); }
    static BigReal from_ui(unsigned long x, unsigned digits);
    static BigReal from_si(long x, unsigned digits);
    static BigReal from_u64(std::uint64_t x, unsigned digits);
    static BigReal from_u128(unsigned __int128 x, unsigned digits);
    static BigReal from_double(double x, unsigned digits);
    static BigReal from_str(const std::string& s, unsigned digits);
    static BigReal from_mpq(mpq_srcptr q, unsigned digits);
    static BigReal pi(unsigned digits);
    static BigReal euler_gamma(unsigned digits);

    mpfr_prec_t prec_bits() const { return mpfr_get_prec(v_); }
    unsigned digits() const { return static_cast<unsigned>((prec_bits() - 32) / 3.3219280948873623); }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    // Decimal string with the given number of significant digits; parsing the
    // result back at the same precision reproduces the value.
    std::string to_string(unsigned sig_digits) const;

    BigReal& operator+=(const BigReal& o) { grow_(o); mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator-=(const BigReal& o) { grow_(o); mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator*=(const BigReal& o) { grow_(o); mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator/=(const BigReal& o) { grow_(o); mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    friend BigReal operator+(BigReal a, const BigReal& b) { a += b; return a; }
    friend BigReal operator-(BigReal a, const BigReal& b) { a -= b; return a; }
    friend BigReal operator*(BigReal a, const BigReal& b) { a *= b; return a; }
    friend BigReal operator/(BigReal a, const BigReal& b) { a /= b; return a; }
    friend BigReal operator-(BigReal a) { mpfr_neg(a.v_, a.v_, MPFR_RNDN); return a; }

    BigReal& operator*=(unsigned long x) { mpfr_mul_ui(v_, v_, x, MPFR_RNDN); return *this; }
    BigReal& operator/=(unsigned long x) { mpfr_div_ui(v_, v_, x, MPFR_RNDN); return *this; }
    BigReal& operator+=(long x) { mpfr_add_si(v_, v_, x, MPFR_RNDN); return *this; }
    friend BigReal operator*(BigReal a, unsigned long x) { a *= x; return a; }
    friend BigReal operator/(BigReal a, unsigned long x) { a /= x; return a; }

    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

    friend BigReal abs(BigReal a) { mpfr_abs(a.v_, a.v_, MPFR_RNDN); return a; }
    friend BigReal exp(BigReal a) { mpfr_exp(a.v_, a.v_, MPFR_RNDN); return a; }
    friend BigReal log(const BigReal& a) {
        if (mpfr_sgn(a.v_) <= 0) throw domain_error("log of non-positive BigReal");
        BigReal r(a.prec_bits()); mpfr_log(r.v_, a.v_, MPFR_RNDN); return r;
    }
    friend BigReal sqrt(const BigReal& a) { BigReal r(a.prec_bits()); mpfr_sqrt(r.v_, a.v_, MPFR_RNDN); return r; }
    friend BigReal floor(const BigReal& a) { BigReal r(a.prec_bits()); mpfr_floor(r.v_, a.v_); return r; }
    friend BigReal pow(const BigReal& a, const BigReal& b) {
        BigReal r(std::max(a.prec_bits(), b.prec_bits()));
        mpfr_pow(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    static BigReal pow_ui(const BigReal& a, unsigned long e) {
        BigReal r(a.prec_bits()); mpfr_pow_ui(r.v_, a.v_, e, MPFR_RNDN); return r;
    }
    static BigReal ui_pow_si(unsigned long base, long e, unsigned digits);
    static BigReal log_ui(unsigned long x, unsigned digits);

    // 10^{-k} at this value's precision, handy for tolerance thresholds.
    static BigReal eps10(long k, unsigned digits);

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

  private:
    void grow_(const BigReal& o) {
        if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
    }
    mpfr_t v_;
};

struct BigComplex {
    BigReal re, im;

    BigComplex() = default;
    BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
    explicit BigComplex(BigReal r) : re(std::move(r)), im(BigReal(re.prec_bits())) {}

    static BigComplex zero(unsigned digits) {
        return BigComplex(BigReal::with_digits(digits), BigReal::with_digits(digits));
    }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    BigComplex& operator+=(const BigComplex& o) { re += o.re; im += o.im; return *this; }
    BigComplex& operator-=(const BigComplex& o) { re -= o.re; im -= o.im; return *this; }
    friend BigComplex operator+(BigComplex a, const BigComplex& b) { a += b; return a; }
    friend BigComplex operator-(BigComplex a, const BigComplex& b) { a -= b; return a; }
    friend BigComplex operator-(BigComplex a) { a.re = -a.re; a.im = -a.im; return a; }

    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return BigComplex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    BigComplex& operator*=(const BigComplex& o) { *this = *this * o; return *this; }
    friend BigComplex operator*(BigComplex a, const BigReal& s) { a.re *= s; a.im *= s; return a; }

    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigReal d = b.re * b.re + b.im * b.im;
        if (d.is_zero()) throw domain_error("complex division by zero");
        return BigComplex((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
    }

    friend BigReal norm2(const BigComplex& a) { return a.re * a.re + a.im * a.im; }
    friend BigReal cabs(const BigComplex& a) { return sqrt(norm2(a)); }

    friend BigComplex cexp(const BigComplex& a) {
        BigReal m = exp(a.re);
        BigReal c(a.re.prec_bits()), s(a.re.prec_bits());
        mpfr_sin_cos(s.raw(), c.raw(), a.im.raw(), MPFR_RNDN);
        return BigComplex(m * c, m * s);
    }
    friend BigComplex clog(const BigComplex& a) {
        if (a.is_zero()) throw domain_error("log of complex zero");
        BigReal r = log(norm2(a)) / 2ul;
        BigReal t(a.re.prec_bits());
        mpfr_atan2(t.raw(), a.im.raw(), a.re.raw(), MPFR_RNDN);
        return BigComplex(std::move(r), std::move(t));
    }
};

// base^{-z} for an integer base >= 1 (the Dirichlet-series building block).
BigComplex neg_cpow(unsigned long base, const BigComplex& z, unsigned digits);

} // namespace divcor
