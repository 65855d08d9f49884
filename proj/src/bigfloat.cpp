#include "divcor/bigfloat.hpp"

#include <cstdlib>
#include <cstring>

namespace divcor {

BigReal BigReal::from_ui(unsigned long x, unsigned digits) {
    BigReal r(bits_for_digits(digits));
    mpfr_set_ui(r.v_, x, MPFR_RNDN);
    return r;
}

BigReal BigReal::from_si(long x, unsigned digits) {
    BigReal r(bits_for_digits(digits));
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
}

BigReal BigReal::from_u64(std::uint64_t x, unsigned digits) {
    static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long expected");
    BigReal r(bits_for_digits(digits));
    mpfr_set_ui(r.v_, static_cast<unsigned long>(x), MPFR_RNDN);
    return r;
}

BigReal BigReal::from_u128(unsigned __int128 x, unsigned digits) {
    BigReal hi = from_u64(static_cast<std::uint64_t>(x >> 64), digits);
    BigReal lo = from_u64(static_cast<std::uint64_t>(x), digits);
    BigReal two64 = from_ui(1, digits);
    mpfr_mul_2ui(two64.raw(), two64.raw(), 64, MPFR_RNDN);
    return hi * two64 + lo;
}

BigReal BigReal::from_double(double x, unsigned digits) {
    BigReal r(bits_for_digits(digits));
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
}

BigReal BigReal::from_str(const std::string& s, unsigned digits) {
    BigReal r(bits_for_digits(digits));
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw domain_error("unparsable decimal literal: " + s);
    return r;
}

BigReal BigReal::from_mpq(mpq_srcptr q, unsigned digits) {
    BigReal r(bits_for_digits(digits));
    mpfr_set_q(r.v_, q, MPFR_RNDN);
    return r;
}

BigReal BigReal::pi(unsigned digits) {
    BigReal r(bits_for_digits(digits));
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::euler_gamma(unsigned digits) {
    BigReal r(bits_for_digits(digits));
    mpfr_const_euler(r.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::ui_pow_si(unsigned long base, long e, unsigned digits) {
    BigReal r = from_ui(base, digits);
    if (e >= 0) {
        mpfr_pow_ui(r.raw(), r.raw(), static_cast<unsigned long>(e), MPFR_RNDN);
    } else {
        mpfr_pow_ui(r.raw(), r.raw(), static_cast<unsigned long>(-e), MPFR_RNDN);
        BigReal one = from_ui(1, digits);
        r = one / r;
    }
    return r;
}

BigReal BigReal::log_ui(unsigned long x, unsigned digits) {
    if (x == 0) throw domain_error("log of zero");
    BigReal r(bits_for_digits(digits));
    mpfr_set_ui(r.v_, x, MPFR_RNDN);
    mpfr_log(r.v_, r.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::eps10(long k, unsigned digits) {
    BigReal r = from_ui(10, digits);
    BigReal one = from_ui(1, digits);
    mpfr_pow_si(r.raw(), r.raw(), -k, MPFR_RNDN);
    (void)one;
    return r;
}

std::string BigReal::to_string(unsigned sig_digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
    if (mpfr_zero_p(v_)) return "0";
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, sig_digits, v_, MPFR_RNDN);
    std::string digs(s);
    mpfr_free_str(s);
    bool neg = false;
    if (!digs.empty() && digs[0] == '-') { neg = true; digs.erase(0, 1); }
    std::string out;
    // e is the exponent of the implied decimal point before the first digit:
    // value = 0.digs * 10^e
    if (e >= 1 && e <= static_cast<mpfr_exp_t>(digs.size())) {
        out = digs.substr(0, static_cast<size_t>(e));
        std::string frac = digs.substr(static_cast<size_t>(e));
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out += "." + frac;
    } else if (e > static_cast<mpfr_exp_t>(digs.size()) && e <= static_cast<mpfr_exp_t>(digs.size()) + 6) {
        out = digs + std::string(static_cast<size_t>(e) - digs.size(), '0');
    } else if (e <= 0 && e > -6) {
        std::string frac = digs;
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (frac.empty()) frac = "0";
        out = "0." + std::string(static_cast<size_t>(-e), '0') + frac;
    } else {
        // scientific
        std::string frac = digs.substr(1);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        out = digs.substr(0, 1);
        if (!frac.empty()) out += "." + frac;
        out += "e" + std::to_string(static_cast<long>(e - 1));
    }
    return neg ? "-" + out : out;
}

BigComplex neg_cpow(unsigned long base, const BigComplex& z, unsigned digits) {
    // base^{-z} = exp(-z log base)
    BigReal lb = BigReal::log_ui(base, digits);
    return cexp(BigComplex(-(z.re * lb), -(z.im * lb)));
}

} // namespace divcor
