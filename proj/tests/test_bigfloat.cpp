#include <doctest.h>

#include "divcor/bigfloat.hpp"
#include "divcor/primes.hpp"
#include "divcor/ratseries.hpp"
#include "test_util.hpp"

using namespace divcor;
using divcor::testutil::check_close;

TEST_CASE("BigReal string round-trip at stated precision") {
    BigReal x = BigReal::from_str("3.14159265358979323846264338327950288419716939937510582097", 50);
    std::string s = x.to_string(50);
    BigReal y = BigReal::from_str(s, 50);
    check_close(x, y, 48, "round-trip");

    CHECK(BigReal::from_ui(42, 30).to_string(10) == "42");
    CHECK(BigReal::from_si(-5, 30).to_string(10) == "-5");
    CHECK(BigReal::with_digits(30).to_string(10) == "0");
}

TEST_CASE("BigReal arithmetic keeps the larger precision") {
    BigReal a = BigReal::from_ui(1, 30);
    BigReal b = BigReal::from_ui(3, 90);
    BigReal c = a / b;
    CHECK(c.prec_bits() >= bits_for_digits(90));
}

TEST_CASE("u128 conversion is exact") {
    unsigned __int128 v = (static_cast<unsigned __int128>(0x123456789abcdefull) << 64) | 0xfeedfacecafebeefull;
    BigReal x = BigReal::from_u128(v, 60);
    BigReal hi = BigReal::from_u64(0x123456789abcdefull, 60);
    mpfr_mul_2ui(hi.raw(), hi.raw(), 64, MPFR_RNDN);
    BigReal lo = BigReal::from_u64(0xfeedfacecafebeefull, 60);
    check_close(x, hi + lo, 40);
}

TEST_CASE("complex exp/log/pow basics") {
    unsigned d = 50;
    BigComplex z(BigReal::from_str("0.3", d), BigReal::from_str("-1.2", d));
    BigComplex w = clog(cexp(z));
    check_close(w.re, z.re, 45, "re");
    check_close(w.im, z.im, 45, "im");

    // 2^{-s} at s = 2: 0.25
    BigComplex s(BigReal::from_ui(2, d), BigReal::with_digits(d));
    BigComplex p = neg_cpow(2, s, d);
    check_close(p.re, BigReal::from_str("0.25", d), 45);
    CHECK(abs(p.im) < BigReal::eps10(45, d));
}

TEST_CASE("rational series: mul/div/log agree with hand values") {
    // 1/(1-x) = 1 + x + x^2 + ...
    RatVec one{mpq_class(1)};
    RatVec den{mpq_class(1), mpq_class(-1)};
    RatVec g = rat_div(one, den, 8);
    for (int i = 0; i <= 8; ++i) CHECK(g[i] == 1);

    // log(1+x) = x - x^2/2 + x^3/3 - ...
    RatVec a{mpq_class(1), mpq_class(1)};
    RatVec l = rat_log(a, 6);
    CHECK(l[1] == 1);
    CHECK(l[2] == mpq_class(-1, 2));
    CHECK(l[3] == mpq_class(1, 3));
    CHECK(l[6] == mpq_class(-1, 6));

    // division validated against convolution: (a/b)*b == a
    RatVec b{mpq_class(2), mpq_class(5), mpq_class(-3), mpq_class(7)};
    RatVec f{mpq_class(1), mpq_class(0), mpq_class(4), mpq_class(-2), mpq_class(9)};
    RatVec q = rat_div(f, b, 10);
    RatVec back = rat_mul(q, b, 10);
    for (int i = 0; i <= 10; ++i) CHECK(back[i] == (i < static_cast<int>(f.size()) ? f[i] : mpq_class(0)));
}

TEST_CASE("p-rational to 1/p series") {
    // 1/(p^2-1) = x^2/(1-x^2) = x^2 + x^4 + ...
    RatVec num{mpq_class(1)};
    RatVec den{mpq_class(-1), mpq_class(0), mpq_class(1)};
    RatVec r = rat_from_p_rational(num, den, 9);
    CHECK(r[0] == 0);
    CHECK(r[1] == 0);
    CHECK(r[2] == 1);
    CHECK(r[3] == 0);
    CHECK(r[4] == 1);
    CHECK(r[8] == 1);
    CHECK(rat_eval_p(num, den, 3) == mpq_class(1, 8));
}

TEST_CASE("integer roots are exact at boundaries") {
    CHECK(icbrt(26) == 2);
    CHECK(icbrt(27) == 3);
    CHECK(icbrt(1000000000000ull) == 10000);
    CHECK(isqrt_u64(24) == 4);
    CHECK(isqrt_u64(25) == 5);
    CHECK(ifloor23(1000000) == 10000);
    CHECK(ifloor23(999999) == 9999);
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(radical(360) == 30);
}
