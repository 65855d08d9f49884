#include <doctest.h>
#include <mpfr.h>

#include <cmath>

#include "divcor/bigfloat.hpp"
#include "divcor/errors.hpp"
#include "divcor/zeta.hpp"
#include "test_util.hpp"

using namespace divcor;
using divcor::testutil::check_close;
using divcor::testutil::check_digits;

namespace {

BigReal mpfr_zeta_oracle(double s, unsigned digits) {
    BigReal x = BigReal::from_double(s, digits);
    BigReal r = BigReal::with_digits(digits);
    mpfr_zeta(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

} // namespace

TEST_CASE("zeta special values") {
    unsigned d = 60;
    BigReal z2 = zeta(BigReal::from_ui(2, d), d);
    BigReal pi = BigReal::pi(d);
    check_close(z2, pi * pi / 6ul, 55, "zeta(2) = pi^2/6");

    BigReal z0 = zeta(BigReal::with_digits(d), d);
    check_digits(z0, "-0.5", 55, "zeta(0)");

    CHECK_THROWS_AS(zeta(BigReal::from_ui(1, d), d), domain_error);
}

TEST_CASE("zeta(3) matches the direct-sum oracle") {
    // oracle: partial Dirichlet sum with integral tail bracket
    unsigned d = 40;
    BigReal s = BigReal::from_ui(3, d);
    unsigned long N = 4000;
    BigReal part = BigReal::with_digits(d);
    for (unsigned long n = 1; n <= N; ++n)
        part += BigReal::from_ui(1, d) / BigReal::from_u64(static_cast<std::uint64_t>(n) * n * n, d);
    // zeta(3) - part in (1/(2 (N+1)^2)), (1/(2 N^2))
    BigReal z = zeta(s, d);
    BigReal lo = BigReal::from_ui(1, d) / (BigReal::from_u64(2ull * (N + 1) * (N + 1), d));
    BigReal hi = BigReal::from_ui(1, d) / (BigReal::from_u64(2ull * N * N, d));
    CHECK(z - part > lo);
    CHECK(z - part < hi);
}

TEST_CASE("zeta agrees with mpfr_zeta on the real axis") {
    unsigned d = 70;
    for (double s : {2.0, 3.0, 4.0, 7.5, 0.5, -0.5, 13.0, 60.0}) {
        BigReal mine = zeta(BigReal::from_double(s, d), d);
        BigReal ref = mpfr_zeta_oracle(s, d);
        check_close(mine, ref, 65, "zeta real axis");
    }
}

TEST_CASE("complex zeta reduces to real zeta and handles off-axis points") {
    unsigned d = 45;
    BigComplex s(BigReal::from_str("2.5", d), BigReal::with_digits(d));
    BigComplex z = zeta(s, d);
    check_close(z.re, mpfr_zeta_oracle(2.5, d), 42);
    CHECK(abs(z.im) < BigReal::eps10(40, d));

    // functional sanity off axis: zeta(conj(s)) = conj(zeta(s))
    BigComplex s2(BigReal::from_str("1.5", d), BigReal::from_str("0.7", d));
    BigComplex s2c(s2.re, -s2.im);
    BigComplex a = zeta(s2, d), b = zeta(s2c, d);
    check_close(a.re, b.re, 40);
    check_close(a.im, -b.im, 40);
}

TEST_CASE("zeta_derivative against central finite differences at doubled precision") {
    unsigned d = 40, d2 = 90;
    BigReal s = BigReal::from_ui(2, d2);
    BigReal h = BigReal::eps10(15, d2);
    for (unsigned m : {1u, 2u}) {
        BigReal fd = (m == 1) ? (zeta(s + h, d2) - zeta(s - h, d2)) / (h * 2ul)
                              : (zeta(s + h, d2) - zeta(s, d2) * 2ul + zeta(s - h, d2)) / (h * h);
        BigReal mine = zeta_derivative(m, BigReal::from_ui(2, d), d);
        check_close(mine, fd, 8, "finite-difference cross-check");
    }
    // m = 0 is zeta itself
    check_close(zeta_derivative(0, s, d2), zeta(s, d2), 80);
}

TEST_CASE("zeta'(4) matches the partial sum of -sum log n / n^4") {
    unsigned d = 35;
    BigReal zp = zeta_derivative(1, BigReal::from_ui(4, d), d);
    BigReal part = BigReal::with_digits(d);
    unsigned long N = 3000;
    for (unsigned long n = 2; n <= N; ++n) {
        BigReal t = BigReal::log_ui(n, d);
        t /= static_cast<unsigned long>(n);
        t /= static_cast<unsigned long>(n);
        t /= static_cast<unsigned long>(n);
        t /= static_cast<unsigned long>(n);
        part -= t;
    }
    // tail of sum log n / n^4 below (log N + 1/3) / (3 N^3) * 1.01
    BigReal tail = (BigReal::log_ui(N, d) + BigReal::from_ui(1, d) / 3ul) /
                   BigReal::from_u64(3ull * N * N * N, d);
    CHECK(abs(zp - part) < tail * BigReal::from_str("1.01", d));
}

TEST_CASE("stieltjes constants") {
    unsigned d = 80;
    check_digits(stieltjes(0, d), "0.57721566490153286060651209008240243104215933593992", 50, "gamma");
    check_digits(stieltjes(1, d), "-0.072815845483676724860586375874901319137736338334338", 50, "gamma_1");

    // gamma_0 agrees with the library constant
    check_close(stieltjes(0, d), BigReal::euler_gamma(d), 75);

    // Euler-Maclaurin limit oracle: sum 1/n - log N  ->  gamma  (order 1/2N)
    unsigned dl = 30;
    unsigned long N = 200000;
    BigReal acc = BigReal::with_digits(dl + 10);
    for (unsigned long n = 1; n <= N; ++n) acc += BigReal::from_ui(1, 12) / BigReal::from_u64(n, dl + 10);
    acc -= BigReal::log_ui(N, dl + 10);
    CHECK(abs(acc - stieltjes(0, dl)) < BigReal::from_double(1.0 / N, dl));

    // and for gamma_1: sum log n / n - log^2 N / 2
    BigReal acc1 = BigReal::with_digits(dl + 10);
    for (unsigned long n = 2; n <= N; ++n) acc1 += BigReal::log_ui(n, dl + 10) / BigReal::from_u64(n, dl + 10);
    BigReal lN = BigReal::log_ui(N, dl + 10);
    acc1 -= lN * lN / 2ul;
    CHECK(abs(acc1 - stieltjes(1, dl)) < BigReal::from_double(std::log(static_cast<double>(N)) / N, dl));
}

TEST_CASE("Laurent series of zeta near 1 reproduces zeta(1.001)") {
    unsigned d = 50;
    BigReal eps = BigReal::from_str("0.001", d);
    BigReal s = BigReal::from_ui(1, d) + eps;
    BigReal direct = zeta(s, d);
    // 1/eps + gamma - gamma_1 eps + gamma_2 eps^2/2 - gamma_3 eps^3/6
    BigReal approx = BigReal::from_ui(1, d) / eps + stieltjes(0, d) - stieltjes(1, d) * eps +
                     stieltjes(2, d) * eps * eps / 2ul - stieltjes(3, d) * eps * eps * eps / 6ul;
    // next omitted term is ~ gamma_4 eps^4 / 24 ~ 1e-14
    CHECK(abs(direct - approx) < BigReal::eps10(12, d));
}
