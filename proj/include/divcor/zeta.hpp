#pragma once

// Riemann zeta via Euler-Maclaurin, with jet (truncated Taylor) propagation
// so derivatives of any modest order come out of the same summation.
//
//   zeta(s) = sum_{n<N} n^-s + N^{1-s}/(s-1) + N^-s/2
//           + sum_{j<=J} B_{2j}/(2j)! s(s+1)...(s+2j-2) N^{-s-2j+1} + R_J
//
// N and J are chosen adaptively; the returned values are certified by
// requiring the first omitted correction term (coefficientwise, for jets)
// to sit below the target epsilon with a safety margin.

#include <gmpxx.h>

#include <vector>

#include "divcor/bigfloat.hpp"

namespace divcor {

// B_{2j} as an exact rational (B_0 = 1, B_2 = 1/6, B_4 = -1/30, ...).
const mpq_class& bernoulli_2j(unsigned j);

// Taylor coefficients c_m of zeta(s0 + eps) = sum c_m eps^m, m = 0..order.
// With regularized_at_one (s0 must be 1) the jet is of zeta(1+eps) - 1/eps,
// whose coefficients are (-1)^m gamma_m / m!.
std::vector<BigReal> zeta_jet(const BigReal& s0, unsigned order, unsigned digits,
                              bool regularized_at_one = false);
std::vector<BigComplex> zeta_jet(const BigComplex& s0, unsigned order, unsigned digits);

// Spec surface. zeta throws domain_error at the pole s = 1 and outside
// Re s > -2, |s| <= 100.
BigComplex zeta(const BigComplex& s, unsigned digits);
BigReal zeta(const BigReal& s, unsigned digits);
BigComplex zeta_derivative(unsigned m, const BigComplex& s, unsigned digits);
BigReal zeta_derivative(unsigned m, const BigReal& s, unsigned digits);

// Stieltjes constants gamma_m (gamma_0 = Euler's gamma). Cached per precision.
BigReal stieltjes(unsigned m, unsigned digits);

// Taylor coefficients of log zeta at real s0 > 1, to the given order.
std::vector<BigReal> log_zeta_jet(const BigReal& s0, unsigned order, unsigned digits);

} // namespace divcor
