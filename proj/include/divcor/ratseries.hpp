#pragma once

// Exact univariate power-series arithmetic over GMP rationals.
//
// Coefficient vectors are truncated at a fixed order; these feed the
// prime-expansion machinery, where floating drift in the expansion itself
// would defeat the certified tail bounds.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "divcor/errors.hpp"

namespace divcor {

using RatVec = std::vector<mpq_class>; // c[i] = coefficient of x^i

RatVec rat_mul(const RatVec& a, const RatVec& b, std::size_t order);

// a / b with b[0] != 0, to x^order.
RatVec rat_div(const RatVec& a, const RatVec& b, std::size_t order);

// log(a) with a[0] == 1, to x^order.
RatVec rat_log(const RatVec& a, std::size_t order);

// Series of num(1/x)/den(1/x) in x, where num/den are polynomials in p
// given by ascending coefficient vectors. The result starts at
// x^{deg den - deg num}; callers get the full vector from x^0.
RatVec rat_from_p_rational(const RatVec& num_p, const RatVec& den_p, std::size_t order);

// Exact value num(p)/den(p) at integer p.
mpq_class rat_eval_p(const RatVec& num_p, const RatVec& den_p, unsigned long p);

mpq_class poly_eval_ui(const RatVec& poly, unsigned long x);

} // namespace divcor
