#pragma once

// Sums and products over primes of rational local data, evaluated to high
// precision by expanding in powers of 1/p and summing each power with
// prime-zeta derivatives:
//
//   sum_{p not excluded} R(1/p) log^m p
//     = sum_N a_N [ (-1)^m P^{(m)}(N) - sum_{p excluded} log^m p / p^N ].
//
// Small primes with slow 1/p decay are excluded from the series and their
// contributions evaluated directly from the exact rational form. Truncation
// tails are certified at runtime from the observed coefficient growth.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "divcor/bigfloat.hpp"
#include "divcor/ratseries.hpp"

namespace divcor {

struct PrimeExpansion {
    int n0 = 2;                      // first nonzero power of 1/p
    RatVec coeffs;                   // a_0..a_nmax (leading zeros up to n0)
    unsigned log_weight = 0;         // m
    std::vector<std::uint32_t> excluded_primes{2};
    bool truncated = false;          // true when coeffs cut an infinite series
    // exact rational form R(p) = num(p)/den(p), used for the excluded primes
    RatVec num_p, den_p;

    std::size_t n_max() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

    // R(p) = num(p)/den(p) with deg num < deg den, expanded to x^{order}.
    static PrimeExpansion from_p_rational(RatVec num_p, RatVec den_p, unsigned log_weight,
                                          std::size_t order = 1200,
                                          std::vector<std::uint32_t> excluded = {2});
};

// sum over all primes of R(1/p) log^m p (excluded primes added back exactly).
BigReal euler_sum(const PrimeExpansion& e, unsigned digits);

// prod over all primes of (1 + R(1/p)); computed as exp(euler_sum of the
// log-expansion) times the excluded primes evaluated directly.
BigReal euler_product(const PrimeExpansion& e, unsigned digits);

} // namespace divcor
