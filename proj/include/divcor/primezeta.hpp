#pragma once

// P(s) = sum_p p^{-s} and its derivatives, through the Mobius-log-zeta
// identity P(s) = sum_{k>=1} mu(k)/k log zeta(ks). Derivatives use
//
//   P^{(m)}(s) = sum_k mu(k) k^{m-1} (log zeta)^{(m)}(ks),
//
// with (log zeta)^{(m)} read off log-zeta jets. Values at integer arguments
// are memoized: the Euler-sum machinery hits the same (m, N) pairs constantly.

#include <cstdint>
#include <vector>

#include "divcor/bigfloat.hpp"

namespace divcor {

BigReal prime_zeta(const BigReal& s, unsigned digits);
BigReal prime_zeta_deriv(unsigned m, const BigReal& s, unsigned digits);

// Memoized P^{(m)}(N) for integer N >= 2 (thread-safe).
const BigReal& prime_zeta_deriv_int(unsigned m, unsigned N, unsigned digits);

// sum_{p not in excluded} log^m p / p^N, cancellation-free and memoized.
// Small N goes through P^{(m)} at boosted precision (the excluded-prime
// subtraction loses ~N log10(2) digits); large N is a short direct prime sum.
BigReal prime_log_power_sum(unsigned m, unsigned N, const std::vector<std::uint32_t>& excluded,
                            unsigned digits);

// Test-only helper: P(s) for complex s with Re s >= 1.3 (the public surface
// stays on the real axis).
BigComplex prime_zeta_complex(const BigComplex& s, unsigned digits);

} // namespace divcor
