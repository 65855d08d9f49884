#pragma once

#include <cstdint>
#include <vector>

namespace divcor {

// Primes up to and including n (simple Eratosthenes; n is desk-scale here).
std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

// Mobius function on [0, n].
std::vector<std::int8_t> mobius_up_to(std::uint32_t n);

// Distinct prime factors with multiplicities, by trial division.
// Intended for n up to ~1e12 (trial primes to 1e6).
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t radical(std::uint64_t n);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

// floor(n^{1/3}) and floor(n^{2/3}) with exact integer semantics:
// icbrt(n) = max{t : t^3 <= n}, ifloor23(n) = max{t : t^3 <= n^2}.
std::uint64_t icbrt(std::uint64_t n);
std::uint64_t ifloor23(std::uint64_t n);
std::uint64_t isqrt_u64(std::uint64_t n);

} // namespace divcor
