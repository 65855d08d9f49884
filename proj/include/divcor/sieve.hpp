#pragma once

// Exact integer computations: segmented tau_k tables, shifted correlation
// sums, the Hooley partial sums, and arithmetic-progression remainders.
//
// tau_k on a segment is computed multiplicatively: for every prime
// p <= sqrt(hi) the p-adic valuation of each multiple in the segment is
// extracted and contributes binomial(e+k-1, k-1); a leftover cofactor > 1 is
// a single large prime and contributes k. Workers own their segments and the
// reduction is exact integer addition, so results are identical for any
// segmentation or thread count.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace divcor {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

std::string u128_to_string(u128 v);
void mpz_set_u128_value(mpz_class& z, u128 v);

struct SieveConfig {
    u64 segment_size = u64(1) << 22;
    unsigned threads = 0;                       // 0 = hardware concurrency
    u64 memory_budget_bytes = u64(3) << 30;     // tables + per-thread buffers
    double ops_budget = 5e10;                   // ap_remainder cost gate
};

// binomial(e+k-1, k-1) = tau_k(p^e); domain: 1 <= k <= 8, e <= 120.
u64 tau_prime_power(unsigned k, unsigned e);

struct TauTable {
    unsigned k = 0;
    u64 lo = 0, hi = 0;      // [lo, hi)
    std::vector<u64> values; // values[i] = tau_k(lo + i)

    u64 at(u64 n) const { return values[n - lo]; }
};

// Exact tau_k on [lo, hi); 2 <= k <= 5, hi <= 2^40. The whole range is
// materialized, so it must fit the memory budget; correlate() streams
// segments instead and has no such limit.
TauTable tau_table(unsigned k, u64 lo, u64 hi, const SieveConfig& cfg = {});

struct CorrelationRecord {
    unsigned k = 0, ell = 0;
    u64 h = 0, X = 0;
    u128 value = 0; // sum_{n<=X} tau_k(n) tau_ell(n+h)
    std::string to_csv() const;
};

CorrelationRecord correlate(unsigned k, unsigned ell, u64 X, u64 h, const SieveConfig& cfg = {});

// Single sweep with exact partial sums captured at the given checkpoints
// (ascending). Returns one record per checkpoint.
std::vector<CorrelationRecord> correlate_checkpoints(unsigned k, unsigned ell, u64 h,
                                                     const std::vector<u64>& checkpoints,
                                                     const SieveConfig& cfg = {});

struct HooleyTriple {
    u64 sigma1 = 0, sigma2 = 0, sigma3 = 0;
    u64 tau3 = 0;
    bool holds = false; // tau3 == 3 sigma1 - 3 sigma2 + sigma3
};

// Enumerates ordered factorizations n = l1 l2 l3 and classifies them by the
// exact integer cutoffs l <= X^{1/3} iff l^3 <= X, l1 l2 <= X^{2/3} iff
// (l1 l2)^3 <= X^2.
HooleyTriple hooley_identity_check(u64 n, u64 X);

struct HooleySums {
    u64 X = 0, h = 0;
    u128 sigma11 = 0, sigma21 = 0, sigma31 = 0;
};

// The three partial sums of the decomposition; exactly
// 3 sigma11 - 3 sigma21 + sigma31 = correlate(3,3,X,h).
HooleySums hooley_sigma_sums(u64 X, u64 h, const SieveConfig& cfg = {});

// sum_{n<=X, (n,q)=1} tau_k(n) by inclusion-exclusion over squarefree
// divisors of rad(q), with tau read from a cached table. Results are
// memoized per (k, X) context on rad(q).
class CoprimeTauCache {
  public:
    CoprimeTauCache(unsigned k, u64 X, const SieveConfig& cfg = {});
    u128 coprime_sum(u64 q);
    u128 ap_sum(u64 q, u64 h) const; // sum over n <= X, n = h (mod q)
    const TauTable& table() const { return table_; }

  private:
    TauTable table_;
    std::vector<std::pair<u64, u128>> memo_; // rad -> sum
};

u128 coprime_tau_sum(unsigned k, u64 X, u64 q, const SieveConfig& cfg = {});

struct APSampling {
    bool all = true;
    u64 count = 0;
    u64 seed = 0;
    static APSampling every() { return {}; }
    static APSampling random(u64 m, u64 seed) { return {false, m, seed}; }
    std::string describe() const;
};

struct APRemainderRecord {
    unsigned k = 0;
    u64 h = 0, X = 0, q_limit = 0;
    mpq_class delta_sum;          // sum over selected q of |AP - C/phi|
    std::string sampling;
    std::vector<u64> q_sampled;   // empty when all q were used
    std::string to_csv() const;
};

// q_limit = 0 selects the default floor(X^{(k-1)/k}).
APRemainderRecord ap_remainder_sum(unsigned k, u64 X, u64 h, u64 q_limit,
                                   const APSampling& sampling = APSampling::every(),
                                   const SieveConfig& cfg = {});

u64 default_q_limit(unsigned k, u64 X);

} // namespace divcor
