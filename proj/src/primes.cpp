#include "divcor/primes.hpp"

#include <cmath>
#include <mutex>

#include "divcor/errors.hpp"

namespace divcor {

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
    std::vector<bool> comp(static_cast<std::size_t>(n) + 1, false);
    std::vector<std::uint32_t> ps;
    for (std::uint32_t i = 2; i <= n; ++i) {
        if (!comp[i]) {
            ps.push_back(i);
            if (static_cast<std::uint64_t>(i) * i <= n)
                for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= n; j += i) comp[j] = true;
        }
    }
    return ps;
}

std::vector<std::int8_t> mobius_up_to(std::uint32_t n) {
    std::vector<std::int8_t> mu(static_cast<std::size_t>(n) + 1, 1);
    std::vector<bool> comp(static_cast<std::size_t>(n) + 1, false);
    if (n >= 0) mu[0] = 0;
    for (std::uint32_t i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        for (std::uint64_t j = i; j <= n; j += i) {
            if (j > i) comp[j] = true;
            mu[j] = static_cast<std::int8_t>(-mu[j]);
        }
        std::uint64_t i2 = static_cast<std::uint64_t>(i) * i;
        for (std::uint64_t j = i2; j <= n; j += i2) mu[j] = 0;
    }
    return mu;
}

namespace {
const std::vector<std::uint32_t>& trial_primes() {
    static std::vector<std::uint32_t> ps = primes_up_to(1000000);
    return ps;
}
} // namespace

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> f;
    if (n == 0) throw domain_error("factorize(0)");
    for (std::uint32_t p : trial_primes()) {
        if (static_cast<std::uint64_t>(p) * p > n) break;
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.emplace_back(p, e);
        }
    }
    if (n > 1) {
        if (n > 1000000000000ull)
            throw resource_error("factorize: cofactor exceeds trial-division range (n > 1e12)");
        f.emplace_back(n, 1);
    }
    return f;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (auto [p, e] : factorize(n)) r -= r / p;
    return r;
}

std::uint64_t radical(std::uint64_t n) {
    std::uint64_t r = 1;
    for (auto [p, e] : factorize(n)) r *= p;
    return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) { std::uint64_t t = a % b; a = b; b = t; }
    return a;
}

std::uint64_t icbrt(std::uint64_t n) {
    std::uint64_t t = static_cast<std::uint64_t>(std::cbrt(static_cast<double>(n)));
    while (t > 0 && t * t * t > n) --t;
    while ((t + 1) * (t + 1) * (t + 1) <= n) ++t;
    return t;
}

std::uint64_t ifloor23(std::uint64_t n) {
    auto cube_le = [](std::uint64_t t, unsigned __int128 m) {
        unsigned __int128 c = static_cast<unsigned __int128>(t) * t;
        return c * t <= m;
    };
    unsigned __int128 n2 = static_cast<unsigned __int128>(n) * n;
    std::uint64_t t = static_cast<std::uint64_t>(std::pow(static_cast<double>(n), 2.0 / 3.0));
    while (t > 0 && !cube_le(t, n2)) --t;
    while (cube_le(t + 1, n2)) ++t;
    return t;
}

std::uint64_t isqrt_u64(std::uint64_t n) {
    std::uint64_t t = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (t > 0 && t > n / t) --t;
    while ((t + 1) <= n / (t + 1)) ++t;
    return t;
}

} // namespace divcor
