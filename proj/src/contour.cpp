#include "divcor/contour.hpp"

#include <cstddef>

#include "divcor/errors.hpp"

namespace divcor {

namespace {

BigComplex torus_mean(const ContourFn& f, const std::vector<BigReal>& radii, unsigned nodes,
                      unsigned digits) {
    const std::size_t dim = radii.size();
    // nodes per circle: z = r e^{2 pi i k / n}; (1/2pi i) \oint g dz = mean(g(z_k) z_k)
    std::vector<std::vector<BigComplex>> ring(dim);
    BigReal two_pi = BigReal::pi(digits) * 2ul;
    for (std::size_t d = 0; d < dim; ++d) {
        ring[d].reserve(nodes);
        for (unsigned k = 0; k < nodes; ++k) {
            BigReal th = two_pi * static_cast<unsigned long>(k) / static_cast<unsigned long>(nodes);
            BigReal c(th.prec_bits()), s(th.prec_bits());
            mpfr_sin_cos(s.raw(), c.raw(), th.raw(), MPFR_RNDN);
            ring[d].emplace_back(radii[d] * c, radii[d] * s);
        }
    }
    std::vector<unsigned> idx(dim, 0);
    std::vector<BigComplex> z(dim, BigComplex::zero(digits));
    BigComplex acc = BigComplex::zero(digits);
    while (true) {
        for (std::size_t d = 0; d < dim; ++d) z[d] = ring[d][idx[d]];
        BigComplex v = f(z);
        for (std::size_t d = 0; d < dim; ++d) v = v * z[d];
        acc += v;
        std::size_t d = 0;
        for (; d < dim; ++d) {
            if (++idx[d] < nodes) break;
            idx[d] = 0;
        }
        if (d == dim) break;
    }
    // divide by nodes^dim
    BigReal denom = BigReal::from_ui(1, digits);
    for (std::size_t d = 0; d < dim; ++d) denom *= static_cast<unsigned long>(nodes);
    return BigComplex(acc.re / denom, acc.im / denom);
}

} // namespace

BigComplex contour_residue_validate(const ContourFn& f, const std::vector<BigReal>& radii,
                                    unsigned digits, unsigned start_nodes, unsigned max_nodes) {
    BigReal tol = BigReal::eps10(static_cast<long>(digits), digits + 10);
    BigComplex prev = torus_mean(f, radii, start_nodes, digits + 10);
    for (unsigned n = start_nodes * 2; n <= max_nodes; n *= 2) {
        BigComplex cur = torus_mean(f, radii, n, digits + 10);
        BigReal diff = cabs(cur - prev);
        BigReal scale = cabs(cur);
        if (scale < BigReal::from_ui(1, digits)) scale = BigReal::from_ui(1, digits);
        if (diff < tol * scale) return cur;
        prev = cur;
    }
    throw oracle_failure("contour quadrature did not converge across node doubling");
}

} // namespace divcor
