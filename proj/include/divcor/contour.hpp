#pragma once

// Numeric iterated contour integration on nested tori -- the independent
// oracle for residue extraction. Trapezoid on circles is exponentially
// convergent for integrands analytic in an annulus; node counts double until
// two successive values agree to the target.

#include <functional>
#include <vector>

#include "divcor/bigfloat.hpp"

namespace divcor {

using ContourFn = std::function<BigComplex(const std::vector<BigComplex>&)>;

// (1/(2 pi i)^n) circ... circ F dz_1..dz_n over |z_i| = radii[i], i.e. the
// joint coefficient of prod z_i^{-1}. Offsets are local (caller adds the
// expansion point inside F). Throws oracle_failure if node doubling does not
// stabilize within max_nodes.
BigComplex contour_residue_validate(const ContourFn& f, const std::vector<BigReal>& radii,
                                    unsigned digits, unsigned start_nodes = 64,
                                    unsigned max_nodes = 4096);

} // namespace divcor
