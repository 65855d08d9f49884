#pragma once

// Every constant and main-term polynomial: C_{k,l}, the local factors
// f_{k,l}(h), M_{2,2}(X,h), M_{3,3}(X,1), the delta-method m_3(X,1), and the
// auxiliary coefficients of the elementary route.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "divcor/bigfloat.hpp"
#include "divcor/series.hpp"

namespace divcor {

struct SingularConstant {
    unsigned k = 0, ell = 0;
    BigReal value;
};

// C_{k,l} via the product of local polynomials
// (1-1/p)^{k-1} + (1-1/p)^{l-1} - (1-1/p)^{k+l-2}; the binomial-sum form is
// computed as a cross-check and must agree.
SingularConstant C_kl(unsigned k, unsigned ell, unsigned digits);
BigReal C_kl_binomial_form(unsigned k, unsigned ell, unsigned digits);

struct LocalFactorValue {
    unsigned k = 0, ell = 0;
    std::uint64_t h = 0;
    BigReal value;
    mpq_class exact;                 // the product is rational
    struct PrimePart {
        std::uint64_t p;
        unsigned nu;
        mpq_class factor;
    };
    std::vector<PrimePart> parts;
};

// f_{k,l}(h) = prod_{p|h} A_p(1;0;h)/B_p(1;0); k in {2,3}, l in {2..5}.
// Computed from the local Dirichlet series in exact rationals.
LocalFactorValue local_factor(unsigned k, unsigned ell, std::uint64_t h, unsigned digits);

// Closed forms printed for k = 3: l in {3,4,5}; exact per prime.
mpq_class f33_closed_prime(std::uint64_t h);                 // h prime
mpq_class f3l_closed(unsigned ell, std::uint64_t h);         // any h, l in {3,4,5}

// sigma_{-1}(h) = sum_{d|h} 1/d and its 6/pi^2 multiple.
struct SingularSeries22 {
    mpq_class sigma;
    BigReal value; // sigma * 6/pi^2
};
SingularSeries22 singular_series_22(std::uint64_t h, unsigned digits);

// M_{2,2}(X,h) coefficients (degree 2). Assembled as 2 Res_1 - Res_2 via the
// residue engine from the f_h jet; f_h derivatives come from the two global
// prime sums plus exact per-prime jets of A_p/B_p for p | h.
LogPolynomial m22_coefficients(std::uint64_t h, unsigned digits);
BigReal m22_eval(std::uint64_t X, std::uint64_t h, unsigned digits);

// The four f_h values at (1,0): f, f^{(0,1)}, f^{(1,0)}, f^{(1,1)}.
struct FhDerivatives {
    BigReal f, f01, f10, f11;
};
FhDerivatives fh_derivatives(std::uint64_t h, unsigned digits);

// Degree-4 main-term polynomial of D_{3,3}(X,1): three iterated residues of
// the zeta/Euler-factor integrand.
LogPolynomial m33_coefficients(unsigned digits);
BigReal m33_eval(std::uint64_t X, unsigned digits);

// Options for the Euler-factor Taylor machinery (exposed for tests).
struct AExpansionConfig {
    std::uint32_t p0 = 50;  // direct per-prime expansion up to here
    int order = 4;          // Taylor order per variable
    unsigned lambda_max = 12;
};

struct AExpansion {
    int term = 1;            // which of the three residue terms
    unsigned digits = 0;
    AExpansionConfig cfg;
    SeriesR log_direct;      // sum_{p <= p0} log local_p (vars w1, w2, u)
    SeriesR log_tail;        // prime-zeta tail
    SeriesR taylor;          // exp of the sum
};

AExpansion a_expansion(int term, unsigned digits, const AExpansionConfig& cfg = {});

// Finite-product variant prod_{p<=p0} local_p at a complex offset point
// (w1, w2, s-1); closed-form evaluation for the contour cross-check.
BigComplex a_point_finite(int term, const std::vector<BigComplex>& z, std::uint32_t p0,
                          unsigned digits);

// The residue integrand with the Euler factor replaced by the finite product
// (engine side), for cross-validation against contour quadrature.
LPoly m33_term_residue_finite(int term, std::uint32_t p0, unsigned digits);

// Full residue of one term (paper Euler factors).
LPoly m33_term_residue(int term, unsigned digits, const AExpansionConfig& cfg = {});

// Delta-method constants A^{(i,j)}(0,0), i,j <= 2 (the six independent ones).
struct DeltaConstants {
    BigReal a00, a10, a11, a20, a21, a22;
};
DeltaConstants delta_constants(unsigned digits);

// Degree-4 polynomial m_3(X,1) from the delta method: the residue of
// zeta^3(s+1) zeta^3(w+1) u^{s+w} A(s,w), integrated in closed form.
LogPolynomial delta_m3_coefficients(unsigned digits);
BigReal delta_m3_eval(std::uint64_t X, unsigned digits);

// Lemma coefficients of (1/phi(q)) sum_{n<=X, (n,q)=1} tau_3(n):
// X (a1 log^2 X + a2 log X + a3). a1(q) = phi(q)^2 / (2 q^3) exactly.
struct AQCoefficients {
    BigReal a1, a2, a3;
    mpq_class a1_exact;
};
AQCoefficients a_q_coefficients(std::uint64_t q, unsigned digits);

// (1/12) prod_p (1 - 4/p^2 + 4/p^3 - 1/p^4) = C_{3,3}/12.
BigReal b1_leading(unsigned digits);

// A_h(s) of the tau_k(nh) Dirichlet series, plus the coprime-series factor
// prod_{p|h} (1 - p^{-s})^k.
struct DirichletScaled {
    BigReal a_h;
    BigReal coprime_factor;
};
DirichletScaled dirichlet_tau_scaled(unsigned k, std::uint64_t h, const BigReal& s, unsigned digits);

} // namespace divcor
