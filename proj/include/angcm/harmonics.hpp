#pragma once

#include <vector>

#include "angcm/dunkl.hpp"
#include "angcm/poly.hpp"
#include "angcm/spectra.hpp"

namespace angcm {

// Homogeneous symmetric polynomial of degree m annihilated by L(g).
struct DeformedHarmonic {
    DunklContext ctx;
    MultiIndex k;   // k2 = 0
    long m = 0;     // homogeneity degree
    Rational q;     // g n(n-1)/2 + m
    MultiPoly poly;
};

// Builds h_k by sandwiching Newton sums of Dunkl operators between radial
// powers:  r^(g n(n-1)+n-2+2m) (sum_i D_i)^k1 (sum_i D_i^3)^k3 ...  r^(-g n(n-1)-n+2).
// At the single degenerate parameter point (n = 2, g = 0) the seed power is
// r^0 and the sandwich collapses; there the harmonic is recovered as the exact
// kernel of L(0) on symmetric polynomials of degree m (one-dimensional).
DeformedHarmonic deformed_harmonic(const DunklContext& ctx, const MultiIndex& k);

struct BasisReport {
    std::vector<DeformedHarmonic> basis;
    long rank = 0;
    long long expected = 0;  // p_n(m) - p_n(m-2)
};

// h_k for every admissible k at level m, with the exact rank of their
// coefficient matrix. Throws RankMismatch if the rank differs from
// p_n(m) - p_n(m-2).
BasisReport harmonic_basis(const DunklContext& ctx, long m);

// v_k = r^-m h_k(x) Delta-hat^g, kept algebraically: the polynomial h_k, the
// effective angular momentum q, and the eigenvalue eps = q(q+n-2)/2. The
// Delta-hat^g factor stays symbolic (its exponent is ctx.g).
struct AngularEigenfunction {
    DeformedHarmonic h;
    Rational q;
    Rational epsilon;
};

AngularEigenfunction angular_eigenfunction(const DunklContext& ctx, const MultiIndex& k);

// Restriction of h_k (k1 = k2 = 0) to the hyperplane sum_i x^i = 0, with the
// relative angular eigenvalue.
struct RelativeHarmonic {
    MultiPoly poly;  // n-1 variables
    Rational q_tilde;
    Rational epsilon_tilde;
};

RelativeHarmonic relative_harmonic(const DunklContext& ctx, const MultiIndex& k);

// Full oscillator eigenstate: prefactor * exp(-omega r^2 / 2) with
// prefactor = Delta^g * (gauged Newton sums applied to 1). Integer g only.
struct OscillatorState {
    DunklContext ctx;
    Rational omega;
    MultiIndex k;
    MultiPoly prefactor;
    Rational energy;  // absolute units
};

OscillatorState oscillator_state(const DunklContext& ctx, const Rational& omega, const MultiIndex& k);

// Conjugate of the full Hamiltonian by the Gaussian: acting on the prefactor F
// of Psi = F exp(-omega r^2/2) it reads
//   -1/2 sum_i d_i^2 F + omega (sum_i x^i d_i) F + n omega/2 F
//   + g(g-1) sum_{i<j} F/(x^i-x^j)^2.
// The last division is exact because F carries Delta^g (or its coefficient
// vanishes for g in {0,1}). Eigenstates satisfy H F = E F exactly.
MultiPoly gauged_hamiltonian_apply(const DunklContext& ctx, const Rational& omega, const MultiPoly& f);

// -i(D_i - 2 omega x^i): creation operator commuted through the Gaussian.
MultiPoly gauged_creation_apply(const DunklContext& ctx, const Rational& omega, int i, const MultiPoly& f);

}  // namespace angcm
