#pragma once

#include <vector>

#include "angcm/poly.hpp"

namespace angcm {

// Dihedral Calogero-Moser operators for I2(p), realized in the complex chart
// z = x + iy, z-bar = x - iy (variables x1, x2 of a two-variable MultiPoly).
// The mirror lines sit at angles k*pi/p; summing the Dunkl reflection terms
// over a mirror orbit turns the roots of unity into rational coefficients,
// so everything stays in exact Gaussian-rational arithmetic.
//
// g holds one multiplicity for odd p, two for even p (orbit 0: even mirrors,
// which for p = 4 are the B2 coordinate roots e1, e2; orbit 1: odd mirrors).
namespace dihedral {

// x-chart <-> z-chart conversions for two-variable polynomials.
MultiPoly to_complex_chart(const MultiPoly& f_xy);
MultiPoly from_complex_chart(const MultiPoly& f_z);

// T = D_x + i D_y and its conjugate, acting in the z-chart.
MultiPoly t_apply(int p, const std::vector<Rational>& g, const MultiPoly& f);
MultiPoly tbar_apply(int p, const std::vector<Rational>& g, const MultiPoly& f);

// D_x, D_y recovered from T and its conjugate.
MultiPoly dunkl_x_apply(int p, const std::vector<Rational>& g, const MultiPoly& f);
MultiPoly dunkl_y_apply(int p, const std::vector<Rational>& g, const MultiPoly& f);

// Gauge-fixed operator on W-invariant z-chart polynomials, via the closed
// form 4 d_z d_zbar + orbit terms (z^(q-1) d_zbar -+ zbar^(q-1) d_z)/(z^q -+ zbar^q).
MultiPoly l_apply(int p, const std::vector<Rational>& g, const MultiPoly& f);

bool is_invariant(int p, const MultiPoly& f_z);

// Invariant deformed harmonic of level m = p * k2, returned in the x-chart
// with real coefficients. k2 counts powers of the degree-p generator Re(z^p).
MultiPoly deformed_harmonic(int p, const std::vector<Rational>& g, int k2);

// sum_i a_i^+ a_i f + 2 omega (sum g_alpha) f  vs  -L f + omega^2 r^2 f - 2 omega f
// on invariant f, and creation-operator commutativity on arbitrary input.
bool hamiltonian_identity_ok(int p, const std::vector<Rational>& g, const Rational& omega,
                             const MultiPoly& f_invariant_z);
bool creation_commutator_ok(int p, const std::vector<Rational>& g, const Rational& omega,
                            const MultiPoly& f_z);

}  // namespace dihedral
}  // namespace angcm
