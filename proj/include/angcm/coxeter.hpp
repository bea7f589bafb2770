#pragma once

#include <optional>
#include <string>
#include <vector>

#include "angcm/dunkl.hpp"
#include "angcm/poly.hpp"

namespace angcm {

enum class RootFamily { A, B, D, I2 };

std::string family_name(RootFamily f);

// Reflection data for one positive root. Signed-permutation reflections
// (all A/B/D roots) take the fast path; anything else falls back to the
// rational reflection matrix.
struct Reflection {
    std::vector<Rational> root;
    int orbit = 0;
    bool signed_perm = false;
    std::vector<int> perm;   // 1-based images
    std::vector<int> sign;   // +-1 per variable
    std::vector<std::vector<Rational>> matrix;
};

// A Coxeter root system with rational data. Dihedral I2(p) systems for
// p != 2, 4 admit no rational orthogonal realization, so they carry no root
// vectors; their operators are realized in complex coordinates (z, z-bar)
// where the orbit sums over mirrors collapse to rational closed forms.
struct RootSystem {
    RootFamily family = RootFamily::A;
    int rank = 0;     // Coxeter rank label (A_(n-1) has rank n-1 but lives in R^n)
    int nvars = 0;    // ambient coordinates
    int p = 0;        // dihedral order parameter, I2 only
    int orbit_count = 1;
    std::vector<Reflection> positive_roots;  // empty for I2
    std::vector<int> degrees;                // invariant degrees d_1..d_nvars
    int r2_slot = 0;                         // index into degrees of the r^2 generator
    std::vector<MultiPoly> generators;       // basic invariants, x-chart

    int num_positive_roots() const { return family == RootFamily::I2 ? p : static_cast<int>(positive_roots.size()); }
    bool is_dihedral() const { return family == RootFamily::I2; }
};

// Standard tables: A_(n-1) in R^n (roots e_i - e_j, power-sum invariants),
// B_n (e_i and e_i +- e_j, even power sums), D_n (e_i +- e_j, even power sums
// plus the coordinate product), I2(p) (p mirrors, invariants r^2 and Re(z^p)).
RootSystem build_root_system(RootFamily family, int rank, int p = 0);

// "A2", "B3", "D4", "I2(5)".
RootSystem parse_root_system(std::string_view text);

// Sum of g_alpha over positive roots; g has one entry per orbit.
Rational multiplicity_sum(const RootSystem& rs, const std::vector<Rational>& g);

struct CoxeterSpectrumEntry {
    std::vector<int> k;
    Rational energy;   // full model, units of omega
    Rational q;        // angular momentum of the angular reduction
    Rational epsilon;  // angular energy, dimensionless
    long m = 0;        // angular level: sum of d_i k_i over the non-r^2 slots
};

// k has one entry per invariant generator; the r^2 slot contributes to the
// full energy but is treated as zero for the angular quantities.
CoxeterSpectrumEntry coxeter_spectrum(const RootSystem& rs, const std::vector<Rational>& g,
                                      const std::vector<int>& k);

// Dunkl operator D_i = d_i + sum_alpha g_alpha alpha_i (1-s_alpha)/(alpha.x).
// Generic-root engine only (A/B/D); dihedral operators live in dihedral.hpp.
MultiPoly coxeter_dunkl_apply(const RootSystem& rs, const std::vector<Rational>& g, int i, const MultiPoly& f);
RadialPoly coxeter_dunkl_apply(const RootSystem& rs, const std::vector<Rational>& g, int i, const RadialPoly& f);

// Gauge-fixed operator sum_i d_i^2 + sum_alpha 2 g_alpha (alpha.grad)/(alpha.x)
// on W-invariant polynomials. Works for every family (dihedral via the
// complex-chart closed form).
MultiPoly coxeter_L_apply(const RootSystem& rs, const std::vector<Rational>& g, const MultiPoly& f);

bool coxeter_is_invariant(const RootSystem& rs, const MultiPoly& f);

// Deformed invariant harmonic
//   h_k = r^(2(q-1)+n) sigma_2(D)^(k2) ... sigma_n(D)^(kn) r^(2(m-q+1)-n),
// with k given on the non-r^2 generator slots. Falls back to the exact
// invariant kernel of L when the seed power degenerates (rank 2, all
// multiplicities zero).
MultiPoly coxeter_deformed_harmonic(const RootSystem& rs, const std::vector<Rational>& g,
                                    const std::vector<int>& k_angular);

// Multi-indices over the non-r^2 generator slots at angular level m.
std::vector<std::vector<int>> coxeter_enumerate_angular(const RootSystem& rs, long m);
// Their count; equals the dimension of the invariant harmonic space.
long long coxeter_angular_degeneracy(const RootSystem& rs, long m);

// Exact check of the operator identity
//   sum_i a_i^+ a_i + 2 omega sum_alpha g_alpha s_alpha = -L(g) + omega^2 r^2 - omega n
// on a W-invariant polynomial, plus [a_i^+, a_j^+] = 0 on arbitrary input.
struct HamiltonianIdentityReport {
    bool identity_ok = false;
    bool commutators_ok = false;
};
HamiltonianIdentityReport gauged_hamiltonian_check(const RootSystem& rs, const std::vector<Rational>& g,
                                                   const Rational& omega, const MultiPoly& f);

}  // namespace angcm
