#pragma once

#include <string>
#include <vector>

#include "angcm/rational.hpp"

namespace angcm {

struct CheckResult {
    std::string name;
    long cells = 0;     // exact identities / cases evaluated
    long failures = 0;  // how many of them failed
    double seconds = 0.0;
    std::vector<std::string> notes;  // first few failure descriptions

    bool ok() const { return failures == 0; }
};

// Sweep bounds for the verification suites. The defaults match the CLI
// defaults; the acceptance suite passes its own (larger) bounds.
struct VerifyBounds {
    int max_n = 4;
    long max_level = 6;
    std::vector<Rational> couplings{Rational(0), Rational(1, 2), Rational(1), Rational(2)};
    unsigned long seed = 12345;
};

CheckResult check_polycore(const VerifyBounds& b);           // randomized algebra invariants
CheckResult check_dunkl_properties(const VerifyBounds& b);   // commutativity, degree, equivariance, oracle
CheckResult check_counting(const VerifyBounds& b);           // |enumerate_levels| == degeneracy
CheckResult check_harmonicity(const VerifyBounds& b);        // L(g) h_k = 0
CheckResult check_degeneracy(const VerifyBounds& b);         // exact rank vs p_n(m)-p_n(m-2)
CheckResult check_printed_forms(const VerifyBounds& b);      // the displayed h_k at m=2,3
CheckResult check_oscillator(const VerifyBounds& b);         // displayed Psi list + eigen-equation
CheckResult check_newton_exclusion(const VerifyBounds& b);   // sum_i D_i^2 r^(...) = 0
CheckResult check_intertwining(const VerifyBounds& b);       // K(g)L(g+1) = L(g)K(g)
CheckResult check_kernel(const VerifyBounds& b);             // K(g) kernel probe, full rank
CheckResult check_transport(const VerifyBounds& b);          // harmonic transport
CheckResult check_pairing(const VerifyBounds& b);            // Dunkl pairing adjointness
CheckResult check_spectral_flow(const VerifyBounds& b);      // g -> g+1 level-list shift
CheckResult check_special_cases(const VerifyBounds& b);      // n=2 and n=3 closed forms
CheckResult check_coxeter(const VerifyBounds& b);            // root-system suites + consistency
CheckResult check_spin(const VerifyBounds& b);               // spin content list + nonnegativity
CheckResult check_pieri_dimension(const VerifyBounds& b);    // randomized dimension conservation

std::vector<std::string> available_checks();
// Runs the named checks (all when names is empty); unknown names throw.
std::vector<CheckResult> run_checks(const VerifyBounds& b, const std::vector<std::string>& names);

}  // namespace angcm
