#pragma once

#include <string>
#include <vector>

#include "angcm/rational.hpp"

namespace angcm {

// The four model variants: full oscillator model, center-of-mass-removed
// model, spherical reduction, and both reductions combined.
enum class ModelVariant { Full, Relative, Angular, RelativeAngular };

std::string variant_name(ModelVariant v);
ModelVariant parse_variant(std::string_view s);

using MultiIndex = std::vector<int>;

long level_of(const MultiIndex& k);
// Variant constraints: Relative needs k1=0, Angular k2=0, both for RelativeAngular.
bool satisfies_variant(ModelVariant v, const MultiIndex& k);

// Partitions of m into parts not larger than n; p_n(m) = 0 for m < 0.
long long partitions_count(int n, long m);

// All k = (k1..kn) >= 0 with sum_i i*k_i = m respecting the variant
// constraints, in ascending lexicographic order.
std::vector<MultiIndex> enumerate_levels(ModelVariant v, int n, long m);

struct SpectrumEntry {
    MultiIndex k;
    Rational energy;  // units of omega for Full/Relative, dimensionless otherwise
    Rational q;       // q (angular), q-tilde (relative angular), or zero where unused
    long long degeneracy = 0;
};

// Energy of a single multi-index. Full/Relative energies are returned in
// units of omega; the angular energies never see omega at all.
SpectrumEntry energy(ModelVariant v, int n, const Rational& g, const MultiIndex& k);

// Degeneracy of level m per variant, from restricted partition counts.
long long degeneracy(ModelVariant v, int n, long m);

}  // namespace angcm
