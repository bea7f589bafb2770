#pragma once

#include "angcm/poly.hpp"
#include "angcm/rational.hpp"

namespace angcm {

// Particle count and coupling of the type-A model.
struct DunklContext {
    int n;
    Rational g;

    DunklContext(int n_, Rational g_) : n(n_), g(std::move(g_)) {
        if (n < 2) throw Error("need at least two particles");
        if (g.is_negative()) throw Error("coupling must be nonnegative");
    }
};

// D_i f = d_i f + g * sum_{j != i} (1 - s_ij) f / (x^i - x^j).
MultiPoly dunkl_apply(const DunklContext& ctx, int i, const MultiPoly& f);
RadialPoly dunkl_apply(const DunklContext& ctx, int i, const RadialPoly& f);

// Newton sum sum_i D_i^l applied to f.
MultiPoly newton_dunkl(const DunklContext& ctx, int l, const MultiPoly& f);
RadialPoly newton_dunkl(const DunklContext& ctx, int l, const RadialPoly& f);

// Gauge-fixed Calogero-Moser operator
//   L(g) = sum_i d_i^2 + sum_{i<j} 2g/(x^i - x^j) (d_i - d_j),
// defined on permutation-symmetric polynomials, where it agrees with
// sum_i D_i^2. Serves as the independent harmonicity oracle.
MultiPoly calogero_L_apply(const DunklContext& ctx, const MultiPoly& f);

}  // namespace angcm
