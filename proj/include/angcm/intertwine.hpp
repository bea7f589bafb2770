#pragma once

#include "angcm/dunkl.hpp"
#include "angcm/poly.hpp"

namespace angcm {

// K(g) shifts the coupling: K(g) L(g+1) = L(g) K(g). Only defined here on
// permutation-symmetric polynomials, as  K(g) = [prod_{i<j} (D_i - D_j)] Delta.
struct IntertwinerContext {
    DunklContext ctx;  // source coupling g; target coupling is g+1
    explicit IntertwinerContext(DunklContext c) : ctx(std::move(c)) {}
};

MultiPoly intertwiner_apply(const IntertwinerContext& ictx, const MultiPoly& f);

// K(g)(L(g+1) f) - L(g)(K(g) f); identically zero by the intertwining relation.
MultiPoly intertwining_residual(const IntertwinerContext& ictx, const MultiPoly& f);

// (h', h) = h'(D_1,...,D_n) h(x) evaluated at x = 0.
GaussianRational dunkl_pairing(const DunklContext& ctx, const MultiPoly& hp, const MultiPoly& h);

struct RankProbeReport {
    long rank = 0;
    long long expected = 0;
};

// Applies K(g) to the symmetric-monomial basis of degree m and checks the
// image has full rank (the kernel of K(g) contains no symmetric polynomial).
RankProbeReport kernel_probe(const IntertwinerContext& ictx, long m);

struct TransportReport {
    long transported = 0;
    long rank = 0;
    long long expected = 0;
};

// Transports the coupling-(g+1) harmonic basis at level m through K(g) and
// checks that every image is annihilated by L(g) and that the dimension
// p_n(m) - p_n(m-2) survives.
TransportReport harmonic_transport(const IntertwinerContext& ictx, long m);

}  // namespace angcm
