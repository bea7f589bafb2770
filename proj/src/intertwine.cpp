#include "angcm/intertwine.hpp"

#include "angcm/errors.hpp"
#include "angcm/harmonics.hpp"
#include "angcm/linalg.hpp"
#include "angcm/spectra.hpp"

namespace angcm {

MultiPoly intertwiner_apply(const IntertwinerContext& ictx, const MultiPoly& f) {
    const DunklContext& ctx = ictx.ctx;
    if (f.nvars() != ctx.n) throw Error("variable-count mismatch with context");
    if (!f.is_symmetric()) throw NotSymmetric("K(g) acts on permutation-symmetric polynomials");
    MultiPoly t = vandermonde(ctx.n) * f;
    // The pair factors commute, so any order works.
    for (int i = 1; i <= ctx.n && !t.is_zero(); ++i)
        for (int j = i + 1; j <= ctx.n && !t.is_zero(); ++j)
            t = dunkl_apply(ctx, i, t) - dunkl_apply(ctx, j, t);
    return t;
}

MultiPoly intertwining_residual(const IntertwinerContext& ictx, const MultiPoly& f) {
    const DunklContext& ctx = ictx.ctx;
    DunklContext shifted(ctx.n, ctx.g + Rational(1));
    MultiPoly lhs = intertwiner_apply(ictx, calogero_L_apply(shifted, f));
    MultiPoly rhs = calogero_L_apply(ctx, intertwiner_apply(ictx, f));
    return lhs - rhs;
}

GaussianRational dunkl_pairing(const DunklContext& ctx, const MultiPoly& hp, const MultiPoly& h) {
    if (hp.nvars() != h.nvars()) throw Error("variable-count mismatch");
    GaussianRational acc;
    for (const auto& [e, c] : hp.terms()) {
        MultiPoly t = h;
        for (int i = 1; i <= ctx.n && !t.is_zero(); ++i)
            for (int32_t rep = 0; rep < e[i - 1]; ++rep) t = dunkl_apply(ctx, i, t);
        acc += c * t.constant_term();
    }
    return acc;
}

RankProbeReport kernel_probe(const IntertwinerContext& ictx, long m) {
    const DunklContext& ctx = ictx.ctx;
    std::vector<MultiPoly> images;
    for (const auto& lambda : partitions_into_parts(m, ctx.n))
        images.push_back(intertwiner_apply(ictx, monomial_symmetric(ctx.n, lambda)));
    RankProbeReport report;
    report.expected = static_cast<long long>(images.size());
    report.rank = rank_of(images);
    if (report.rank != report.expected)
        throw RankMismatch("K(g) kernel probe at m=" + std::to_string(m) + ": rank " +
                           std::to_string(report.rank) + " != " + std::to_string(report.expected));
    return report;
}

TransportReport harmonic_transport(const IntertwinerContext& ictx, long m) {
    const DunklContext& ctx = ictx.ctx;
    if (!ctx.g.is_integer()) throw UnsupportedCoupling("harmonic transport is checked at integer g");
    DunklContext upper(ctx.n, ctx.g + Rational(1));
    TransportReport report;
    report.expected = degeneracy(ModelVariant::Angular, ctx.n, m);
    std::vector<MultiPoly> images;
    for (const auto& k : enumerate_levels(ModelVariant::Angular, ctx.n, m)) {
        MultiPoly image = intertwiner_apply(ictx, deformed_harmonic(upper, k).poly);
        if (!calogero_L_apply(ctx, image).is_zero())
            throw HarmonicityLost("transported h_k not harmonic at coupling " + ctx.g.str());
        images.push_back(std::move(image));
        ++report.transported;
    }
    report.rank = rank_of(images);
    if (report.rank != report.expected)
        throw RankMismatch("harmonic transport at m=" + std::to_string(m) + ": rank " +
                           std::to_string(report.rank) + " != " + std::to_string(report.expected));
    return report;
}

}  // namespace angcm
