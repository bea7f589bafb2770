#include "angcm/harmonics.hpp"

#include "angcm/errors.hpp"
#include "angcm/linalg.hpp"

namespace angcm {

namespace {

void check_angular_index(const DunklContext& ctx, const MultiIndex& k) {
    if (static_cast<int>(k.size()) != ctx.n) throw Error("multi-index length must equal n");
    if (!satisfies_variant(ModelVariant::Angular, k))
        throw Error("deformed harmonics require k2 = 0 and nonnegative k");
}

// g n(n-1) as a rational.
Rational coupling_weight(const DunklContext& ctx) {
    return ctx.g * Rational(ctx.n) * Rational(ctx.n - 1);
}

// Kernel of L(g) on symmetric homogeneous degree-m polynomials. Used only at
// the degenerate point n = 2, g = 0 where the radial sandwich yields zero;
// there the kernel is one-dimensional at every level.
MultiPoly symmetric_kernel_harmonic(const DunklContext& ctx, long m) {
    std::vector<MultiPoly> basis;
    for (const auto& lambda : partitions_into_parts(m, ctx.n))
        basis.push_back(monomial_symmetric(ctx.n, lambda));
    std::vector<MultiPoly> images;
    images.reserve(basis.size());
    for (const auto& b : basis) images.push_back(calogero_L_apply(ctx, b));
    auto null = nullspace(coefficient_matrix(images));
    if (null.size() != 1) throw Error("degenerate-cell kernel is not one-dimensional");
    MultiPoly h(ctx.n);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!null[0][i].is_zero()) h += basis[i].scaled(null[0][i]);
    }
    return h;
}

}  // namespace

DeformedHarmonic deformed_harmonic(const DunklContext& ctx, const MultiIndex& k) {
    check_angular_index(ctx, k);
    const long m = level_of(k);
    const Rational q = coupling_weight(ctx) / Rational(2) + Rational(m);

    // Seed exponent -g n(n-1) - n + 2 vanishes only at n = 2, g = 0.
    const Rational seed_exp = -coupling_weight(ctx) - Rational(ctx.n) + Rational(2);
    MultiPoly poly(ctx.n);
    if (m == 0) {
        poly = MultiPoly::one(ctx.n);
    } else if (seed_exp.is_zero()) {
        poly = symmetric_kernel_harmonic(ctx, m);
    } else {
        RadialPoly r = RadialPoly::from_poly(MultiPoly::one(ctx.n), seed_exp / Rational(2));
        for (int l = 1; l <= ctx.n; ++l) {
            if (l == 2) continue;
            for (int rep = 0; rep < k[l - 1]; ++rep) r = newton_dunkl(ctx, l, r);
        }
        r = r.radial_shifted(Rational(m) - seed_exp / Rational(2));
        poly = r.collect();  // throws NotPolynomial on an internal inconsistency
    }
    if (!poly.is_zero() && (!poly.is_homogeneous() || poly.total_degree() != m))
        throw Error("deformed harmonic is not homogeneous of the expected degree");
    return {ctx, k, m, q, std::move(poly)};
}

BasisReport harmonic_basis(const DunklContext& ctx, long m) {
    BasisReport report;
    report.expected = degeneracy(ModelVariant::Angular, ctx.n, m);
    std::vector<MultiPoly> polys;
    for (const auto& k : enumerate_levels(ModelVariant::Angular, ctx.n, m)) {
        report.basis.push_back(deformed_harmonic(ctx, k));
        polys.push_back(report.basis.back().poly);
    }
    report.rank = rank_of(polys);
    if (report.rank != report.expected)
        throw RankMismatch("harmonic basis at n=" + std::to_string(ctx.n) + ", m=" + std::to_string(m) +
                           ": rank " + std::to_string(report.rank) + " != " + std::to_string(report.expected));
    return report;
}

AngularEigenfunction angular_eigenfunction(const DunklContext& ctx, const MultiIndex& k) {
    DeformedHarmonic h = deformed_harmonic(ctx, k);
    SpectrumEntry e = energy(ModelVariant::Angular, ctx.n, ctx.g, k);
    return {std::move(h), e.q, e.energy};
}

RelativeHarmonic relative_harmonic(const DunklContext& ctx, const MultiIndex& k) {
    if (static_cast<int>(k.size()) != ctx.n) throw Error("multi-index length must equal n");
    if (!satisfies_variant(ModelVariant::RelativeAngular, k))
        throw Error("relative harmonics require k1 = k2 = 0");
    DeformedHarmonic h = deformed_harmonic(ctx, k);
    SpectrumEntry e = energy(ModelVariant::RelativeAngular, ctx.n, ctx.g, k);
    return {h.poly.restricted_to_hyperplane(), e.q, e.energy};
}

MultiPoly gauged_creation_apply(const DunklContext& ctx, const Rational& omega, int i, const MultiPoly& f) {
    MultiPoly t = dunkl_apply(ctx, i, f);
    t -= (MultiPoly::variable(ctx.n, i) * f).scaled(GaussianRational(omega * Rational(2)));
    return t.scaled(-GaussianRational::i());
}

OscillatorState oscillator_state(const DunklContext& ctx, const Rational& omega, const MultiIndex& k) {
    if (static_cast<int>(k.size()) != ctx.n) throw Error("multi-index length must equal n");
    if (!ctx.g.is_integer()) throw UnsupportedCoupling("oscillator states need integer g");
    if (!(omega > Rational(0))) throw Error("omega must be positive");
    for (int ki : k)
        if (ki < 0) throw Error("multi-index entries must be nonnegative");

    // (B_l^+)^(k_l) applied to the seed 1, with the creation operators already
    // commuted through the Gaussian; Delta^g multiplies the result.
    MultiPoly p = MultiPoly::one(ctx.n);
    for (int l = 1; l <= ctx.n; ++l) {
        for (int rep = 0; rep < k[l - 1]; ++rep) {
            MultiPoly acc(ctx.n);
            for (int i = 1; i <= ctx.n; ++i) {
                MultiPoly t = p;
                for (int power = 0; power < l; ++power) t = gauged_creation_apply(ctx, omega, i, t);
                acc += t;
            }
            p = std::move(acc);
        }
    }
    MultiPoly prefactor = vandermonde(ctx.n).pow(ctx.g.to_long()) * p;
    Rational e_units = energy(ModelVariant::Full, ctx.n, ctx.g, k).energy;
    return {ctx, omega, k, std::move(prefactor), omega * e_units};
}

MultiPoly gauged_hamiltonian_apply(const DunklContext& ctx, const Rational& omega, const MultiPoly& f) {
    MultiPoly r(ctx.n);
    for (int i = 1; i <= ctx.n; ++i) {
        MultiPoly di = f.derivative(i);
        r -= di.derivative(i).scaled(GaussianRational(Rational(1, 2)));
        r += (MultiPoly::variable(ctx.n, i) * di).scaled(GaussianRational(omega));
    }
    r += f.scaled(GaussianRational(omega * Rational(ctx.n) / Rational(2)));
    const Rational gg = ctx.g * (ctx.g - Rational(1));
    if (!gg.is_zero()) {
        for (int i = 1; i <= ctx.n; ++i) {
            for (int j = i + 1; j <= ctx.n; ++j) {
                MultiPoly wall = MultiPoly::variable(ctx.n, i) - MultiPoly::variable(ctx.n, j);
                r += exact_divide(f, wall * wall).scaled(GaussianRational(gg));
            }
        }
    }
    return r;
}

}  // namespace angcm
