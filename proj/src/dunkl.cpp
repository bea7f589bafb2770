#include "angcm/dunkl.hpp"

#include "angcm/errors.hpp"

namespace angcm {

namespace {

void check_particle(const DunklContext& ctx, int i) {
    if (i < 1 || i > ctx.n) throw Error("particle index out of range");
}

void check_vars(const DunklContext& ctx, int nvars) {
    if (nvars != ctx.n) throw Error("variable-count mismatch with context");
}

// (1 - s_ij) f / (x^i - x^j); the numerator is antisymmetric in (i, j), so
// the division is exact.
MultiPoly reflection_quotient(const MultiPoly& f, int i, int j) {
    MultiPoly num = f - f.transposed(i, j);
    if (num.is_zero()) return num;
    MultiPoly den = MultiPoly::variable(f.nvars(), i) - MultiPoly::variable(f.nvars(), j);
    return exact_divide(num, den);
}

}  // namespace

MultiPoly dunkl_apply(const DunklContext& ctx, int i, const MultiPoly& f) {
    check_particle(ctx, i);
    check_vars(ctx, f.nvars());
    MultiPoly r = f.derivative(i);
    if (!ctx.g.is_zero()) {
        MultiPoly refl(f.nvars());
        for (int j = 1; j <= ctx.n; ++j) {
            if (j == i) continue;
            refl += reflection_quotient(f, i, j);
        }
        r += refl.scaled(GaussianRational(ctx.g));
    }
    return r;
}

RadialPoly dunkl_apply(const DunklContext& ctx, int i, const RadialPoly& f) {
    check_particle(ctx, i);
    check_vars(ctx, f.nvars());
    RadialPoly r(f.nvars(), f.base());
    const MultiPoly xi = MultiPoly::variable(f.nvars(), i);
    for (const auto& [j, p] : f.parts()) {
        // d_i acting on P (r^2)^(a+j): dP (r^2)^(a+j) + 2(a+j) x^i P (r^2)^(a+j-1).
        r.add_part(j, p.derivative(i));
        Rational e = f.base() + Rational(j);
        if (!e.is_zero()) r.add_part(j - 1, (xi * p).scaled(GaussianRational(e * Rational(2))));
        // The reflection part leaves the symmetric (r^2)^(a+j) factor alone.
        if (!ctx.g.is_zero()) {
            MultiPoly refl(f.nvars());
            for (int k = 1; k <= ctx.n; ++k) {
                if (k == i) continue;
                refl += reflection_quotient(p, i, k);
            }
            r.add_part(j, refl.scaled(GaussianRational(ctx.g)));
        }
    }
    return r;
}

namespace {

template <typename T>
T newton_sum(const DunklContext& ctx, int l, const T& f) {
    if (l < 1) throw Error("Newton sum order must be positive");
    T acc = f;
    bool first = true;
    for (int i = 1; i <= ctx.n; ++i) {
        T t = f;
        for (int rep = 0; rep < l; ++rep) t = dunkl_apply(ctx, i, t);
        if (first) {
            acc = std::move(t);
            first = false;
        } else {
            acc += t;
        }
    }
    return acc;
}

}  // namespace

MultiPoly newton_dunkl(const DunklContext& ctx, int l, const MultiPoly& f) { return newton_sum(ctx, l, f); }
RadialPoly newton_dunkl(const DunklContext& ctx, int l, const RadialPoly& f) { return newton_sum(ctx, l, f); }

MultiPoly calogero_L_apply(const DunklContext& ctx, const MultiPoly& f) {
    check_vars(ctx, f.nvars());
    MultiPoly r(f.nvars());
    std::vector<MultiPoly> grad;
    grad.reserve(ctx.n);
    for (int i = 1; i <= ctx.n; ++i) {
        grad.push_back(f.derivative(i));
        r += grad.back().derivative(i);
    }
    if (ctx.g.is_zero()) return r;
    const GaussianRational two_g(ctx.g * Rational(2));
    for (int i = 1; i <= ctx.n; ++i) {
        for (int j = i + 1; j <= ctx.n; ++j) {
            MultiPoly num = grad[i - 1] - grad[j - 1];
            if (num.is_zero()) continue;
            MultiPoly den = MultiPoly::variable(f.nvars(), i) - MultiPoly::variable(f.nvars(), j);
            try {
                r += exact_divide(num, den).scaled(two_g);
            } catch (const DivisionNotExact&) {
                throw NotSymmetric("L(g) needs a permutation-symmetric input");
            }
        }
    }
    return r;
}

}  // namespace angcm
