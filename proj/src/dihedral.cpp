#include "angcm/dihedral.hpp"

#include <map>

#include "angcm/errors.hpp"
#include "angcm/linalg.hpp"

namespace angcm {
namespace dihedral {

namespace {

constexpr int kZ = 1;     // variable index of z
constexpr int kZbar = 2;  // variable index of z-bar

void check_setup(int p, const std::vector<Rational>& g) {
    if (p < 2) throw Unsupported("dihedral order must be at least 2");
    const std::size_t want = (p % 2 == 0) ? 2 : 1;
    if (g.size() != want) throw Error("I2(p) expects one multiplicity per mirror orbit");
    for (const auto& gi : g)
        if (gi.is_negative()) throw Error("multiplicities must be nonnegative");
}

// Substitute x1 -> img1, x2 -> img2 with power caching.
MultiPoly substitute2(const MultiPoly& f, const MultiPoly& img1, const MultiPoly& img2) {
    std::map<int32_t, MultiPoly> pow1, pow2;
    pow1.emplace(0, MultiPoly::one(2));
    pow2.emplace(0, MultiPoly::one(2));
    auto power = [](std::map<int32_t, MultiPoly>& cache, const MultiPoly& base, int32_t e) -> const MultiPoly& {
        auto it = cache.find(e);
        if (it == cache.end()) it = cache.emplace(e, base.pow(e)).first;
        return it->second;
    };
    MultiPoly out(2);
    for (const auto& [e, c] : f.terms())
        out += (power(pow1, img1, e[0]) * power(pow2, img2, e[1])).scaled(c);
    return out;
}

// Orbit-summed reflection part of T = D_x + i D_y on one monomial z^a zbar^b.
// The geometric sums over the mirror roots of unity survive only on exponent
// gaps divisible by the orbit step, which keeps every coefficient rational.
void accumulate_orbit_sum(MultiPoly& out, int32_t a, int32_t b, const GaussianRational& c, long step,
                          long factor, bool alternating) {
    const long d = a - b;
    if (d > 0) {
        for (long j = 1; j * step <= d; ++j) {
            // base factor -factor; the odd-mirror orbit alternates with j
            long f = alternating ? ((j % 2 == 1) ? factor : -factor) : -factor;
            Exponents e{static_cast<int32_t>(b + d - j * step), static_cast<int32_t>(b + j * step - 1)};
            out.add_term(e, c * GaussianRational(Rational(f)));
        }
    } else if (d < 0) {
        const long e_gap = -d;
        for (long j = 0; j * step <= e_gap - 1; ++j) {
            long f = alternating ? ((j % 2 == 1) ? -factor : factor) : factor;
            Exponents e{static_cast<int32_t>(a + j * step), static_cast<int32_t>(a + e_gap - 1 - j * step)};
            out.add_term(e, c * GaussianRational(Rational(f)));
        }
    }
}

// Reflection part of T for one orbit, applied to a whole polynomial.
MultiPoly orbit_sum(int p, int orbit, const MultiPoly& f) {
    MultiPoly out(2);
    const bool even = (p % 2 == 0);
    const long step = even ? p / 2 : p;
    const long factor = even ? p / 2 : p;
    const bool alternating = even && orbit == 1;
    for (const auto& [e, c] : f.terms()) accumulate_orbit_sum(out, e[0], e[1], c, step, factor, alternating);
    return out;
}

MultiPoly bar(const MultiPoly& f) {
    MultiPoly out(2);
    for (const auto& [e, c] : f.terms()) out.add_term({e[1], e[0]}, c.conj());
    return out;
}

// Radial stack P_j(z, zbar) * (z zbar)^(base+j); (z zbar) = r^2 in this chart.
struct ZRadial {
    Rational base;
    std::map<long, MultiPoly> parts;

    void add(long off, const MultiPoly& p) {
        if (p.is_zero()) return;
        auto [it, inserted] = parts.emplace(off, p);
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero()) parts.erase(it);
        }
    }
};

ZRadial t_apply_radial(int p, const std::vector<Rational>& g, const ZRadial& f) {
    ZRadial out{f.base, {}};
    const MultiPoly z = MultiPoly::variable(2, kZ);
    for (const auto& [j, part] : f.parts) {
        // 2 d_zbar on P (z zbar)^c
        out.add(j, part.derivative(kZbar).scaled(GaussianRational(Rational(2))));
        Rational c = f.base + Rational(j);
        if (!c.is_zero()) out.add(j - 1, (z * part).scaled(GaussianRational(c * Rational(2))));
        // reflections see (z zbar)^c as a constant
        for (std::size_t orbit = 0; orbit < g.size(); ++orbit) {
            if (g[orbit].is_zero()) continue;
            out.add(j, orbit_sum(p, static_cast<int>(orbit), part).scaled(GaussianRational(g[orbit] * Rational(2))));
        }
    }
    return out;
}

ZRadial bar_radial(const ZRadial& f) {
    ZRadial out{f.base, {}};
    for (const auto& [j, part] : f.parts) out.add(j, bar(part));
    return out;
}

ZRadial tbar_apply_radial(int p, const std::vector<Rational>& g, const ZRadial& f) {
    return bar_radial(t_apply_radial(p, g, bar_radial(f)));
}

ZRadial add_radial(const ZRadial& a, const ZRadial& b) {
    Rational gap = b.base - a.base;
    if (!gap.is_integer()) throw Error("radial bases differ by a non-integer");
    ZRadial out{a.base, a.parts};
    for (const auto& [j, part] : b.parts) out.add(j + gap.to_long(), part);
    return out;
}

ZRadial scale_radial(const ZRadial& a, const GaussianRational& c) {
    ZRadial out{a.base, {}};
    for (const auto& [j, part] : a.parts) out.add(j, part.scaled(c));
    return out;
}

// sigma_2(D) = (T^p + conj(T)^p) / 2 applied to a radial stack.
ZRadial invariant_generator_apply(int p, const std::vector<Rational>& g, const ZRadial& f) {
    ZRadial u = f, v = f;
    for (int rep = 0; rep < p; ++rep) u = t_apply_radial(p, g, u);
    for (int rep = 0; rep < p; ++rep) v = tbar_apply_radial(p, g, v);
    return scale_radial(add_radial(u, v), GaussianRational(Rational(1, 2)));
}

Rational mult_sum(int p, const std::vector<Rational>& g) {
    if (p % 2 == 0) return Rational(p / 2) * (g[0] + g[1]);
    return Rational(p) * g[0];
}

MultiPoly mul_z(const MultiPoly& f) { return MultiPoly::variable(2, kZ) * f; }
MultiPoly mul_zbar(const MultiPoly& f) { return MultiPoly::variable(2, kZbar) * f; }

}  // namespace

MultiPoly to_complex_chart(const MultiPoly& f_xy) {
    if (f_xy.nvars() != 2) throw Error("chart conversion needs two variables");
    const GaussianRational half(Rational(1, 2));
    const GaussianRational minus_half_i(Rational(0), Rational(-1, 2));
    MultiPoly x_img = (MultiPoly::variable(2, kZ) + MultiPoly::variable(2, kZbar)).scaled(half);
    MultiPoly y_img = (MultiPoly::variable(2, kZ) - MultiPoly::variable(2, kZbar)).scaled(minus_half_i);
    return substitute2(f_xy, x_img, y_img);
}

MultiPoly from_complex_chart(const MultiPoly& f_z) {
    if (f_z.nvars() != 2) throw Error("chart conversion needs two variables");
    const GaussianRational i = GaussianRational::i();
    MultiPoly z_img = MultiPoly::variable(2, 1) + MultiPoly::variable(2, 2).scaled(i);
    MultiPoly zbar_img = MultiPoly::variable(2, 1) - MultiPoly::variable(2, 2).scaled(i);
    return substitute2(f_z, z_img, zbar_img);
}

MultiPoly t_apply(int p, const std::vector<Rational>& g, const MultiPoly& f) {
    check_setup(p, g);
    MultiPoly out = f.derivative(kZbar).scaled(GaussianRational(Rational(2)));
    for (std::size_t orbit = 0; orbit < g.size(); ++orbit) {
        if (g[orbit].is_zero()) continue;
        out += orbit_sum(p, static_cast<int>(orbit), f).scaled(GaussianRational(g[orbit] * Rational(2)));
    }
    return out;
}

MultiPoly tbar_apply(int p, const std::vector<Rational>& g, const MultiPoly& f) {
    return bar(t_apply(p, g, bar(f)));
}

MultiPoly dunkl_x_apply(int p, const std::vector<Rational>& g, const MultiPoly& f) {
    return (t_apply(p, g, f) + tbar_apply(p, g, f)).scaled(GaussianRational(Rational(1, 2)));
}

MultiPoly dunkl_y_apply(int p, const std::vector<Rational>& g, const MultiPoly& f) {
    return (t_apply(p, g, f) - tbar_apply(p, g, f)).scaled(GaussianRational(Rational(0), Rational(-1, 2)));
}

MultiPoly l_apply(int p, const std::vector<Rational>& g, const MultiPoly& f) {
    check_setup(p, g);
    MultiPoly fz = f.derivative(kZ), fzb = f.derivative(kZbar);
    MultiPoly out = fz.derivative(kZbar).scaled(GaussianRational(Rational(4)));
    auto orbit_term = [&](long q, bool plus, const Rational& mult) -> MultiPoly {
        // 4 g q (z^(q-1) d_zbar f -+ zbar^(q-1) d_z f) / (z^q -+ zbar^q)
        MultiPoly zq1 = MultiPoly::monomial(2, {static_cast<int32_t>(q - 1), 0}, GaussianRational(1));
        MultiPoly zbq1 = MultiPoly::monomial(2, {0, static_cast<int32_t>(q - 1)}, GaussianRational(1));
        MultiPoly num = zq1 * fzb;
        MultiPoly den = MultiPoly::monomial(2, {static_cast<int32_t>(q), 0}, GaussianRational(1));
        MultiPoly zbq = MultiPoly::monomial(2, {0, static_cast<int32_t>(q)}, GaussianRational(1));
        if (plus) {
            num += zbq1 * fz;
            den += zbq;
        } else {
            num -= zbq1 * fz;
            den -= zbq;
        }
        if (num.is_zero()) return num;
        try {
            return exact_divide(num, den).scaled(GaussianRational(mult * Rational(4) * Rational(q)));
        } catch (const DivisionNotExact&) {
            throw NotInvariant("dihedral L(g) needs a W-invariant input");
        }
    };
    if (p % 2 == 0) {
        if (!g[0].is_zero()) out += orbit_term(p / 2, false, g[0]);
        if (!g[1].is_zero()) out += orbit_term(p / 2, true, g[1]);
    } else if (!g[0].is_zero()) {
        out += orbit_term(p, false, g[0]);
    }
    return out;
}

bool is_invariant(int p, const MultiPoly& f_z) {
    // Rotation subgroup: exponent gap divisible by p; mirror z <-> zbar.
    for (const auto& [e, c] : f_z.terms()) {
        if ((e[0] - e[1]) % p != 0) return false;
        if (f_z.coeff({e[1], e[0]}) != c) return false;
    }
    return true;
}

MultiPoly deformed_harmonic(int p, const std::vector<Rational>& g, int k2) {
    check_setup(p, g);
    if (k2 < 0) throw Error("k2 must be nonnegative");
    if (k2 == 0) return MultiPoly::one(2);
    const Rational big_s = mult_sum(p, g);
    const long m = static_cast<long>(p) * k2;

    MultiPoly hz(2);
    if (big_s.is_zero()) {
        // Degenerate seed r^0: recover the harmonic as the exact kernel of the
        // plain Laplacian on the invariant basis of degree m.
        std::vector<MultiPoly> basis;
        for (int32_t a = static_cast<int32_t>(m); 2 * a >= m; --a) {
            int32_t b = static_cast<int32_t>(m) - a;
            if ((a - b) % p != 0) continue;
            MultiPoly mono = MultiPoly::monomial(2, {a, b}, GaussianRational(1));
            if (a != b) mono.add_term({b, a}, GaussianRational(1));
            basis.push_back(std::move(mono));
        }
        std::vector<MultiPoly> images;
        images.reserve(basis.size());
        for (const auto& b : basis) images.push_back(l_apply(p, g, b));
        auto null = nullspace(coefficient_matrix(images));
        if (null.size() != 1) throw Error("dihedral degenerate-cell kernel is not one-dimensional");
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (!null[0][i].is_zero()) hz += basis[i].scaled(null[0][i]);
    } else {
        ZRadial r{-big_s, {}};
        r.add(0, MultiPoly::one(2));
        for (int rep = 0; rep < k2; ++rep) r = invariant_generator_apply(p, g, r);
        const Rational q = big_s + Rational(m);
        r.base += q;  // multiply by r^(2(q-1)+n) = (z zbar)^q at n = 2
        for (const auto& [j, part] : r.parts) {
            Rational e = r.base + Rational(j);
            if (!e.is_integer() || e.is_negative())
                throw NotPolynomial("(r^2)^" + e.str() + " with a nonzero coefficient");
            int32_t ee = static_cast<int32_t>(e.to_long());
            hz += part * MultiPoly::monomial(2, {ee, ee}, GaussianRational(1));
        }
    }
    MultiPoly h = from_complex_chart(hz);
    if (!h.is_real()) throw Error("dihedral harmonic has non-real coefficients");
    return h;
}

bool hamiltonian_identity_ok(int p, const std::vector<Rational>& g, const Rational& omega,
                             const MultiPoly& f) {
    check_setup(p, g);
    // sum_i a_i^+ a_i = -(sum_i D_i^2 + omega sum_i [D_i, x^i .]) + omega^2 r^2,
    // written in the complex chart where sum_i D_i^2 = T conj(T).
    MultiPoly tt = t_apply(p, g, tbar_apply(p, g, f));
    MultiPoly di_xi = (t_apply(p, g, mul_zbar(f)) + tbar_apply(p, g, mul_z(f)))
                          .scaled(GaussianRational(Rational(1, 2)));
    MultiPoly xi_di = (mul_zbar(t_apply(p, g, f)) + mul_z(tbar_apply(p, g, f)))
                          .scaled(GaussianRational(Rational(1, 2)));
    MultiPoly r2f = mul_z(mul_zbar(f));
    MultiPoly lhs = -(tt + (di_xi - xi_di).scaled(GaussianRational(omega))) + r2f.scaled(GaussianRational(omega * omega));
    lhs += f.scaled(GaussianRational(omega * Rational(2) * mult_sum(p, g)));
    MultiPoly rhs = -l_apply(p, g, f) + r2f.scaled(GaussianRational(omega * omega)) -
                    f.scaled(GaussianRational(omega * Rational(2)));
    return lhs == rhs;
}

bool creation_commutator_ok(int p, const std::vector<Rational>& g, const Rational& omega,
                            const MultiPoly& f) {
    check_setup(p, g);
    const GaussianRational half(Rational(1, 2));
    auto x_of = [&](const MultiPoly& w) { return (mul_z(w) + mul_zbar(w)).scaled(half); };
    auto y_of = [&](const MultiPoly& w) {
        return (mul_z(w) - mul_zbar(w)).scaled(GaussianRational(Rational(0), Rational(-1, 2)));
    };
    auto adag_x = [&](const MultiPoly& w) {
        return (dunkl_x_apply(p, g, w) - x_of(w).scaled(GaussianRational(omega))).scaled(-GaussianRational::i());
    };
    auto adag_y = [&](const MultiPoly& w) {
        return (dunkl_y_apply(p, g, w) - y_of(w).scaled(GaussianRational(omega))).scaled(-GaussianRational::i());
    };
    return adag_x(adag_y(f)) == adag_y(adag_x(f));
}

}  // namespace dihedral
}  // namespace angcm
