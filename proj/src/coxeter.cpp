#include "angcm/coxeter.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "angcm/dihedral.hpp"
#include "angcm/errors.hpp"
#include "angcm/linalg.hpp"

namespace angcm {

namespace {

std::vector<Rational> unit_vector(int n, int i, int sign = 1) {
    std::vector<Rational> v(n, Rational(0));
    v[i - 1] = Rational(sign);
    return v;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// s_alpha(v) = v - 2 (alpha.v)/(alpha.alpha) alpha.
std::vector<Rational> reflect_vector(const std::vector<Rational>& alpha, const std::vector<Rational>& v) {
    Rational c = dot(alpha, v) * Rational(2) / dot(alpha, alpha);
    std::vector<Rational> out = v;
    for (std::size_t i = 0; i < v.size(); ++i) out[i] -= c * alpha[i];
    return out;
}

// Fills the reflection matrix and detects the signed-permutation fast path.
void finish_reflection(Reflection& r) {
    const int n = static_cast<int>(r.root.size());
    r.matrix.assign(n, std::vector<Rational>(n, Rational(0)));
    Rational norm = dot(r.root, r.root);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) r.matrix[i][j] = Rational(1);
            r.matrix[i][j] -= Rational(2) * r.root[i] * r.root[j] / norm;
        }
    }
    r.signed_perm = true;
    r.perm.assign(n, 0);
    r.sign.assign(n, 1);
    for (int i = 0; i < n && r.signed_perm; ++i) {
        int hits = 0;
        for (int j = 0; j < n; ++j) {
            const Rational& m = r.matrix[i][j];
            if (m.is_zero()) continue;
            if (m == Rational(1) || m == Rational(-1)) {
                r.perm[i] = j + 1;
                r.sign[i] = m.is_negative() ? -1 : 1;
                ++hits;
            } else {
                hits = 2;
                break;
            }
        }
        if (hits != 1) r.signed_perm = false;
    }
}

// Orbit partition under the group, with a closure check: every reflection
// must map the root set to itself (up to sign).
void compute_orbits(std::vector<Reflection>& roots) {
    const int n = roots.empty() ? 0 : static_cast<int>(roots[0].root.size());
    auto find_root = [&](const std::vector<Rational>& v) -> int {
        for (std::size_t t = 0; t < roots.size(); ++t) {
            bool plus = true, minus = true;
            for (int i = 0; i < n; ++i) {
                if (roots[t].root[i] != v[i]) plus = false;
                if (roots[t].root[i] != -v[i]) minus = false;
            }
            if (plus || minus) return static_cast<int>(t);
        }
        return -1;
    };
    std::vector<int> parent(roots.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (std::size_t s = 0; s < roots.size(); ++s) {
        for (std::size_t t = 0; t < roots.size(); ++t) {
            int image = find_root(reflect_vector(roots[s].root, roots[t].root));
            if (image < 0) throw Error("reflection does not preserve the root set");
            parent[find(static_cast<int>(t))] = find(image);
        }
    }
    std::vector<int> label(roots.size(), -1);
    int next = 0;
    for (std::size_t t = 0; t < roots.size(); ++t) {
        int rep = find(static_cast<int>(t));
        if (label[rep] < 0) label[rep] = next++;
        roots[t].orbit = label[rep];
    }
}

MultiPoly power_sum(int n, int e) {
    MultiPoly p(n);
    for (int i = 1; i <= n; ++i) {
        Exponents exp(n, 0);
        exp[i - 1] = e;
        p.add_term(exp, GaussianRational(1));
    }
    return p;
}

MultiPoly coordinate_product(int n) {
    return MultiPoly::monomial(n, Exponents(n, 1), GaussianRational(1));
}

// Re((x+iy)^p) expanded over the rationals.
MultiPoly dihedral_invariant_xy(int p) {
    MultiPoly re(2);
    Rational binom(1);
    for (int j = 0; j <= p; ++j) {
        if (j % 2 == 0) {
            Rational c = binom;
            if ((j / 2) % 2 == 1) c = -c;
            re.add_term({static_cast<int32_t>(p - j), static_cast<int32_t>(j)}, GaussianRational(c));
        }
        binom = binom * Rational(p - j) / Rational(j + 1);
    }
    return re;
}

void check_multiplicities(const RootSystem& rs, const std::vector<Rational>& g) {
    if (static_cast<int>(g.size()) != rs.orbit_count)
        throw Error("expected one multiplicity per orbit (" + std::to_string(rs.orbit_count) + ")");
    for (const auto& gi : g)
        if (gi.is_negative()) throw Error("multiplicities must be nonnegative");
}

void check_generic(const RootSystem& rs) {
    if (rs.is_dihedral())
        throw Unsupported("dihedral systems use the complex-chart operators (dihedral.hpp)");
}

MultiPoly reflect_poly(const Reflection& r, const MultiPoly& f) {
    return r.signed_perm ? f.substituted_signed(r.perm, r.sign) : f.substituted_linear(r.matrix);
}

MultiPoly root_linear_form(const RootSystem& rs, const Reflection& r) {
    MultiPoly l(rs.nvars);
    for (int i = 0; i < rs.nvars; ++i) {
        if (r.root[i].is_zero()) continue;
        Exponents e(rs.nvars, 0);
        e[i] = 1;
        l.add_term(e, GaussianRational(r.root[i]));
    }
    return l;
}

// All group elements as matrices, by closure over the reflections. Only used
// for the degenerate-seed fallback, where the rank is 2.
std::vector<std::vector<std::vector<Rational>>> group_elements(const RootSystem& rs) {
    std::vector<std::vector<std::vector<Rational>>> elems;
    std::vector<std::vector<Rational>> id(rs.nvars, std::vector<Rational>(rs.nvars, Rational(0)));
    for (int i = 0; i < rs.nvars; ++i) id[i][i] = Rational(1);
    elems.push_back(id);
    auto mat_mul = [&](const auto& a, const auto& b) {
        std::vector<std::vector<Rational>> c(rs.nvars, std::vector<Rational>(rs.nvars, Rational(0)));
        for (int i = 0; i < rs.nvars; ++i)
            for (int k = 0; k < rs.nvars; ++k)
                for (int j = 0; j < rs.nvars; ++j) c[i][j] += a[i][k] * b[k][j];
        return c;
    };
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& r : rs.positive_roots) {
            auto next = mat_mul(r.matrix, elems[head]);
            if (std::find(elems.begin(), elems.end(), next) == elems.end()) elems.push_back(next);
        }
        if (elems.size() > 4096) throw Error("group closure ran away");
    }
    return elems;
}

}  // namespace

std::string family_name(RootFamily f) {
    switch (f) {
        case RootFamily::A: return "A";
        case RootFamily::B: return "B";
        case RootFamily::D: return "D";
        case RootFamily::I2: return "I2";
    }
    return "?";
}

RootSystem build_root_system(RootFamily family, int rank, int p) {
    RootSystem rs;
    rs.family = family;
    rs.rank = rank;
    switch (family) {
        case RootFamily::A: {
            if (rank < 1) throw Unsupported("A needs rank >= 1");
            const int n = rank + 1;
            rs.nvars = n;
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    Reflection r;
                    r.root = unit_vector(n, i);
                    r.root[j - 1] = Rational(-1);
                    rs.positive_roots.push_back(std::move(r));
                }
            for (int d = 1; d <= n; ++d) {
                rs.degrees.push_back(d);
                rs.generators.push_back(power_sum(n, d));
            }
            rs.r2_slot = 1;  // the degree-2 power sum is r^2
            break;
        }
        case RootFamily::B: {
            if (rank < 1) throw Unsupported("B needs rank >= 1");
            const int n = rank;
            rs.nvars = n;
            for (int i = 1; i <= n; ++i) {
                Reflection r;
                r.root = unit_vector(n, i);
                rs.positive_roots.push_back(std::move(r));
            }
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    for (int sign : {-1, 1}) {
                        Reflection r;
                        r.root = unit_vector(n, i);
                        r.root[j - 1] = Rational(sign);
                        rs.positive_roots.push_back(std::move(r));
                    }
            for (int d = 1; d <= n; ++d) {
                rs.degrees.push_back(2 * d);
                rs.generators.push_back(power_sum(n, 2 * d));
            }
            rs.r2_slot = 0;
            break;
        }
        case RootFamily::D: {
            if (rank < 2) throw Unsupported("D needs rank >= 2");
            const int n = rank;
            rs.nvars = n;
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    for (int sign : {-1, 1}) {
                        Reflection r;
                        r.root = unit_vector(n, i);
                        r.root[j - 1] = Rational(sign);
                        rs.positive_roots.push_back(std::move(r));
                    }
            for (int d = 1; d <= n - 1; ++d) {
                rs.degrees.push_back(2 * d);
                rs.generators.push_back(power_sum(n, 2 * d));
            }
            rs.degrees.push_back(n);  // the coordinate product replaces the top power sum
            rs.generators.push_back(coordinate_product(n));
            rs.r2_slot = 0;
            break;
        }
        case RootFamily::I2: {
            if (rank != 2) throw Unsupported("I2 has rank 2");
            if (p < 3) throw Unsupported("I2(p) needs p >= 3");
            rs.nvars = 2;
            rs.p = p;
            rs.orbit_count = (p % 2 == 0) ? 2 : 1;
            rs.degrees = {2, p};
            rs.generators.push_back(radius_squared(2));
            rs.generators.push_back(dihedral_invariant_xy(p));
            rs.r2_slot = 0;
            return rs;
        }
    }
    for (auto& r : rs.positive_roots) finish_reflection(r);
    compute_orbits(rs.positive_roots);
    rs.orbit_count = 0;
    for (const auto& r : rs.positive_roots) rs.orbit_count = std::max(rs.orbit_count, r.orbit + 1);
    return rs;
}

RootSystem parse_root_system(std::string_view text) {
    if (text.size() < 2) throw ParseError("bad root system '" + std::string(text) + "'");
    try {
        if (text[0] == 'A') return build_root_system(RootFamily::A, std::stoi(std::string(text.substr(1))));
        if (text[0] == 'B') return build_root_system(RootFamily::B, std::stoi(std::string(text.substr(1))));
        if (text[0] == 'D') return build_root_system(RootFamily::D, std::stoi(std::string(text.substr(1))));
        if (text.substr(0, 2) == "I2") {
            std::string rest(text.substr(2));
            if (rest.size() >= 3 && rest.front() == '(' && rest.back() == ')')
                return build_root_system(RootFamily::I2, 2, std::stoi(rest.substr(1, rest.size() - 2)));
        }
    } catch (const Unsupported&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad root system '" + std::string(text) + "'");
    }
    throw Unsupported("unsupported root system '" + std::string(text) + "'");
}

Rational multiplicity_sum(const RootSystem& rs, const std::vector<Rational>& g) {
    check_multiplicities(rs, g);
    if (rs.is_dihedral()) {
        if (rs.p % 2 == 0) return Rational(rs.p / 2) * (g[0] + g[1]);
        return Rational(rs.p) * g[0];
    }
    Rational s(0);
    for (const auto& r : rs.positive_roots) s += g[r.orbit];
    return s;
}

CoxeterSpectrumEntry coxeter_spectrum(const RootSystem& rs, const std::vector<Rational>& g,
                                      const std::vector<int>& k) {
    check_multiplicities(rs, g);
    if (k.size() != rs.degrees.size()) throw Error("k needs one entry per invariant generator");
    for (int ki : k)
        if (ki < 0) throw Error("k entries must be nonnegative");
    CoxeterSpectrumEntry e;
    e.k = k;
    const Rational s = multiplicity_sum(rs, g);
    Rational full(0);
    long m = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
        full += Rational(rs.degrees[i]) * Rational(k[i]);
        if (static_cast<int>(i) != rs.r2_slot) m += static_cast<long>(rs.degrees[i]) * k[i];
    }
    e.energy = s + Rational(rs.nvars, 2) + full;
    e.m = m;
    e.q = s + Rational(m);
    e.epsilon = e.q * (e.q + Rational(rs.nvars - 2)) / Rational(2);
    return e;
}

MultiPoly coxeter_dunkl_apply(const RootSystem& rs, const std::vector<Rational>& g, int i,
                              const MultiPoly& f) {
    check_generic(rs);
    check_multiplicities(rs, g);
    if (i < 1 || i > rs.nvars) throw Error("coordinate index out of range");
    MultiPoly out = f.derivative(i);
    for (const auto& r : rs.positive_roots) {
        if (g[r.orbit].is_zero() || r.root[i - 1].is_zero()) continue;
        MultiPoly num = f - reflect_poly(r, f);
        if (num.is_zero()) continue;
        out += exact_divide(num, root_linear_form(rs, r)).scaled(GaussianRational(g[r.orbit] * r.root[i - 1]));
    }
    return out;
}

RadialPoly coxeter_dunkl_apply(const RootSystem& rs, const std::vector<Rational>& g, int i,
                               const RadialPoly& f) {
    check_generic(rs);
    check_multiplicities(rs, g);
    if (i < 1 || i > rs.nvars) throw Error("coordinate index out of range");
    RadialPoly out(f.nvars(), f.base());
    const MultiPoly xi = MultiPoly::variable(f.nvars(), i);
    for (const auto& [j, p] : f.parts()) {
        out.add_part(j, p.derivative(i));
        Rational e = f.base() + Rational(j);
        if (!e.is_zero()) out.add_part(j - 1, (xi * p).scaled(GaussianRational(e * Rational(2))));
        for (const auto& r : rs.positive_roots) {
            if (g[r.orbit].is_zero() || r.root[i - 1].is_zero()) continue;
            MultiPoly num = p - reflect_poly(r, p);
            if (num.is_zero()) continue;
            out.add_part(j, exact_divide(num, root_linear_form(rs, r))
                                 .scaled(GaussianRational(g[r.orbit] * r.root[i - 1])));
        }
    }
    return out;
}

MultiPoly coxeter_L_apply(const RootSystem& rs, const std::vector<Rational>& g, const MultiPoly& f) {
    check_multiplicities(rs, g);
    if (f.nvars() != rs.nvars) throw Error("variable-count mismatch with root system");
    if (rs.is_dihedral()) {
        MultiPoly fz = dihedral::to_complex_chart(f);
        return dihedral::from_complex_chart(dihedral::l_apply(rs.p, g, fz));
    }
    MultiPoly out(rs.nvars);
    std::vector<MultiPoly> grad;
    grad.reserve(rs.nvars);
    for (int i = 1; i <= rs.nvars; ++i) {
        grad.push_back(f.derivative(i));
        out += grad.back().derivative(i);
    }
    for (const auto& r : rs.positive_roots) {
        if (g[r.orbit].is_zero()) continue;
        MultiPoly num(rs.nvars);
        for (int i = 0; i < rs.nvars; ++i)
            if (!r.root[i].is_zero()) num += grad[i].scaled(GaussianRational(r.root[i]));
        if (num.is_zero()) continue;
        try {
            out += exact_divide(num, root_linear_form(rs, r)).scaled(GaussianRational(g[r.orbit] * Rational(2)));
        } catch (const DivisionNotExact&) {
            throw NotInvariant("Coxeter L(g) needs a W-invariant input");
        }
    }
    return out;
}

bool coxeter_is_invariant(const RootSystem& rs, const MultiPoly& f) {
    if (f.nvars() != rs.nvars) throw Error("variable-count mismatch with root system");
    if (rs.is_dihedral()) return dihedral::is_invariant(rs.p, dihedral::to_complex_chart(f));
    for (const auto& r : rs.positive_roots)
        if (!(reflect_poly(r, f) == f)) return false;
    return true;
}

std::vector<std::vector<int>> coxeter_enumerate_angular(const RootSystem& rs, long m) {
    std::vector<int> angular_degrees;
    for (std::size_t i = 0; i < rs.degrees.size(); ++i)
        if (static_cast<int>(i) != rs.r2_slot) angular_degrees.push_back(rs.degrees[i]);
    std::vector<std::vector<int>> out;
    std::vector<int> k(angular_degrees.size(), 0);
    auto rec = [&](auto&& self, std::size_t slot, long rest) -> void {
        if (slot == angular_degrees.size()) {
            if (rest == 0) out.push_back(k);
            return;
        }
        for (long v = 0; v * angular_degrees[slot] <= rest; ++v) {
            k[slot] = static_cast<int>(v);
            self(self, slot + 1, rest - v * angular_degrees[slot]);
        }
        k[slot] = 0;
    };
    if (m >= 0) rec(rec, 0, m);
    std::sort(out.begin(), out.end());
    return out;
}

long long coxeter_angular_degeneracy(const RootSystem& rs, long m) {
    if (m < 0) return 0;
    return static_cast<long long>(coxeter_enumerate_angular(rs, m).size());
}

MultiPoly coxeter_deformed_harmonic(const RootSystem& rs, const std::vector<Rational>& g,
                                    const std::vector<int>& k_angular) {
    check_multiplicities(rs, g);
    std::vector<int> angular_slots;
    for (std::size_t i = 0; i < rs.degrees.size(); ++i)
        if (static_cast<int>(i) != rs.r2_slot) angular_slots.push_back(static_cast<int>(i));
    if (k_angular.size() != angular_slots.size())
        throw Error("k needs one entry per non-r^2 generator");
    long m = 0;
    for (std::size_t i = 0; i < k_angular.size(); ++i) {
        if (k_angular[i] < 0) throw Error("k entries must be nonnegative");
        m += static_cast<long>(rs.degrees[angular_slots[i]]) * k_angular[i];
    }
    if (rs.is_dihedral()) return dihedral::deformed_harmonic(rs.p, g, k_angular[0]);
    if (m == 0) return MultiPoly::one(rs.nvars);

    const Rational s = multiplicity_sum(rs, g);
    const Rational q = s + Rational(m);
    const Rational seed = Rational(1) - s - Rational(rs.nvars, 2);  // (2(m-q+1)-n)/2
    MultiPoly h(rs.nvars);
    if (seed.is_zero()) {
        // Degenerate seed (rank 2, all multiplicities zero): exact invariant
        // kernel of the plain Laplacian instead of the radial sandwich.
        auto group = group_elements(rs);
        std::vector<MultiPoly> basis;
        for (const auto& lambda : partitions_into_parts(m, rs.nvars)) {
            for (const auto& mono : monomial_symmetric(rs.nvars, lambda).terms()) {
                MultiPoly avg(rs.nvars);
                for (const auto& elem : group)
                    avg += MultiPoly::monomial(rs.nvars, mono.first, GaussianRational(1)).substituted_linear(elem);
                if (avg.is_zero()) continue;
                avg = avg.monic();
                if (std::find(basis.begin(), basis.end(), avg) == basis.end()) basis.push_back(std::move(avg));
            }
        }
        std::vector<MultiPoly> images;
        images.reserve(basis.size());
        for (const auto& b : basis) images.push_back(coxeter_L_apply(rs, g, b));
        auto null = nullspace(coefficient_matrix(images));
        if (null.size() != 1) throw Error("degenerate-cell kernel is not one-dimensional");
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (!null[0][i].is_zero()) h += basis[i].scaled(null[0][i]);
    } else {
        RadialPoly r = RadialPoly::from_poly(MultiPoly::one(rs.nvars), seed);
        for (std::size_t slot = 0; slot < angular_slots.size(); ++slot) {
            const MultiPoly& sigma = rs.generators[angular_slots[slot]];
            for (int rep = 0; rep < k_angular[slot]; ++rep) {
                RadialPoly acc(rs.nvars, r.base());
                for (const auto& [e, c] : sigma.terms()) {
                    RadialPoly t = r;
                    for (int v = 0; v < rs.nvars; ++v)
                        for (int32_t power = 0; power < e[v]; ++power)
                            t = coxeter_dunkl_apply(rs, g, v + 1, t);
                    acc += t.scaled(c);
                }
                r = std::move(acc);
            }
        }
        r = r.radial_shifted(q - Rational(1) + Rational(rs.nvars, 2));
        h = r.collect();
    }
    if (!h.is_zero() && (!h.is_homogeneous() || h.total_degree() != m))
        throw Error("Coxeter harmonic is not homogeneous of the expected degree");
    return h;
}

HamiltonianIdentityReport gauged_hamiltonian_check(const RootSystem& rs, const std::vector<Rational>& g,
                                                   const Rational& omega, const MultiPoly& f) {
    check_multiplicities(rs, g);
    if (!coxeter_is_invariant(rs, f)) throw NotInvariant("gauged Hamiltonian identity needs W-invariant input");
    HamiltonianIdentityReport report;
    if (rs.is_dihedral()) {
        MultiPoly fz = dihedral::to_complex_chart(f);
        report.identity_ok = dihedral::hamiltonian_identity_ok(rs.p, g, omega, fz);
        MultiPoly probe = dihedral::to_complex_chart(MultiPoly::variable(2, 1) * f + MultiPoly::one(2));
        report.commutators_ok = dihedral::creation_commutator_ok(rs.p, g, omega, fz) &&
                                dihedral::creation_commutator_ok(rs.p, g, omega, probe);
        return report;
    }
    const GaussianRational w(omega);
    auto xi_mul = [&](int i, const MultiPoly& t) { return MultiPoly::variable(rs.nvars, i) * t; };
    MultiPoly lhs(rs.nvars);
    for (int i = 1; i <= rs.nvars; ++i) {
        MultiPoly u = coxeter_dunkl_apply(rs, g, i, f) + xi_mul(i, f).scaled(w);
        lhs -= coxeter_dunkl_apply(rs, g, i, u) - xi_mul(i, u).scaled(w);
    }
    lhs += f.scaled(GaussianRational(omega * Rational(2) * multiplicity_sum(rs, g)));
    MultiPoly rhs = -coxeter_L_apply(rs, g, f) + (radius_squared(rs.nvars) * f).scaled(GaussianRational(omega * omega)) -
                    f.scaled(GaussianRational(omega * Rational(rs.nvars)));
    report.identity_ok = (lhs == rhs);

    auto adag = [&](int i, const MultiPoly& t) {
        return (coxeter_dunkl_apply(rs, g, i, t) - xi_mul(i, t).scaled(w)).scaled(-GaussianRational::i());
    };
    report.commutators_ok = true;
    MultiPoly probe = xi_mul(1, f) + MultiPoly::one(rs.nvars);  // deliberately non-invariant
    for (int i = 1; i <= rs.nvars && report.commutators_ok; ++i)
        for (int j = i + 1; j <= rs.nvars && report.commutators_ok; ++j) {
            if (!(adag(i, adag(j, f)) == adag(j, adag(i, f)))) report.commutators_ok = false;
            if (!(adag(i, adag(j, probe)) == adag(j, adag(i, probe)))) report.commutators_ok = false;
        }
    return report;
}

}  // namespace angcm
