#include "angcm/verify.hpp"

#include <chrono>
#include <functional>
#include <random>

#include "angcm/coxeter.hpp"
#include "angcm/dihedral.hpp"
#include "angcm/dunkl.hpp"
#include "angcm/errors.hpp"
#include "angcm/harmonics.hpp"
#include "angcm/intertwine.hpp"
#include "angcm/linalg.hpp"
#include "angcm/poly.hpp"
#include "angcm/spectra.hpp"
#include "angcm/spinrep.hpp"

namespace angcm {

namespace {

constexpr std::size_t kMaxNotes = 8;

// Collects cells/failures and clips failure notes.
struct Recorder {
    CheckResult r;
    explicit Recorder(std::string name) { r.name = std::move(name); }
    void expect(bool ok, const std::function<std::string()>& describe) {
        ++r.cells;
        if (!ok) {
            ++r.failures;
            if (r.notes.size() < kMaxNotes) r.notes.push_back(describe());
        }
    }
    CheckResult finish(std::chrono::steady_clock::time_point start) {
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return r;
    }
};

#define TIMED_CHECK(name_literal) \
    const auto t0 = std::chrono::steady_clock::now(); \
    Recorder rec(name_literal)

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    return Rational(num(rng), den(rng));
}

MultiPoly random_poly(std::mt19937_64& rng, int nvars, int max_deg, int terms, bool complex_coeffs = false) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    MultiPoly p(nvars);
    for (int t = 0; t < terms; ++t) {
        Exponents e(nvars);
        for (int v = 0; v < nvars; ++v) e[v] = deg(rng);
        GaussianRational c = complex_coeffs ? GaussianRational(random_rational(rng), random_rational(rng))
                                            : GaussianRational(random_rational(rng));
        p.add_term(e, c);
    }
    return p;
}

MultiPoly random_symmetric(std::mt19937_64& rng, int nvars, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    MultiPoly p(nvars);
    for (int t = 0; t < 3; ++t) {
        auto parts = partitions_into_parts(deg(rng), nvars);
        if (parts.empty()) continue;
        std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
        p += monomial_symmetric(nvars, parts[pick(rng)]).scaled(GaussianRational(random_rational(rng)));
    }
    return p;
}

std::vector<Rational> integer_couplings(const VerifyBounds& b) {
    std::vector<Rational> out;
    for (const auto& g : b.couplings)
        if (g.is_integer()) out.push_back(g);
    return out;
}

std::string cell_tag(int n, const Rational& g, long m) {
    return "n=" + std::to_string(n) + " g=" + g.str() + " m=" + std::to_string(m);
}

// nX = x1 + ... + xn.
MultiPoly coordinate_sum(int n) {
    MultiPoly s(n);
    for (int i = 1; i <= n; ++i) s += MultiPoly::variable(n, i);
    return s;
}

MultiPoly power_sum_poly(int n, int e) {
    MultiPoly p(n);
    for (int i = 1; i <= n; ++i) {
        Exponents exp(n, 0);
        exp[i - 1] = e;
        p.add_term(exp, GaussianRational(1));
    }
    return p;
}

bool proportional(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.monic() == b.monic();
}

}  // namespace

CheckResult check_polycore(const VerifyBounds& b) {
    TIMED_CHECK("polycore");
    std::mt19937_64 rng(b.seed);
    for (int n = 2; n <= std::min(b.max_n, 4); ++n) {
        for (int rep = 0; rep < 6; ++rep) {
            MultiPoly f = random_poly(rng, n, 3, 4, rep % 2 == 1);
            MultiPoly d = random_poly(rng, n, 2, 3);
            if (!d.is_zero()) {
                rec.expect(exact_divide(f * d, d) == f, [&] { return "exact_divide round trip, n=" + std::to_string(n); });
            }
            // transpositions are involutions
            rec.expect(f.transposed(1, n).transposed(1, n) == f,
                       [&] { return "transposition involution, n=" + std::to_string(n); });
            // reassociation keeps the canonical form
            MultiPoly g1 = random_poly(rng, n, 2, 3);
            MultiPoly h = random_poly(rng, n, 2, 3);
            rec.expect((f * g1) * h == f * (g1 * h), [&] { return "mul associativity"; });
            rec.expect((f + g1) + h == f + (g1 + h), [&] { return "add associativity"; });
            // degree additivity on homogeneous inputs
            MultiPoly hom1 = monomial_symmetric(n, {2, 1});
            MultiPoly hom2 = monomial_symmetric(n, {3});
            rec.expect((hom1 * hom2).total_degree() == hom1.total_degree() + hom2.total_degree(),
                       [&] { return "degree additivity"; });
            // serialization round trip
            rec.expect(MultiPoly::parse(n, f.to_text()) == f, [&] { return "text round trip: " + f.to_text(); });
        }
        // radial_collect against evaluation at random rational points
        for (int rep = 0; rep < 3; ++rep) {
            RadialPoly r(n, Rational(std::uniform_int_distribution<long>(0, 2)(rng)));
            r.add_part(0, random_poly(rng, n, 2, 3));
            r.add_part(1, random_poly(rng, n, 2, 2));
            MultiPoly collected = r.collect();
            bool ok = true;
            for (int pt = 0; pt < 20 && ok; ++pt) {
                std::vector<GaussianRational> point;
                for (int v = 0; v < n; ++v) point.emplace_back(random_rational(rng));
                ok = collected.eval(point) == r.eval(point);
            }
            rec.expect(ok, [&] { return "radial_collect evaluation agreement, n=" + std::to_string(n); });
        }
    }
    // restriction to the hyperplane kills the coordinate sum
    for (int n = 2; n <= b.max_n; ++n)
        rec.expect(coordinate_sum(n).restricted_to_hyperplane().is_zero(),
                   [&] { return "restriction of sum x^i"; });
    return rec.finish(t0);
}

CheckResult check_dunkl_properties(const VerifyBounds& b) {
    TIMED_CHECK("dunkl-properties");
    std::mt19937_64 rng(b.seed + 1);
    for (int n = 2; n <= std::min(b.max_n, 4); ++n) {
        for (const auto& g : b.couplings) {
            DunklContext ctx(n, g);
            for (int rep = 0; rep < 3; ++rep) {
                MultiPoly f = random_poly(rng, n, 3, 4);
                // pairwise commutativity
                bool comm = true;
                for (int i = 1; i <= n && comm; ++i)
                    for (int j = i + 1; j <= n && comm; ++j)
                        comm = dunkl_apply(ctx, i, dunkl_apply(ctx, j, f)) ==
                               dunkl_apply(ctx, j, dunkl_apply(ctx, i, f));
                rec.expect(comm, [&] { return "Dunkl commutativity " + cell_tag(n, g, 0); });
                // equivariance: s_ij D_i = D_j s_ij
                bool equi = true;
                for (int i = 1; i <= n && equi; ++i)
                    for (int j = i + 1; j <= n && equi; ++j)
                        equi = dunkl_apply(ctx, i, f).transposed(i, j) ==
                               dunkl_apply(ctx, j, f.transposed(i, j));
                rec.expect(equi, [&] { return "Dunkl equivariance " + cell_tag(n, g, 0); });
                // degree drops by exactly one on homogeneous input (or hits zero)
                MultiPoly hom = monomial_symmetric(n, {2, 1, 1}) + monomial_symmetric(n, {4});
                MultiPoly d1 = dunkl_apply(ctx, 1, hom);
                rec.expect(d1.is_zero() || (d1.is_homogeneous() && d1.total_degree() == hom.total_degree() - 1),
                           [&] { return "Dunkl degree drop " + cell_tag(n, g, 0); });
                // the gauge-fixed operator agrees with the Newton sum on symmetric input
                MultiPoly sym = random_symmetric(rng, n, 4);
                rec.expect(calogero_L_apply(ctx, sym) == newton_dunkl(ctx, 2, sym),
                           [&] { return "L(g) vs sum D_i^2 " + cell_tag(n, g, 0); });
                // Newton sum of order one on symmetric input: plain derivative sum
                MultiPoly deriv_sum(n);
                for (int i = 1; i <= n; ++i) deriv_sum += sym.derivative(i);
                rec.expect(newton_dunkl(ctx, 1, sym) == deriv_sum,
                           [&] { return "Newton order-1 exchange cancellation " + cell_tag(n, g, 0); });
            }
        }
    }
    return rec.finish(t0);
}

CheckResult check_counting(const VerifyBounds& b) {
    TIMED_CHECK("counting");
    for (ModelVariant v : {ModelVariant::Full, ModelVariant::Relative, ModelVariant::Angular,
                           ModelVariant::RelativeAngular}) {
        for (int n = 2; n <= std::max(b.max_n, 6); ++n) {
            for (long m = 0; m <= std::max(b.max_level, 12L); ++m) {
                auto levels = enumerate_levels(v, n, m);
                rec.expect(static_cast<long long>(levels.size()) == degeneracy(v, n, m), [&] {
                    return variant_name(v) + " count " + cell_tag(n, Rational(0), m);
                });
                for (const auto& k : levels)
                    if (level_of(k) != m || !satisfies_variant(v, k)) {
                        rec.expect(false, [&] { return "bad enumerated index at " + cell_tag(n, Rational(0), m); });
                        break;
                    }
            }
        }
    }
    return rec.finish(t0);
}

CheckResult check_harmonicity(const VerifyBounds& b) {
    TIMED_CHECK("harmonicity");
    for (int n = 2; n <= b.max_n; ++n) {
        for (const auto& g : b.couplings) {
            DunklContext ctx(n, g);
            for (long m = 0; m <= b.max_level; ++m) {
                for (const auto& k : enumerate_levels(ModelVariant::Angular, n, m)) {
                    DeformedHarmonic h = deformed_harmonic(ctx, k);
                    rec.expect(calogero_L_apply(ctx, h.poly).is_zero(),
                               [&] { return "L(g) h_k != 0 at " + cell_tag(n, g, m); });
                    rec.expect(h.poly.is_zero() || (h.poly.is_homogeneous() && h.poly.total_degree() == m),
                               [&] { return "h_k inhomogeneous at " + cell_tag(n, g, m); });
                    rec.expect(h.poly.is_symmetric(), [&] { return "h_k not symmetric at " + cell_tag(n, g, m); });
                    rec.expect(h.poly.is_real(), [&] { return "h_k not real at " + cell_tag(n, g, m); });
                }
            }
        }
    }
    return rec.finish(t0);
}

CheckResult check_degeneracy(const VerifyBounds& b) {
    TIMED_CHECK("degeneracy");
    for (int n = 2; n <= b.max_n; ++n) {
        for (const auto& g : b.couplings) {
            DunklContext ctx(n, g);
            for (long m = 0; m <= b.max_level; ++m) {
                try {
                    BasisReport report = harmonic_basis(ctx, m);
                    rec.expect(report.rank == report.expected,
                               [&] { return "rank mismatch at " + cell_tag(n, g, m); });
                } catch (const Error& e) {
                    rec.expect(false, [&] { return std::string(e.what()); });
                }
            }
        }
    }
    return rec.finish(t0);
}

CheckResult check_printed_forms(const VerifyBounds& b) {
    TIMED_CHECK("printed-forms");
    for (int n = 2; n <= std::min(b.max_n, 4); ++n) {
        for (const auto& g : b.couplings) {
            DunklContext ctx(n, g);
            const MultiPoly r2 = radius_squared(n);
            const MultiPoly nx = coordinate_sum(n);  // n X
            const Rational gn1 = g * Rational(n - 1) + Rational(1);
            {
                MultiIndex k(n, 0);
                k[0] = 2;
                MultiPoly expected = r2 - (nx * nx).scaled(GaussianRational(gn1));
                rec.expect(proportional(deformed_harmonic(ctx, k).poly, expected),
                           [&] { return "h_(2,0,...) form at " + cell_tag(n, g, 2); });
            }
            if (n >= 3) {
                MultiIndex k(n, 0);
                k[2] = 1;
                MultiPoly expected = (r2 * nx).scaled(GaussianRational(Rational(3) * gn1)) -
                                     power_sum_poly(n, 3).scaled(GaussianRational(
                                         g * Rational(n) * Rational(n - 1) + Rational(n + 2)));
                rec.expect(proportional(deformed_harmonic(ctx, k).poly, expected),
                           [&] { return "h_(0,0,1,...) form at " + cell_tag(n, g, 3); });
            }
        }
    }
    return rec.finish(t0);
}

CheckResult check_newton_exclusion(const VerifyBounds& b) {
    TIMED_CHECK("newton-exclusion");
    std::vector<Rational> gs = b.couplings;
    gs.push_back(Rational(7, 3));
    for (int n = 2; n <= std::max(b.max_n, 5); ++n) {
        for (const auto& g : gs) {
            DunklContext ctx(n, g);
            Rational seed = (-g * Rational(n) * Rational(n - 1) - Rational(n) + Rational(2)) / Rational(2);
            RadialPoly r = RadialPoly::from_poly(MultiPoly::one(n), seed);
            rec.expect(newton_dunkl(ctx, 2, r).is_zero(),
                       [&] { return "sum D_i^2 exclusion at " + cell_tag(n, g, 0); });
        }
    }
    return rec.finish(t0);
}

CheckResult check_oscillator(const VerifyBounds& b) {
    TIMED_CHECK("oscillator");
    const std::vector<Rational> omegas{Rational(1), Rational(1, 3)};
    for (int n = 3; n <= 4; ++n) {
        for (const auto& g : integer_couplings(b)) {
            DunklContext ctx(n, g);
            const MultiPoly delta_g = vandermonde(n).pow(g.to_long());
            for (const auto& omega : omegas) {
                const GaussianRational i = GaussianRational::i();
                const GaussianRational w(omega);
                const MultiPoly nx = coordinate_sum(n);
                const MultiPoly r2 = radius_squared(n);
                const MultiPoly one = MultiPoly::one(n);
                const Rational gnn = g * Rational(n) * Rational(n - 1);
                auto expect_state = [&](MultiIndex k, const MultiPoly& body, const char* label) {
                    OscillatorState st = oscillator_state(ctx, omega, k);
                    rec.expect(proportional(st.prefactor, body * delta_g), [&] {
                        return std::string("Psi_") + label + " at " + cell_tag(n, g, level_of(k));
                    });
                    // H Psi = E Psi in the Gaussian gauge
                    rec.expect(gauged_hamiltonian_apply(ctx, omega, st.prefactor) ==
                                   st.prefactor.scaled(GaussianRational(st.energy)),
                               [&] { return std::string("eigen-equation Psi_") + label + " at " + cell_tag(n, g, level_of(k)); });
                };
                MultiIndex k(n, 0);
                // 2 i omega n X
                k[0] = 1;
                expect_state(k, nx.scaled(i * w * GaussianRational(Rational(2))), "100");
                // 2 omega n (1 - 2 omega n X^2); here n X = x1 + ... + xn
                k[0] = 2;
                expect_state(k,
                             one.scaled(GaussianRational(Rational(n))) -
                                 (nx * nx).scaled(w * GaussianRational(Rational(2))),
                             "200");
                // 4 i omega^2 n^2 (3X - 2 omega n X^3) = 4 i omega^2 (3n s - 2 omega s^3)
                k[0] = 3;
                expect_state(k,
                             nx.scaled(GaussianRational(Rational(3L * n))) -
                                 (nx * nx * nx).scaled(w * GaussianRational(Rational(2))),
                             "300");
                k[0] = 0;
                // 2 omega g n(n-1) + 2 omega n - 4 omega^2 r^2
                k[1] = 1;
                expect_state(k,
                             one.scaled(GaussianRational(gnn + Rational(n))) -
                                 r2.scaled(w * GaussianRational(Rational(2))),
                             "010");
                // 4 i omega^2 n X (g n(n-1) + n + 2 - 2 omega r^2)
                k[0] = 1;
                expect_state(k,
                             nx * (one.scaled(GaussianRational(gnn + Rational(n + 2))) -
                                   r2.scaled(w * GaussianRational(Rational(2)))),
                             "110");
                k[0] = 0;
                k[1] = 0;
                // 12 i omega^2 n [1 + g(n-1)] X - 8 i omega^3 sum (x^i)^3
                k[2] = 1;
                expect_state(k,
                             nx.scaled(GaussianRational(Rational(3) * (Rational(1) + g * Rational(n - 1)))) -
                                 power_sum_poly(n, 3).scaled(w * GaussianRational(Rational(2))),
                             "001");
            }
            // eigen-equation sweep over whole levels
            for (long m = 0; m <= std::min(b.max_level, 4L); ++m) {
                for (const auto& k : enumerate_levels(ModelVariant::Full, n, m)) {
                    OscillatorState st = oscillator_state(ctx, Rational(1), k);
                    rec.expect(gauged_hamiltonian_apply(ctx, Rational(1), st.prefactor) ==
                                   st.prefactor.scaled(GaussianRational(st.energy)),
                               [&] { return "eigen-equation sweep at " + cell_tag(n, g, m); });
                }
            }
        }
    }
    return rec.finish(t0);
}

CheckResult check_intertwining(const VerifyBounds& b) {
    TIMED_CHECK("intertwining");
    for (int n = 2; n <= b.max_n; ++n) {
        for (const auto& g : b.couplings) {
            IntertwinerContext ictx(DunklContext(n, g));
            for (long d = 0; d <= b.max_level; ++d) {
                for (const auto& lambda : partitions_into_parts(d, n)) {
                    MultiPoly f = monomial_symmetric(n, lambda);
                    rec.expect(intertwining_residual(ictx, f).is_zero(), [&] {
                        return "intertwining residual at " + cell_tag(n, g, d);
                    });
                }
            }
        }
    }
    return rec.finish(t0);
}

CheckResult check_kernel(const VerifyBounds& b) {
    TIMED_CHECK("kernel-probe");
    for (int n = 2; n <= std::min(b.max_n, 4); ++n) {
        for (long gi = 0; gi <= 3; ++gi) {
            IntertwinerContext ictx(DunklContext(n, Rational(gi)));
            for (long m = 0; m <= std::min(b.max_level, 5L); ++m) {
                try {
                    RankProbeReport rep = kernel_probe(ictx, m);
                    rec.expect(rep.rank == rep.expected, [&] { return "kernel probe " + cell_tag(n, Rational(gi), m); });
                } catch (const Error& e) {
                    rec.expect(false, [&] { return std::string(e.what()); });
                }
            }
        }
    }
    return rec.finish(t0);
}

CheckResult check_transport(const VerifyBounds& b) {
    TIMED_CHECK("harmonic-transport");
    for (int n = 2; n <= std::min(b.max_n, 4); ++n) {
        for (const auto& g : integer_couplings(b)) {
            IntertwinerContext ictx(DunklContext(n, g));
            for (long m = 0; m <= std::min(b.max_level, 5L); ++m) {
                try {
                    TransportReport rep = harmonic_transport(ictx, m);
                    rec.expect(rep.rank == rep.expected, [&] { return "transport rank " + cell_tag(n, g, m); });
                } catch (const Error& e) {
                    rec.expect(false, [&] { return std::string(e.what()); });
                }
            }
        }
    }
    return rec.finish(t0);
}

CheckResult check_pairing(const VerifyBounds& b) {
    TIMED_CHECK("dunkl-pairing");
    std::mt19937_64 rng(b.seed + 2);
    for (int n = 2; n <= std::min(b.max_n, 4); ++n) {
        for (const auto& g : b.couplings) {
            DunklContext ctx(n, g);
            for (int rep = 0; rep < 4; ++rep) {
                MultiPoly f = random_poly(rng, n, 2, 3);
                MultiPoly h = random_poly(rng, n, 3, 3);
                // adjoint of D_i is multiplication by x^i
                bool adj = true;
                for (int i = 1; i <= n && adj; ++i)
                    adj = dunkl_pairing(ctx, MultiPoly::variable(n, i) * f, h) ==
                          dunkl_pairing(ctx, f, dunkl_apply(ctx, i, h));
                rec.expect(adj, [&] { return "pairing adjointness " + cell_tag(n, g, 0); });
            }
            // symmetric-bilinear on symmetric polynomials of equal degree
            for (long d = 1; d <= 3; ++d) {
                auto parts = partitions_into_parts(d, n);
                for (const auto& la : parts) {
                    for (const auto& mu : parts) {
                        MultiPoly a = monomial_symmetric(n, la), c = monomial_symmetric(n, mu);
                        rec.expect(dunkl_pairing(ctx, a, c) == dunkl_pairing(ctx, c, a),
                                   [&] { return "pairing symmetry " + cell_tag(n, g, d); });
                    }
                    // different homogeneous degrees pair to zero
                    MultiPoly other = monomial_symmetric(n, {static_cast<int>(d + 1)});
                    rec.expect(dunkl_pairing(ctx, monomial_symmetric(n, la), other).is_zero(),
                               [&] { return "pairing degree orthogonality " + cell_tag(n, g, d); });
                }
            }
        }
    }
    return rec.finish(t0);
}

CheckResult check_spectral_flow(const VerifyBounds& b) {
    TIMED_CHECK("spectral-flow");
    const long max_m = std::max(b.max_level, 10L);
    for (int n = 2; n <= std::max(b.max_n, 5); ++n) {
        const long shift = static_cast<long>(n) * (n - 1) / 2;
        for (const auto& g : b.couplings) {
            bool ok = true;
            for (long m = 0; m <= max_m && ok; ++m) {
                MultiIndex k(n, 0);
                k[0] = static_cast<int>(m);  // any k at the level gives the same epsilon
                MultiIndex k_shift(n, 0);
                k_shift[0] = static_cast<int>(m + shift);
                ok = energy(ModelVariant::Angular, n, g + Rational(1), k).energy ==
                     energy(ModelVariant::Angular, n, g, k_shift).energy;
            }
            rec.expect(ok, [&] { return "spectral flow " + cell_tag(n, g, max_m); });
        }
    }
    return rec.finish(t0);
}

CheckResult check_special_cases(const VerifyBounds& b) {
    TIMED_CHECK("special-cases");
    const long max_m = std::max(b.max_level, 10L);
    for (const auto& g : b.couplings) {
        for (long m = 0; m <= max_m; ++m) {
            for (const auto& k : enumerate_levels(ModelVariant::Angular, 2, m)) {
                Rational q = g + Rational(k[0]);
                rec.expect(energy(ModelVariant::Angular, 2, g, k).energy == q * q / Rational(2),
                           [&] { return "n=2 angular closed form " + cell_tag(2, g, m); });
            }
            for (const auto& k : enumerate_levels(ModelVariant::RelativeAngular, 3, m)) {
                Rational gk = g + Rational(k[2]);
                rec.expect(energy(ModelVariant::RelativeAngular, 3, g, k).energy ==
                               Rational(9, 2) * gk * gk,
                           [&] { return "n=3 relative-angular closed form " + cell_tag(3, g, m); });
            }
        }
        // free angular energies match the sphere Laplacian at q = m
        for (int n = 2; n <= std::max(b.max_n, 5); ++n) {
            for (long m = 0; m <= 6; ++m) {
                MultiIndex k(n, 0);
                k[0] = static_cast<int>(m);
                Rational eps = energy(ModelVariant::Angular, n, Rational(0), k).energy;
                rec.expect(eps == Rational(m) * Rational(m + n - 2) / Rational(2),
                           [&] { return "free sphere spectrum " + cell_tag(n, Rational(0), m); });
            }
        }
    }
    return rec.finish(t0);
}

CheckResult check_coxeter(const VerifyBounds& b) {
    TIMED_CHECK("coxeter");
    std::mt19937_64 rng(b.seed + 3);
    const long max_m = std::min(b.max_level, 8L);

    // type-A generic path agrees with the dedicated operators and harmonics
    for (int rank = 1; rank <= std::min(b.max_n - 1, 3); ++rank) {
        RootSystem rs = build_root_system(RootFamily::A, rank);
        const int n = rs.nvars;
        for (const auto& g : b.couplings) {
            DunklContext ctx(n, g);
            std::vector<Rational> gv{g};
            for (int rep = 0; rep < 2; ++rep) {
                MultiPoly f = random_poly(rng, n, 3, 4);
                bool same = true;
                for (int i = 1; i <= n && same; ++i)
                    same = coxeter_dunkl_apply(rs, gv, i, f) == dunkl_apply(ctx, i, f);
                rec.expect(same, [&] { return "type-A Dunkl agreement " + cell_tag(n, g, 0); });
                MultiPoly sym = random_symmetric(rng, n, 4);
                rec.expect(coxeter_L_apply(rs, gv, sym) == calogero_L_apply(ctx, sym),
                           [&] { return "type-A L agreement " + cell_tag(n, g, 0); });
            }
            for (long m = 0; m <= std::min(max_m, 6L); ++m) {
                for (const auto& ka : coxeter_enumerate_angular(rs, m)) {
                    // angular slots of A are the power sums of degree 1,3,...,n
                    MultiIndex k(n, 0);
                    k[0] = ka[0];
                    for (std::size_t s = 1; s < ka.size(); ++s) k[s + 1] = ka[s];
                    rec.expect(coxeter_deformed_harmonic(rs, gv, ka) == deformed_harmonic(ctx, k).poly,
                               [&] { return "type-A harmonic agreement " + cell_tag(n, g, m); });
                }
            }
        }
    }

    // I2(3) spectrum == A2 relative-angular spectrum, level by level
    {
        RootSystem i23 = build_root_system(RootFamily::I2, 2, 3);
        for (const auto& g : b.couplings) {
            std::vector<Rational> gv{g};
            for (int t = 0; t * 3 <= std::max(b.max_level, 10L); ++t) {
                MultiIndex k3(3, 0);
                k3[2] = t;
                Rational eps_rel = energy(ModelVariant::RelativeAngular, 3, g, k3).energy;
                Rational eps_i2 = coxeter_spectrum(i23, gv, {0, t}).epsilon;
                rec.expect(eps_i2 == eps_rel, [&] { return "I2(3) vs A2 relative " + cell_tag(3, g, 3L * t); });
            }
        }
    }

    // I2(4) == B2: same mirrors, cross-check the two engines exactly
    {
        RootSystem b2 = build_root_system(RootFamily::B, 2);
        for (const auto& ga : b.couplings) {
            for (const auto& gb : {Rational(0), Rational(1), Rational(1, 2)}) {
                std::vector<Rational> gv{ga, gb};
                for (int rep = 0; rep < 2; ++rep) {
                    MultiPoly f = random_poly(rng, 2, 4, 4);
                    MultiPoly fz = dihedral::to_complex_chart(f);
                    rec.expect(dihedral::from_complex_chart(dihedral::dunkl_x_apply(4, gv, fz)) ==
                                   coxeter_dunkl_apply(b2, gv, 1, f),
                               [&] { return "I2(4) vs B2 Dunkl x, g=(" + ga.str() + "," + gb.str() + ")"; });
                    rec.expect(dihedral::from_complex_chart(dihedral::dunkl_y_apply(4, gv, fz)) ==
                                   coxeter_dunkl_apply(b2, gv, 2, f),
                               [&] { return "I2(4) vs B2 Dunkl y, g=(" + ga.str() + "," + gb.str() + ")"; });
                }
                for (int k2 = 1; 4 * k2 <= max_m; ++k2) {
                    MultiPoly hd = dihedral::deformed_harmonic(4, gv, k2);
                    MultiPoly hg = coxeter_deformed_harmonic(b2, gv, {k2});
                    rec.expect(proportional(hd, hg),
                               [&] { return "I2(4) vs B2 harmonic k2=" + std::to_string(k2); });
                }
            }
        }
    }

    // harmonicity, invariance and degeneracy counts per system
    auto harmonic_suite = [&](const RootSystem& rs, const std::vector<Rational>& gv, const std::string& tag) {
        for (long m = 0; m <= max_m; ++m) {
            std::vector<MultiPoly> hs;
            for (const auto& ka : coxeter_enumerate_angular(rs, m)) {
                MultiPoly h = coxeter_deformed_harmonic(rs, gv, ka);
                rec.expect(coxeter_L_apply(rs, gv, h).is_zero(),
                           [&] { return tag + " harmonicity m=" + std::to_string(m); });
                rec.expect(coxeter_is_invariant(rs, h), [&] { return tag + " invariance m=" + std::to_string(m); });
                hs.push_back(std::move(h));
            }
            rec.expect(rank_of(hs) == coxeter_angular_degeneracy(rs, m),
                       [&] { return tag + " degeneracy m=" + std::to_string(m); });
        }
    };
    {
        RootSystem b2 = build_root_system(RootFamily::B, 2);
        for (auto [ga, gb] : std::vector<std::pair<Rational, Rational>>{
                 {Rational(1), Rational(1)}, {Rational(2), Rational(1, 2)}, {Rational(0), Rational(0)},
                 {Rational(1), Rational(0)}})
            harmonic_suite(b2, {ga, gb}, "B2(g=" + ga.str() + "," + gb.str() + ")");
        RootSystem a2 = build_root_system(RootFamily::A, 2);
        RootSystem d3 = build_root_system(RootFamily::D, 3);
        for (const auto& g : b.couplings) {
            harmonic_suite(a2, {g}, "A2(g=" + g.str() + ")");
            if (g == Rational(1)) harmonic_suite(d3, {g}, "D3(g=" + g.str() + ")");
        }
        for (int p : {3, 4, 5}) {
            RootSystem i2p = build_root_system(RootFamily::I2, 2, p);
            std::vector<std::vector<Rational>> gsets;
            if (p % 2 == 0)
                gsets = {{Rational(1), Rational(1)}, {Rational(1, 2), Rational(2)}, {Rational(0), Rational(0)}};
            else
                gsets = {{Rational(1)}, {Rational(1, 2)}, {Rational(2)}, {Rational(0)}};
            for (const auto& gv : gsets) {
                std::string tag = "I2(" + std::to_string(p) + ")";
                harmonic_suite(i2p, gv, tag);
            }
        }
    }

    // gauged Hamiltonian identity and creation commutators
    {
        std::vector<std::pair<RootSystem, std::vector<Rational>>> cases;
        cases.emplace_back(build_root_system(RootFamily::A, 2), std::vector<Rational>{Rational(1)});
        cases.emplace_back(build_root_system(RootFamily::B, 2), std::vector<Rational>{Rational(1), Rational(2)});
        cases.emplace_back(build_root_system(RootFamily::D, 3), std::vector<Rational>{Rational(1, 2)});
        cases.emplace_back(build_root_system(RootFamily::I2, 2, 3), std::vector<Rational>{Rational(1)});
        cases.emplace_back(build_root_system(RootFamily::I2, 2, 5), std::vector<Rational>{Rational(1, 2)});
        for (const auto& [rs, gv] : cases) {
            for (const auto& omega : {Rational(1), Rational(1, 2)}) {
                std::vector<MultiPoly> probes{MultiPoly::one(rs.nvars), radius_squared(rs.nvars),
                                              rs.generators[rs.r2_slot] * rs.generators[rs.r2_slot]};
                for (const auto& gen : rs.generators) probes.push_back(gen);
                for (const auto& f : probes) {
                    HamiltonianIdentityReport rep = gauged_hamiltonian_check(rs, gv, omega, f);
                    rec.expect(rep.identity_ok, [&] {
                        return family_name(rs.family) + " Hamiltonian identity, omega=" + omega.str();
                    });
                    rec.expect(rep.commutators_ok, [&] {
                        return family_name(rs.family) + " creation commutators, omega=" + omega.str();
                    });
                }
            }
        }
    }

    // D2 decomposes as A1 x A1
    {
        RootSystem d2 = build_root_system(RootFamily::D, 2);
        rec.expect(d2.orbit_count == 2 && d2.degrees == std::vector<int>{2, 2},
                   [&] { return std::string("D2 reducibility data"); });
    }
    return rec.finish(t0);
}

CheckResult check_spin(const VerifyBounds& b) {
    TIMED_CHECK("spin");
    // the displayed angular content at the first five levels
    auto row = [&](int l) { return VirtualCharacter::single(YoungDiagram(l > 0 ? std::vector<int>{l} : std::vector<int>{})); };
    for (int s = 2; s <= 4; ++s) {
        for (int n = 4; n <= 6; ++n) {
            auto prod = [&](std::vector<int> ls) {
                VirtualCharacter c = VirtualCharacter::single(YoungDiagram());
                for (int l : ls) c = pieri_product(c, l, s);
                return c;
            };
            std::vector<VirtualCharacter> expected{
                prod({n}),
                prod({1, n - 1}),
                prod({2, n - 2}) + prod({1, n - 1}) - prod({n}),
                prod({1, 1, n - 2}) + prod({3, n - 3}),
                prod({1, 1, n - 2}) + prod({1, 2, n - 3}) + prod({4, n - 4}),
            };
            for (long m = 0; m <= 4; ++m) {
                rec.expect(spin_content(ModelVariant::Angular, n, m, s) == expected[m], [&] {
                    return "angular spin list m=" + std::to_string(m) + " n=" + std::to_string(n) +
                           " s=" + std::to_string(s);
                });
            }
            // the level-2 removal is exactly the singlet [n] inside [1] x [n-1]
            rec.expect(prod({1, n - 1}).multiplicity(YoungDiagram(std::vector<int>{n})) == 1,
                       [&] { return "[n] inside [1]x[n-1], n=" + std::to_string(n); });
        }
    }
    // positions-only dependence of the level content
    for (int s = 2; s <= 3; ++s) {
        MultiIndex k1{1, 0, 2}, k2{3, 0, 1};
        rec.expect(level_content(3, k1, s) == level_content(3, k2, s),
                   [&] { return "positions-only dependence, s=" + std::to_string(s); });
    }
    // nonnegativity sweep
    for (int s = 2; s <= 4; ++s) {
        for (int n = 2; n <= 6; ++n) {
            for (long m = 0; m <= std::max(b.max_level, 8L); ++m) {
                for (ModelVariant v : {ModelVariant::Angular, ModelVariant::RelativeAngular}) {
                    try {
                        VirtualCharacter c = spin_content(v, n, m, s);
                        rec.expect(c.all_nonnegative(), [&] {
                            return variant_name(v) + " spin nonnegativity n=" + std::to_string(n) +
                                   " m=" + std::to_string(m) + " s=" + std::to_string(s);
                        });
                    } catch (const NegativeMultiplicity& e) {
                        rec.expect(false, [&] { return std::string(e.what()); });
                    }
                }
            }
        }
    }
    // ground state carries the single symmetric row [n]
    for (int n = 2; n <= 6; ++n) {
        for (int s = 2; s <= 4; ++s) {
            VirtualCharacter c = spin_content(ModelVariant::Angular, n, 0, s);
            rec.expect(c == VirtualCharacter::single(YoungDiagram(std::vector<int>{n})),
                       [&] { return "ground state [n], n=" + std::to_string(n); });
        }
    }
    return rec.finish(t0);
}

CheckResult check_pieri_dimension(const VerifyBounds& b) {
    TIMED_CHECK("pieri-dimension");
    std::mt19937_64 rng(b.seed + 4);
    std::uniform_int_distribution<int> rows_dist(0, 3), len_dist(1, 6), l_dist(0, 5);
    for (int rep = 0; rep < 200; ++rep) {
        std::vector<int> rows;
        int r = rows_dist(rng);
        int prev = 6;
        for (int i = 0; i < r; ++i) {
            int v = std::min(prev, len_dist(rng));
            rows.push_back(v);
            prev = v;
        }
        YoungDiagram d(rows);
        int l = l_dist(rng);
        int s = d.row_count() + 1 + (rep % 2);  // tall enough: nothing is dropped
        VirtualCharacter c = VirtualCharacter::single(d);
        VirtualCharacter product = pieri_product(c, l, s);
        long long lhs = product.dimension(s);
        long long rhs = c.dimension(s) * irrep_dimension(s, YoungDiagram(l > 0 ? std::vector<int>{l} : std::vector<int>{}));
        rec.expect(lhs == rhs, [&] {
            return "Pieri dimension " + d.str() + " x [" + std::to_string(l) + "], s=" + std::to_string(s);
        });
    }
    return rec.finish(t0);
}

std::vector<std::string> available_checks() {
    return {"polycore",     "dunkl-properties", "counting",   "harmonicity",     "degeneracy",
            "printed-forms", "oscillator",       "newton-exclusion", "intertwining", "kernel-probe",
            "harmonic-transport", "dunkl-pairing", "spectral-flow", "special-cases", "coxeter",
            "spin",          "pieri-dimension"};
}

std::vector<CheckResult> run_checks(const VerifyBounds& b, const std::vector<std::string>& names) {
    using Fn = CheckResult (*)(const VerifyBounds&);
    static const std::vector<std::pair<std::string, Fn>> table{
        {"polycore", check_polycore},
        {"dunkl-properties", check_dunkl_properties},
        {"counting", check_counting},
        {"harmonicity", check_harmonicity},
        {"degeneracy", check_degeneracy},
        {"printed-forms", check_printed_forms},
        {"oscillator", check_oscillator},
        {"newton-exclusion", check_newton_exclusion},
        {"intertwining", check_intertwining},
        {"kernel-probe", check_kernel},
        {"harmonic-transport", check_transport},
        {"dunkl-pairing", check_pairing},
        {"spectral-flow", check_spectral_flow},
        {"special-cases", check_special_cases},
        {"coxeter", check_coxeter},
        {"spin", check_spin},
        {"pieri-dimension", check_pieri_dimension},
    };
    std::vector<CheckResult> out;
    if (names.empty()) {
        for (const auto& [name, fn] : table) out.push_back(fn(b));
        return out;
    }
    for (const auto& want : names) {
        bool found = false;
        for (const auto& [name, fn] : table) {
            if (name == want) {
                out.push_back(fn(b));
                found = true;
                break;
            }
        }
        if (!found) throw Error("unknown check '" + want + "'");
    }
    return out;
}

}  // namespace angcm
