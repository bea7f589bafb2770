#include "angcm/commands.hpp"

#include <sstream>

#include <json.hpp>

#include "angcm/cache.hpp"
#include "angcm/coxeter.hpp"
#include "angcm/dunkl.hpp"
#include "angcm/harmonics.hpp"
#include "angcm/spinrep.hpp"
#include "angcm/verify.hpp"

namespace angcm {

namespace {

using nlohmann::json;

std::string k_text(const std::vector<int>& k) {
    std::string out = "(";
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(k[i]);
    }
    return out + ")";
}

json config_json(const RunConfig& cfg) {
    json j{{"n", cfg.n},
           {"g", cfg.g.str()},
           {"variant", variant_name(cfg.variant)},
           {"max_level", cfg.max_level}};
    if (!cfg.root_system.empty()) {
        j["root_system"] = cfg.root_system;
        json gs = json::array();
        for (const auto& gi : cfg.multiplicities) gs.push_back(gi.str());
        j["multiplicities"] = gs;
    }
    if (cfg.variant == ModelVariant::Full || cfg.variant == ModelVariant::Relative)
        j["omega"] = cfg.omega.str();
    return j;
}

void validate_common(const RunConfig& cfg) {
    if (cfg.n < 2) throw UsageError("n must be at least 2");
    if (cfg.g.is_negative()) throw UsageError("g must be nonnegative");
    if (cfg.max_level < 0) throw UsageError("max-level must be nonnegative");
    if (!(cfg.omega > Rational(0))) throw UsageError("omega must be positive");
    if (cfg.format != "text" && cfg.format != "json") throw UsageError("format must be text or json");
}

RootSystem root_system_of(const RunConfig& cfg) {
    try {
        return parse_root_system(cfg.root_system);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

std::vector<Rational> orbit_multiplicities(const RunConfig& cfg, const RootSystem& rs) {
    std::vector<Rational> g = cfg.multiplicities;
    if (g.empty()) g.assign(rs.orbit_count, cfg.g);
    if (static_cast<int>(g.size()) == 1 && rs.orbit_count == 2) g.push_back(g[0]);
    if (static_cast<int>(g.size()) != rs.orbit_count)
        throw UsageError("root system " + cfg.root_system + " needs " + std::to_string(rs.orbit_count) +
                         " multiplicities");
    for (const auto& gi : g)
        if (gi.is_negative()) throw UsageError("multiplicities must be nonnegative");
    return g;
}

json root_system_json(const RootSystem& rs, const std::vector<Rational>& g) {
    json roots = json::array();
    if (rs.is_dihedral()) {
        for (int k = 0; k < rs.p; ++k)
            roots.push_back({{"mirror_angle", std::to_string(k) + "*pi/" + std::to_string(rs.p)},
                             {"orbit", (rs.p % 2 == 0) ? k % 2 : 0}});
    } else {
        for (const auto& r : rs.positive_roots) {
            json coords = json::array();
            for (const auto& c : r.root) coords.push_back(c.str());
            roots.push_back({{"coords", coords}, {"orbit", r.orbit}});
        }
    }
    json gs = json::array();
    for (const auto& gi : g) gs.push_back(gi.str());
    json j{{"tag", family_name(rs.family)}, {"rank", rs.rank},       {"roots", roots},
           {"multiplicities", gs},          {"degrees", rs.degrees}};
    if (rs.is_dihedral()) j["p"] = rs.p;
    return j;
}

std::string render(const RunConfig& cfg, const json& j, const std::string& text) {
    return cfg.format == "json" ? j.dump(2) + "\n" : text;
}

std::string spectrum_type_a(const RunConfig& cfg) {
    const bool angular = cfg.variant == ModelVariant::Angular || cfg.variant == ModelVariant::RelativeAngular;
    std::ostringstream out;
    json rows = json::array();
    out << "# " << variant_name(cfg.variant) << " spectrum, n=" << cfg.n << ", g=" << cfg.g.str();
    if (!angular) out << ", omega=" << cfg.omega.str();
    out << "\n";
    out << (angular ? "m\tepsilon\tq\tdegeneracy\tk\n" : "m\tenergy\tdegeneracy\tk\n");
    for (long m = 0; m <= cfg.max_level; ++m) {
        auto levels = enumerate_levels(cfg.variant, cfg.n, m);
        if (levels.empty()) continue;
        SpectrumEntry e = energy(cfg.variant, cfg.n, cfg.g, levels.front());
        Rational shown = angular ? e.energy : e.energy * cfg.omega;
        std::string klist;
        json jk = json::array();
        for (const auto& k : levels) {
            if (!klist.empty()) klist += " ";
            klist += k_text(k);
            jk.push_back(k);
        }
        out << m << "\t" << shown.str();
        if (angular) out << "\t" << e.q.str();
        out << "\t" << e.degeneracy << "\t" << klist << "\n";
        json row{{"m", m}, {"degeneracy", e.degeneracy}, {"indices", jk}};
        row[angular ? "epsilon" : "energy"] = shown.str();
        if (angular) row["q"] = e.q.str();
        rows.push_back(row);
    }
    json j{{"command", "spectrum"}, {"config", config_json(cfg)}, {"rows", rows}};
    return render(cfg, j, out.str());
}

std::string spectrum_coxeter(const RunConfig& cfg) {
    RootSystem rs = root_system_of(cfg);
    std::vector<Rational> g = orbit_multiplicities(cfg, rs);
    std::ostringstream out;
    json rows = json::array();
    out << "# " << cfg.root_system << " angular spectrum, multiplicities";
    for (const auto& gi : g) out << " " << gi.str();
    out << "\n";
    out << "m\tepsilon\tq\tcount\tk\n";
    for (long m = 0; m <= cfg.max_level; ++m) {
        auto ks = coxeter_enumerate_angular(rs, m);
        if (ks.empty()) continue;
        // embed the angular k into the full generator index set
        std::vector<int> k_full(rs.degrees.size(), 0);
        for (std::size_t i = 0, slot = 0; i < rs.degrees.size(); ++i)
            if (static_cast<int>(i) != rs.r2_slot) k_full[i] = ks.front()[slot++];
        CoxeterSpectrumEntry e = coxeter_spectrum(rs, g, k_full);
        std::string klist;
        json jk = json::array();
        for (const auto& k : ks) {
            if (!klist.empty()) klist += " ";
            klist += k_text(k);
            jk.push_back(k);
        }
        out << m << "\t" << e.epsilon.str() << "\t" << e.q.str() << "\t" << ks.size() << "\t" << klist << "\n";
        rows.push_back(json{{"m", m},
                            {"epsilon", e.epsilon.str()},
                            {"q", e.q.str()},
                            {"count", ks.size()},
                            {"indices", jk}});
    }
    json j{{"command", "spectrum"},
           {"config", config_json(cfg)},
           {"root_system", root_system_json(rs, g)},
           {"rows", rows}};
    return render(cfg, j, out.str());
}

}  // namespace

std::string cmd_spectrum(const RunConfig& cfg) {
    validate_common(cfg);
    return cfg.root_system.empty() ? spectrum_type_a(cfg) : spectrum_coxeter(cfg);
}

std::string cmd_eigenfunction(const RunConfig& cfg, const MultiIndex& k) {
    validate_common(cfg);
    if (!cfg.root_system.empty()) {
        RootSystem rs = root_system_of(cfg);
        std::vector<Rational> g = orbit_multiplicities(cfg, rs);
        if (k.size() != rs.degrees.size() - 1)
            throw UsageError("k needs one entry per non-r^2 generator (" +
                             std::to_string(rs.degrees.size() - 1) + ")");
        for (int ki : k)
            if (ki < 0) throw UsageError("k entries must be nonnegative");
        MultiPoly h = coxeter_deformed_harmonic(rs, g, k);
        if (!coxeter_L_apply(rs, g, h).is_zero()) throw Error("harmonicity verification failed");
        MultiPoly hn = h.is_zero() ? h : h.monic();
        long m = 0;
        for (std::size_t i = 0, slot = 0; i < rs.degrees.size(); ++i)
            if (static_cast<int>(i) != rs.r2_slot) m += static_cast<long>(rs.degrees[i]) * k[slot++];
        Rational q = multiplicity_sum(rs, g) + Rational(m);
        Rational eps = q * (q + Rational(rs.nvars - 2)) / Rational(2);
        std::ostringstream out;
        out << "# " << cfg.root_system << " deformed harmonic, k=" << k_text(k) << "\n"
            << "m: " << m << "\nq: " << q.str() << "\nepsilon: " << eps.str() << "\nverified: true\n"
            << "h = " << hn.to_text() << "\n";
        json j{{"command", "eigenfunction"}, {"config", config_json(cfg)},        {"k", k},
               {"m", m},                     {"q", q.str()},                      {"epsilon", eps.str()},
               {"poly", hn.to_text()},       {"verified", true}};
        return render(cfg, j, out.str());
    }

    if (static_cast<int>(k.size()) != cfg.n) throw UsageError("k needs exactly n entries");
    if (!satisfies_variant(cfg.variant, k))
        throw UsageError("k violates the " + variant_name(cfg.variant) + " constraints");
    DunklContext ctx(cfg.n, cfg.g);

    if (cfg.variant == ModelVariant::Full || cfg.variant == ModelVariant::Relative) {
        if (!cfg.g.is_integer()) throw UsageError("oscillator states need integer g");
        OscillatorState st = oscillator_state(ctx, cfg.omega, k);
        if (!(gauged_hamiltonian_apply(ctx, cfg.omega, st.prefactor) ==
              st.prefactor.scaled(GaussianRational(st.energy))))
            throw Error("oscillator eigen-equation verification failed");
        MultiPoly shown = st.prefactor.is_zero() ? st.prefactor : st.prefactor.monic();
        std::ostringstream out;
        out << "# oscillator state, n=" << cfg.n << ", g=" << cfg.g.str() << ", omega=" << cfg.omega.str()
            << ", k=" << k_text(k) << "\n"
            << "energy: " << st.energy.str() << "\nverified: true\n"
            << "prefactor = " << shown.to_text() << "\n"
            << "(full wave function: prefactor * exp(-omega r^2 / 2))\n";
        json j{{"command", "eigenfunction"}, {"config", config_json(cfg)},  {"k", k},
               {"energy", st.energy.str()},  {"poly", shown.to_text()},     {"verified", true}};
        return render(cfg, j, out.str());
    }

    // angular / relative-angular deformed harmonics, with the disk cache
    const std::string variant = variant_name(cfg.variant);
    SpectrumEntry se = energy(cfg.variant, cfg.n, cfg.g, k);
    const long m = level_of(k);
    MultiPoly h(cfg.n);
    bool from_cache = false;
    std::string cache_key;
    if (!cfg.cache_dir.empty()) {
        HarmonicCache cache(cfg.cache_dir);
        cache_key = HarmonicCache::key("eigenfunction", cfg.n, cfg.g, variant, k);
        if (auto hit = cache.load(cache_key)) {
            if (hit->variant == variant && hit->n == cfg.n && hit->g == cfg.g.str() && hit->k == k) {
                h = MultiPoly::parse(cfg.n, hit->poly);
                from_cache = true;
            }
        }
    }
    if (!from_cache) h = deformed_harmonic(ctx, k).poly;
    if (!h.is_zero()) h = h.monic();
    const bool must_verify = !from_cache || !cfg.trust_cache;
    if (must_verify && !calogero_L_apply(ctx, h).is_zero()) throw Error("harmonicity verification failed");
    if (!cfg.cache_dir.empty() && !from_cache) {
        HarmonicCache cache(cfg.cache_dir);
        cache.store(cache_key, CacheEntry{variant, cfg.n, cfg.g.str(), k, m, se.q.str(), h.to_text(), true});
    }

    std::ostringstream out;
    out << "# " << variant << " eigenfunction, n=" << cfg.n << ", g=" << cfg.g.str() << ", k=" << k_text(k)
        << "\n"
        << "m: " << m << "\nq: " << se.q.str() << "\nepsilon: " << se.energy.str() << "\nverified: "
        << (must_verify ? "true" : "cached") << "\n";
    if (cfg.variant == ModelVariant::Angular) {
        out << "h = " << h.to_text() << "\n"
            << "(angular eigenfunction: v_k = r^-m h(x) * Delta-hat^" << cfg.g.str() << ")\n";
    } else {
        MultiPoly restricted = h.restricted_to_hyperplane();
        out << "h = " << h.to_text() << "\n"
            << "restricted (x" << cfg.n << " = -(x1+...+x" << cfg.n - 1 << ")) = " << restricted.to_text()
            << "\n";
    }
    json j{{"command", "eigenfunction"},
           {"config", config_json(cfg)},
           {"k", k},
           {"m", m},
           {"q", se.q.str()},
           {"epsilon", se.energy.str()},
           {"poly", h.to_text()},
           {"verified", true}};
    return render(cfg, j, out.str());
}

std::string cmd_spin(const RunConfig& cfg, long m) {
    validate_common(cfg);
    if (cfg.spin_flavors < 1) throw UsageError("spin flavors must be at least 1");
    if (m < 0 || m > cfg.max_level) throw UsageError("level m must lie in [0, max-level]");
    if (cfg.variant == ModelVariant::Relative)
        throw UsageError("spin content is defined for full, angular and relative-angular");
    VirtualCharacter c = spin_content(cfg.variant, cfg.n, m, cfg.spin_flavors);
    std::ostringstream out;
    const char* label = cfg.variant == ModelVariant::Full
                            ? "S"
                            : (cfg.variant == ModelVariant::Angular ? "S_Omega" : "S~_Omega");
    out << "# " << label << "(" << m << "), n=" << cfg.n << ", s=" << cfg.spin_flavors << "\n"
        << label << "(" << m << ") = " << c.str() << "\n";
    json entries = json::array();
    long long total = 0;
    for (const auto& [d, mult] : c.entries()) {
        long long dim = irrep_dimension(cfg.spin_flavors, d);
        out << "  " << mult << " x " << d.str() << "  (dim " << dim << ")\n";
        total += mult * dim;
        entries.push_back(json{{"diagram", d.str()}, {"multiplicity", mult}, {"dimension", dim}});
    }
    out << "total dimension: " << total << "\n";
    json j{{"command", "spin"},   {"config", config_json(cfg)}, {"s", cfg.spin_flavors},
           {"m", m},              {"character", c.str()},       {"entries", entries},
           {"total_dimension", total}};
    return render(cfg, j, out.str());
}

VerifyOutcome cmd_verify(const RunConfig& cfg, const std::vector<std::string>& checks) {
    validate_common(cfg);
    VerifyBounds bounds;
    bounds.max_n = cfg.n;
    bounds.max_level = cfg.max_level;
    bounds.seed = cfg.seed;
    std::vector<CheckResult> results;
    try {
        results = run_checks(bounds, checks);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    bool all = true;
    long cells = 0;
    std::ostringstream out;
    json jchecks = json::array();
    for (const auto& r : results) {
        all = all && r.ok();
        cells += r.cells;
        out << (r.ok() ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.cells << " checks, " << r.failures
            << " failures";
        char buf[32];
        std::snprintf(buf, sizeof buf, " [%.2fs]", r.seconds);
        out << buf << "\n";
        for (const auto& note : r.notes) out << "       " << note << "\n";
        jchecks.push_back(json{{"name", r.name},
                               {"cells", r.cells},
                               {"failures", r.failures},
                               {"seconds", r.seconds},
                               {"notes", r.notes}});
    }
    out << (all ? "all checks passed" : "SOME CHECKS FAILED") << " (" << cells << " exact checks)\n";
    json j{{"command", "verify"},
           {"config", config_json(cfg)},
           {"checks", jchecks},
           {"all_passed", all}};
    return {render(cfg, j, out.str()), all};
}

}  // namespace angcm
