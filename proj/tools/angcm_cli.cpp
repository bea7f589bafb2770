// Command-line front end. Talks to the library exclusively through the C API.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "angcm/angcm.h"

namespace {

struct Flags {
    std::string n = "3";
    std::string g = "1";
    std::string omega = "1";
    std::string variant = "angular";
    std::string max_level = "6";
    std::string root_system;
    std::string multiplicities;
    std::string spin_flavors = "2";
    std::string format = "text";
    std::string cache_dir;
    bool trust_cache = false;
    std::string seed = "12345";
    std::string k;
    std::string checks;
    long m = 0;
};

void add_common(CLI::App* cmd, Flags& f) {
    cmd->add_option("--n", f.n, "particle count");
    cmd->add_option("--g", f.g, "coupling, a rational like 3/2");
    cmd->add_option("--omega", f.omega, "oscillator frequency (full/relative display only)");
    cmd->add_option("--variant", f.variant, "full | relative | angular | relative-angular");
    cmd->add_option("--max-level", f.max_level, "largest level m");
    cmd->add_option("--root-system", f.root_system, "Coxeter system: A2, B3, D4, I2(5)");
    cmd->add_option("--multiplicities", f.multiplicities, "per-orbit couplings, comma list");
    cmd->add_option("--s", f.spin_flavors, "spin flavors for SU(s)");
    cmd->add_option("--format", f.format, "text | json");
    cmd->add_option("--cache-dir", f.cache_dir, "eigenfunction cache directory (default: $ANGCM_CACHE_DIR)");
    cmd->add_flag("--trust-cache", f.trust_cache, "skip re-verification of cache hits");
    cmd->add_option("--seed", f.seed, "seed for randomized property sweeps");
}

int apply_options(angcm_session* s, const Flags& f, bool cache_dir_set) {
    const std::pair<const char*, std::string> opts[] = {
        {"n", f.n},           {"g", f.g},
        {"omega", f.omega},   {"variant", f.variant},
        {"max-level", f.max_level}, {"spin-flavors", f.spin_flavors},
        {"format", f.format}, {"seed", f.seed},
    };
    for (const auto& [key, value] : opts) {
        if (angcm_set_option(s, key, value.c_str()) != ANGCM_OK) {
            std::fprintf(stderr, "angcm: %s\n", angcm_last_error(s));
            return 2;
        }
    }
    if (!f.root_system.empty() && angcm_set_option(s, "root-system", f.root_system.c_str()) != ANGCM_OK) return 2;
    if (!f.multiplicities.empty() &&
        angcm_set_option(s, "multiplicities", f.multiplicities.c_str()) != ANGCM_OK)
        return 2;
    if (cache_dir_set && angcm_set_option(s, "cache-dir", f.cache_dir.c_str()) != ANGCM_OK) return 2;
    if (angcm_set_option(s, "trust-cache", f.trust_cache ? "1" : "0") != ANGCM_OK) return 2;
    return 0;
}

int finish(angcm_session* s, angcm_status status, char* out) {
    if (out) {
        std::fputs(out, stdout);
        angcm_string_free(out);
    }
    if (status != ANGCM_OK) std::fprintf(stderr, "angcm: %s\n", angcm_last_error(s));
    return static_cast<int>(status);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact spectra, eigenfunctions and spin content of the rational angular Calogero-Moser model"};
    app.require_subcommand(1);
    Flags f;

    CLI::App* spectrum = app.add_subcommand("spectrum", "energy table with degeneracies and multi-indices");
    add_common(spectrum, f);

    CLI::App* eig = app.add_subcommand("eigenfunction", "deformed harmonic / oscillator state for one k");
    add_common(eig, f);
    eig->add_option("--k", f.k, "multi-index, comma list like 2,0,0")->required();

    CLI::App* spin = app.add_subcommand("spin", "SU(s) representation content of one level");
    add_common(spin, f);
    spin->add_option("--m", f.m, "level")->required();

    CLI::App* verify = app.add_subcommand("verify", "run the exact verification suites");
    add_common(verify, f);
    verify->add_option("--checks", f.checks, "comma list of suites (default: all); --n/--max-level set bounds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    angcm_session* s = angcm_session_new();
    if (!s) return 1;
    const bool cache_dir_set = !f.cache_dir.empty();
    int rc = apply_options(s, f, cache_dir_set);
    if (rc != 0) {
        std::fprintf(stderr, "angcm: %s\n", angcm_last_error(s));
        angcm_session_free(s);
        return rc;
    }

    char* out = nullptr;
    angcm_status status = ANGCM_OK;
    if (spectrum->parsed()) {
        status = angcm_spectrum(s, &out);
    } else if (eig->parsed()) {
        status = angcm_eigenfunction(s, f.k.c_str(), &out);
    } else if (spin->parsed()) {
        status = angcm_spin(s, f.m, &out);
    } else if (verify->parsed()) {
        status = angcm_verify(s, f.checks.empty() ? nullptr : f.checks.c_str(), &out);
    }
    rc = finish(s, status, out);
    angcm_session_free(s);
    return rc;
}
