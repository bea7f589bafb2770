#pragma once

#include <string>
#include <vector>

#include "angcm/rational.hpp"
#include "angcm/spectra.hpp"

namespace angcm {

// Usage-level problem: wrong flags, malformed values, constraint violations.
struct UsageError : Error {
    explicit UsageError(const std::string& what) : Error(what) {}
};

// Parsed, validated run configuration shared by every command.
struct RunConfig {
    int n = 3;
    Rational g{1};
    Rational omega{1};
    ModelVariant variant = ModelVariant::Angular;
    long max_level = 6;
    std::string root_system;            // empty: the type-A modules
    std::vector<Rational> multiplicities;  // per-orbit coupling for root systems
    int spin_flavors = 2;
    std::string format = "text";        // "text" | "json"
    std::string cache_dir;              // empty: no cache
    bool trust_cache = false;
    unsigned long seed = 12345;
};

std::string cmd_spectrum(const RunConfig& cfg);
std::string cmd_eigenfunction(const RunConfig& cfg, const MultiIndex& k);
std::string cmd_spin(const RunConfig& cfg, long m);

struct VerifyOutcome {
    std::string rendering;
    bool all_passed = false;
};
VerifyOutcome cmd_verify(const RunConfig& cfg, const std::vector<std::string>& checks);

}  // namespace angcm
