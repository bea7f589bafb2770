#pragma once

#include <optional>
#include <string>

#include "angcm/harmonics.hpp"
#include "angcm/spectra.hpp"

namespace angcm {

// One cached eigenfunction. The polynomial travels in the text grammar so the
// cache stays bit-exact and diffable.
struct CacheEntry {
    std::string variant;
    int n = 0;
    std::string g;  // "p/q"
    MultiIndex k;
    long m = 0;
    std::string q;
    std::string poly;
    bool verified = false;
};

// Advisory JSON disk cache, one file per key under cache_dir. Lookups always
// re-verify unless told to trust the cache.
class HarmonicCache {
public:
    explicit HarmonicCache(std::string dir) : dir_(std::move(dir)) {}

    // FNV-1a over (module, n, g, variant, k).
    static std::string key(const std::string& module, int n, const Rational& g, const std::string& variant,
                           const MultiIndex& k);

    std::optional<CacheEntry> load(const std::string& key) const;
    void store(const std::string& key, const CacheEntry& entry) const;

    const std::string& dir() const { return dir_; }

private:
    std::string path_for(const std::string& key) const;
    std::string dir_;
};

}  // namespace angcm
