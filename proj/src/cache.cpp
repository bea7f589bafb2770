#include "angcm/cache.hpp"

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "angcm/errors.hpp"

namespace angcm {

std::string HarmonicCache::key(const std::string& module, int n, const Rational& g,
                               const std::string& variant, const MultiIndex& k) {
    std::string text = module + "|" + std::to_string(n) + "|" + g.str() + "|" + variant + "|";
    for (int ki : k) text += std::to_string(ki) + ".";
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string HarmonicCache::path_for(const std::string& key) const {
    return (std::filesystem::path(dir_) / (key + ".json")).string();
}

std::optional<CacheEntry> HarmonicCache::load(const std::string& key) const {
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
        CacheEntry e;
        e.variant = j.at("variant").get<std::string>();
        e.n = j.at("n").get<int>();
        e.g = j.at("g").get<std::string>();
        e.k = j.at("k").get<MultiIndex>();
        e.m = j.at("m").get<long>();
        e.q = j.at("q").get<std::string>();
        e.poly = j.at("poly").get<std::string>();
        e.verified = j.at("verified").get<bool>();
        return e;
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;  // a corrupt cache entry is just a miss
    }
}

void HarmonicCache::store(const std::string& key, const CacheEntry& entry) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    nlohmann::json j{{"variant", entry.variant}, {"n", entry.n},       {"g", entry.g},
                     {"k", entry.k},             {"m", entry.m},       {"q", entry.q},
                     {"poly", entry.poly},       {"verified", entry.verified}};
    std::ofstream out(path_for(key));
    if (!out) throw Error("cannot write cache entry under " + dir_);
    out << j.dump(2) << "\n";
}

}  // namespace angcm
