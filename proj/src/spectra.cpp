#include "angcm/spectra.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "angcm/errors.hpp"

namespace angcm {

std::string variant_name(ModelVariant v) {
    switch (v) {
        case ModelVariant::Full: return "full";
        case ModelVariant::Relative: return "relative";
        case ModelVariant::Angular: return "angular";
        case ModelVariant::RelativeAngular: return "relative-angular";
    }
    return "?";
}

ModelVariant parse_variant(std::string_view s) {
    if (s == "full") return ModelVariant::Full;
    if (s == "relative") return ModelVariant::Relative;
    if (s == "angular") return ModelVariant::Angular;
    if (s == "relative-angular") return ModelVariant::RelativeAngular;
    throw ParseError("unknown variant '" + std::string(s) + "'");
}

long level_of(const MultiIndex& k) {
    long m = 0;
    for (std::size_t i = 0; i < k.size(); ++i) m += static_cast<long>(i + 1) * k[i];
    return m;
}

bool satisfies_variant(ModelVariant v, const MultiIndex& k) {
    for (int ki : k)
        if (ki < 0) return false;
    const bool no_k1 = k.empty() || k[0] == 0;
    const bool no_k2 = k.size() < 2 || k[1] == 0;
    switch (v) {
        case ModelVariant::Full: return true;
        case ModelVariant::Relative: return no_k1;
        case ModelVariant::Angular: return no_k2;
        case ModelVariant::RelativeAngular: return no_k1 && no_k2;
    }
    return false;
}

long long partitions_count(int n, long m) {
    if (n < 1) throw Error("partitions need n >= 1");
    if (m < 0) return 0;
    // Bounded-part recurrence p_n(m) = p_{n-1}(m) + p_n(m-n), memoized per n.
    static std::map<std::pair<int, long>, long long> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto rec = [&](auto&& self, int parts, long rest) -> long long {
        if (rest == 0) return 1;
        if (parts == 0 || rest < 0) return 0;
        auto key = std::make_pair(parts, rest);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        long long v = self(self, parts - 1, rest) + self(self, parts, rest - parts);
        memo.emplace(key, v);
        return v;
    };
    return rec(rec, n, m);
}

std::vector<MultiIndex> enumerate_levels(ModelVariant v, int n, long m) {
    if (n < 1 || m < 0) throw Error("enumerate_levels needs n >= 1, m >= 0");
    std::vector<MultiIndex> out;
    MultiIndex k(n, 0);
    auto rec = [&](auto&& self, int i, long rest) -> void {
        if (i > n) {
            if (rest == 0) out.push_back(k);
            return;
        }
        const bool excluded = (i == 1 && (v == ModelVariant::Relative || v == ModelVariant::RelativeAngular)) ||
                              (i == 2 && (v == ModelVariant::Angular || v == ModelVariant::RelativeAngular));
        const long max_ki = excluded ? 0 : rest / i;
        for (long ki = 0; ki <= max_ki; ++ki) {
            k[i - 1] = static_cast<int>(ki);
            self(self, i + 1, rest - i * ki);
        }
        k[i - 1] = 0;
    };
    rec(rec, 1, m);
    std::sort(out.begin(), out.end());
    return out;
}

SpectrumEntry energy(ModelVariant v, int n, const Rational& g, const MultiIndex& k) {
    if (static_cast<int>(k.size()) != n) throw Error("multi-index length must equal n");
    if (!satisfies_variant(v, k)) throw Error("multi-index violates " + variant_name(v) + " constraints");
    if (g.is_negative()) throw Error("coupling must be nonnegative");

    const Rational ground = g * Rational(n) * Rational(n - 1) / Rational(2);  // g n(n-1)/2
    const long m = level_of(k);
    SpectrumEntry e;
    e.k = k;
    e.degeneracy = degeneracy(v, n, m);
    switch (v) {
        case ModelVariant::Full:
            e.energy = ground + Rational(n, 2) + Rational(m);
            break;
        case ModelVariant::Relative:
            e.energy = ground + Rational(n - 1, 2) + Rational(m);
            break;
        case ModelVariant::Angular: {
            // q = g n(n-1)/2 + k1 + 3 k3 + ... + n kn; the k2 term is gone.
            e.q = ground + Rational(m);
            e.energy = e.q * (e.q + Rational(n - 2)) / Rational(2);
            break;
        }
        case ModelVariant::RelativeAngular: {
            e.q = ground + Rational(m);
            e.energy = e.q * (e.q + Rational(n - 3)) / Rational(2);
            break;
        }
    }
    return e;
}

long long degeneracy(ModelVariant v, int n, long m) {
    switch (v) {
        case ModelVariant::Full: return partitions_count(n, m);
        case ModelVariant::Relative: return partitions_count(n, m) - partitions_count(n, m - 1);
        case ModelVariant::Angular: return partitions_count(n, m) - partitions_count(n, m - 2);
        case ModelVariant::RelativeAngular:
            return partitions_count(n, m) - partitions_count(n, m - 1) - partitions_count(n, m - 2) +
                   partitions_count(n, m - 3);
    }
    return 0;
}

}  // namespace angcm
