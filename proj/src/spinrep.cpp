#include "angcm/spinrep.hpp"

#include <algorithm>
#include <sstream>

#include "angcm/errors.hpp"

namespace angcm {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] <= 0) throw Error("Young diagram rows must be positive");
        if (i > 0 && rows_[i] > rows_[i - 1]) throw Error("Young diagram rows must be weakly decreasing");
    }
}

long YoungDiagram::boxes() const {
    long b = 0;
    for (int r : rows_) b += r;
    return b;
}

std::string YoungDiagram::str() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) out << ',';
        out << rows_[i];
    }
    out << ']';
    return out.str();
}

YoungDiagram YoungDiagram::parse(std::string_view text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw ParseError("bad diagram '" + std::string(text) + "'");
    std::vector<int> rows;
    std::string body(text.substr(1, text.size() - 2));
    std::istringstream in(body);
    std::string piece;
    while (std::getline(in, piece, ',')) {
        try {
            rows.push_back(std::stoi(piece));
        } catch (const std::exception&) {
            throw ParseError("bad diagram '" + std::string(text) + "'");
        }
    }
    return YoungDiagram(std::move(rows));
}

bool operator<(const YoungDiagram& a, const YoungDiagram& b) {
    if (a.boxes() != b.boxes()) return a.boxes() > b.boxes();
    return a.rows_ > b.rows_;  // more-dominant diagrams first within a box count
}

long long irrep_dimension(int s, const YoungDiagram& d) {
    if (s < 1) throw Error("SU(s) needs s >= 1");
    if (d.row_count() > s) throw Error("diagram has more rows than flavors");
    std::vector<long> lambda(s, 0);
    for (int i = 0; i < d.row_count(); ++i) lambda[i] = d.rows()[i];
    // prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i)
    Rational dim(1);
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j)
            dim *= Rational(lambda[i] - lambda[j] + j - i) / Rational(j - i);
    return dim.to_long();
}

VirtualCharacter VirtualCharacter::single(const YoungDiagram& d, long long mult) {
    VirtualCharacter c;
    c.add(d, mult);
    return c;
}

bool VirtualCharacter::all_nonnegative() const {
    for (const auto& [d, m] : entries_)
        if (m < 0) return false;
    return true;
}

long long VirtualCharacter::multiplicity(const YoungDiagram& d) const {
    auto it = entries_.find(d);
    return it == entries_.end() ? 0 : it->second;
}

long long VirtualCharacter::dimension(int s) const {
    long long dim = 0;
    for (const auto& [d, m] : entries_) dim += m * irrep_dimension(s, d);
    return dim;
}

void VirtualCharacter::add(const YoungDiagram& d, long long mult) {
    if (mult == 0) return;
    auto [it, inserted] = entries_.emplace(d, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0) entries_.erase(it);
    }
}

VirtualCharacter& VirtualCharacter::operator+=(const VirtualCharacter& o) {
    for (const auto& [d, m] : o.entries_) add(d, m);
    return *this;
}

VirtualCharacter& VirtualCharacter::operator-=(const VirtualCharacter& o) {
    for (const auto& [d, m] : o.entries_) add(d, -m);
    return *this;
}

std::string VirtualCharacter::str() const {
    if (entries_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [d, m] : entries_) {
        long long shown = m;
        if (first) {
            first = false;
        } else if (m < 0) {
            out << " - ";
            shown = -m;
        } else {
            out << " + ";
        }
        out << shown << '*' << d.str();
    }
    return out.str();
}

namespace {

// SU(s) canonicalization: drop diagrams taller than s, strip height-s columns.
bool canonicalize(std::vector<int>& rows, int s) {
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    if (static_cast<int>(rows.size()) > s) return false;
    if (static_cast<int>(rows.size()) == s) {
        int strip = rows.back();
        for (int& r : rows) r -= strip;
        while (!rows.empty() && rows.back() == 0) rows.pop_back();
    }
    return true;
}

// All horizontal strips of size l on top of lambda: mu interlaces lambda,
// mu_1 >= lambda_1 >= mu_2 >= lambda_2 >= ..., so additions to row i are
// capped by lambda_{i-1} - lambda_i and a fresh row by lambda's last length.
void pieri_one(const YoungDiagram& d, int l, int s, long long mult, VirtualCharacter& out) {
    const std::vector<int>& lambda = d.rows();
    std::vector<int> added(lambda.size(), 0);
    auto rec = [&](auto&& self, std::size_t row, int remaining) -> void {
        if (row == lambda.size()) {
            if (!lambda.empty() && remaining > lambda.back()) return;
            std::vector<int> rows(lambda.size() + 1);
            for (std::size_t i = 0; i < lambda.size(); ++i) rows[i] = lambda[i] + added[i];
            rows[lambda.size()] = remaining;
            if (canonicalize(rows, s)) out.add(YoungDiagram(std::move(rows)), mult);
            return;
        }
        int cap = row == 0 ? remaining : std::min(remaining, lambda[row - 1] - lambda[row]);
        for (int add = 0; add <= cap; ++add) {
            added[row] = add;
            self(self, row + 1, remaining - add);
        }
        added[row] = 0;
    };
    rec(rec, 0, l);
}

}  // namespace

VirtualCharacter pieri_product(const VirtualCharacter& c, int l, int s) {
    if (l < 0) throw Error("Pieri row length must be nonnegative");
    if (s < 1) throw Error("SU(s) needs s >= 1");
    if (l == 0) return c;
    VirtualCharacter out;
    for (const auto& [d, m] : c.entries()) pieri_one(d, l, s, m, out);
    return out;
}

VirtualCharacter level_content(int n, const MultiIndex& k, int s) {
    if (static_cast<int>(k.size()) != n) throw Error("multi-index length must equal n");
    std::vector<int> positions;
    for (int i = 0; i < n; ++i) {
        if (k[i] < 0) throw Error("multi-index entries must be nonnegative");
        if (k[i] > 0) positions.push_back(i + 1);
    }
    // [c1] x [c2-c1] x ... x [cr-c_{r-1}] x [n-cr]
    std::vector<int> factors;
    int prev = 0;
    for (int c : positions) {
        factors.push_back(c - prev);
        prev = c;
    }
    factors.push_back(n - prev);
    VirtualCharacter out = VirtualCharacter::single(YoungDiagram());
    for (int f : factors) out = pieri_product(out, f, s);
    return out;
}

VirtualCharacter spin_content(ModelVariant v, int n, long m, int s) {
    auto full = [&](long level) {
        VirtualCharacter c;
        if (level < 0) return c;
        for (const auto& k : enumerate_levels(ModelVariant::Full, n, level)) c += level_content(n, k, s);
        return c;
    };
    VirtualCharacter out;
    switch (v) {
        case ModelVariant::Full:
            out = full(m);
            break;
        case ModelVariant::Angular:
            out = full(m) - full(m - 2);
            break;
        case ModelVariant::RelativeAngular:
            out = full(m) - full(m - 1) - full(m - 2) + full(m - 3);
            break;
        case ModelVariant::Relative:
            throw Unsupported("spin content is defined for the full and angular reductions");
    }
    if (v != ModelVariant::Full && !out.all_nonnegative())
        throw NegativeMultiplicity("angular spin content came out negative at level " + std::to_string(m));
    return out;
}

}  // namespace angcm
