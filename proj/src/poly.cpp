#include "angcm/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "angcm/errors.hpp"

namespace angcm {

namespace {

void check_same_vars(int a, int b) {
    if (a != b) throw Error("variable-count mismatch");
}

void check_index(int n, int i) {
    if (i < 1 || i > n) throw Error("variable index out of range");
}

}  // namespace

MultiPoly MultiPoly::constant(int nvars, GaussianRational c) {
    MultiPoly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(Exponents(nvars, 0), std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
    check_index(nvars, i);
    Exponents e(nvars, 0);
    e[i - 1] = 1;
    return monomial(nvars, std::move(e), GaussianRational(1));
}

MultiPoly MultiPoly::monomial(int nvars, Exponents e, GaussianRational c) {
    if (static_cast<int>(e.size()) != nvars) throw Error("exponent vector length mismatch");
    MultiPoly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(std::move(e), std::move(c));
    return p;
}

void MultiPoly::add_term(const Exponents& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(e.size()) != n_) throw Error("exponent vector length mismatch");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GaussianRational MultiPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussianRational() : it->second;
}

const std::pair<const Exponents, GaussianRational>& MultiPoly::leading() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return *terms_.begin();
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(n_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_same_vars(n_, o.n_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_same_vars(n_, o.n_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    check_same_vars(a.n_, b.n_);
    MultiPoly r(a.n_);
    Exponents e(a.n_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int v = 0; v < a.n_; ++v) e[v] = ea[v] + eb[v];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const GaussianRational& c) const {
    MultiPoly r(n_);
    if (c.is_zero()) return r;
    for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
    return r;
}

MultiPoly MultiPoly::pow(long e) const {
    if (e < 0) throw Error("negative polynomial power");
    MultiPoly r = one(n_);
    for (long t = 0; t < e; ++t) r = r * *this;
    return r;
}

MultiPoly MultiPoly::derivative(int i) const {
    check_index(n_, i);
    MultiPoly r(n_);
    for (const auto& [e, c] : terms_) {
        if (e[i - 1] == 0) continue;
        Exponents d = e;
        d[i - 1] -= 1;
        r.add_term(d, c * GaussianRational(Rational(e[i - 1])));
    }
    return r;
}

MultiPoly MultiPoly::transposed(int i, int j) const {
    check_index(n_, i);
    check_index(n_, j);
    MultiPoly r(n_);
    for (const auto& [e, c] : terms_) {
        Exponents d = e;
        std::swap(d[i - 1], d[j - 1]);
        r.terms_.emplace(std::move(d), c);
    }
    return r;
}

MultiPoly MultiPoly::substituted_signed(const std::vector<int>& perm, const std::vector<int>& sign) const {
    if (static_cast<int>(perm.size()) != n_ || static_cast<int>(sign.size()) != n_)
        throw Error("signed permutation size mismatch");
    MultiPoly r(n_);
    for (const auto& [e, c] : terms_) {
        Exponents d(n_, 0);
        long flips = 0;
        for (int v = 0; v < n_; ++v) {
            d[perm[v] - 1] += e[v];
            if (sign[v] < 0) flips += e[v];
        }
        r.add_term(d, (flips % 2 == 0) ? c : -c);
    }
    return r;
}

MultiPoly MultiPoly::substituted_linear(const std::vector<std::vector<Rational>>& m) const {
    if (static_cast<int>(m.size()) != n_) throw Error("substitution matrix size mismatch");
    std::vector<MultiPoly> images;
    images.reserve(n_);
    for (int v = 0; v < n_; ++v) {
        MultiPoly img(n_);
        for (int w = 0; w < n_; ++w) {
            if (!m[v][w].is_zero()) img += variable(n_, w + 1).scaled(GaussianRational(m[v][w]));
        }
        images.push_back(std::move(img));
    }
    MultiPoly r(n_);
    for (const auto& [e, c] : terms_) {
        MultiPoly t = constant(n_, c);
        for (int v = 0; v < n_; ++v)
            if (e[v] > 0) t = t * images[v].pow(e[v]);
        r += t;
    }
    return r;
}

MultiPoly MultiPoly::restricted_to_hyperplane() const {
    if (n_ < 2) throw Error("need at least two variables to restrict");
    const int nn = n_ - 1;
    MultiPoly neg_sum(nn);
    for (int v = 1; v <= nn; ++v) neg_sum -= variable(nn, v);
    // Cache powers of -(x1+...+x_{n-1}) by the exponent of the old xn.
    std::map<int32_t, MultiPoly> powers;
    powers.emplace(0, one(nn));
    MultiPoly r(nn);
    for (const auto& [e, c] : terms_) {
        auto it = powers.find(e[nn]);
        if (it == powers.end()) it = powers.emplace(e[nn], neg_sum.pow(e[nn])).first;
        Exponents head(e.begin(), e.begin() + nn);
        r += it->second.scaled(c) * monomial(nn, std::move(head), GaussianRational(1));
    }
    return r;
}

GaussianRational MultiPoly::eval(std::span<const GaussianRational> point) const {
    if (static_cast<int>(point.size()) != n_) throw Error("evaluation point size mismatch");
    GaussianRational acc;
    for (const auto& [e, c] : terms_) {
        GaussianRational t = c;
        for (int v = 0; v < n_; ++v)
            for (int32_t p = 0; p < e[v]; ++p) t *= point[v];
        acc += t;
    }
    return acc;
}

long MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return exponents_degree(terms_.begin()->first);  // graded order: first term has max degree
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const long d = total_degree();
    for (const auto& [e, c] : terms_)
        if (exponents_degree(e) != d) return false;
    return true;
}

bool MultiPoly::is_symmetric() const {
    for (int i = 1; i < n_; ++i)
        if (!(*this == transposed(i, i + 1))) return false;
    return true;
}

bool MultiPoly::is_real() const {
    for (const auto& [e, c] : terms_)
        if (!c.is_real()) return false;
    return true;
}

MultiPoly MultiPoly::monic() const {
    if (terms_.empty()) return *this;
    return scaled(leading().second.inverse());
}

std::string MultiPoly::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        GaussianRational shown = c;
        if (first) {
            first = false;
        } else if (c.is_real() && c.re().is_negative()) {
            out << " - ";
            shown = -c;
        } else {
            out << " + ";
        }
        out << shown.str();
        for (int v = 0; v < n_; ++v) {
            if (e[v] == 0) continue;
            out << "*x" << (v + 1);
            if (e[v] > 1) out << "^" << e[v];
        }
    }
    return out.str();
}

namespace {

// One "coeff*x1^2*x3" chunk of the text grammar.
void parse_term(MultiPoly& acc, int nvars, std::string_view term, bool negate) {
    std::vector<std::string_view> pieces;
    std::size_t start = 0;
    while (start <= term.size()) {
        std::size_t star = term.find('*', start);
        if (star == std::string_view::npos) {
            pieces.push_back(term.substr(start));
            break;
        }
        pieces.push_back(term.substr(start, star - start));
        start = star + 1;
    }
    if (pieces.empty() || pieces[0].empty()) throw ParseError("empty term in '" + std::string(term) + "'");
    GaussianRational c = GaussianRational::parse(pieces[0]);
    Exponents e(nvars, 0);
    for (std::size_t p = 1; p < pieces.size(); ++p) {
        std::string_view f = pieces[p];
        if (f.size() < 2 || f[0] != 'x') throw ParseError("bad factor '" + std::string(f) + "'");
        std::size_t caret = f.find('^');
        int idx = 0, exp = 1;
        try {
            idx = std::stoi(std::string(f.substr(1, caret == std::string_view::npos ? std::string_view::npos
                                                                                    : caret - 1)));
            if (caret != std::string_view::npos) exp = std::stoi(std::string(f.substr(caret + 1)));
        } catch (const std::exception&) {
            throw ParseError("bad factor '" + std::string(f) + "'");
        }
        if (idx < 1 || idx > nvars) throw ParseError("variable index out of range in '" + std::string(f) + "'");
        if (exp < 1) throw ParseError("bad exponent in '" + std::string(f) + "'");
        e[idx - 1] += exp;
    }
    acc.add_term(e, negate ? -c : c);
}

}  // namespace

MultiPoly MultiPoly::parse(int nvars, std::string_view text) {
    MultiPoly acc(nvars);
    if (text == "0") return acc;
    bool negate = false;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t plus = text.find(" + ", pos);
        std::size_t minus = text.find(" - ", pos);
        std::size_t cut = std::min(plus, minus);
        parse_term(acc, nvars, text.substr(pos, cut == std::string_view::npos ? std::string_view::npos : cut - pos),
                   negate);
        if (cut == std::string_view::npos) break;
        negate = (cut == minus);
        pos = cut + 3;
    }
    return acc;
}

MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& d) {
    check_same_vars(f.nvars(), d.nvars());
    if (d.is_zero()) throw Error("division by zero polynomial");
    MultiPoly rem = f;
    MultiPoly q(f.nvars());
    const auto& [de, dc] = d.leading();
    Exponents t(f.nvars());
    while (!rem.is_zero()) {
        const auto& [re, rc] = rem.leading();
        for (int v = 0; v < f.nvars(); ++v) {
            t[v] = re[v] - de[v];
            if (t[v] < 0) throw DivisionNotExact();
        }
        GaussianRational tc = rc / dc;
        q.add_term(t, tc);
        rem -= d * MultiPoly::monomial(f.nvars(), t, tc);
    }
    return q;
}

MultiPoly vandermonde(int nvars) {
    MultiPoly r = MultiPoly::one(nvars);
    for (int i = 1; i <= nvars; ++i)
        for (int j = i + 1; j <= nvars; ++j)
            r = r * (MultiPoly::variable(nvars, i) - MultiPoly::variable(nvars, j));
    return r;
}

MultiPoly radius_squared(int nvars) {
    MultiPoly r(nvars);
    for (int i = 1; i <= nvars; ++i) {
        Exponents e(nvars, 0);
        e[i - 1] = 2;
        r.add_term(e, GaussianRational(1));
    }
    return r;
}

std::vector<std::vector<int>> partitions_into_parts(long m, int max_parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // Weakly decreasing parts, at most max_parts of them.
    auto rec = [&](auto&& self, long rest, int largest, int slots) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        if (slots == 0) return;
        for (int part = std::min<long>(largest, rest); part >= 1; --part) {
            cur.push_back(part);
            self(self, rest - part, part, slots - 1);
            cur.pop_back();
        }
    };
    rec(rec, m, m > 0 ? static_cast<int>(m) : 0, max_parts);
    return out;
}

MultiPoly monomial_symmetric(int nvars, const std::vector<int>& lambda) {
    if (static_cast<int>(lambda.size()) > nvars) throw Error("partition has more parts than variables");
    Exponents base(nvars, 0);
    for (std::size_t i = 0; i < lambda.size(); ++i) base[i] = lambda[i];
    std::sort(base.begin(), base.end());
    MultiPoly r(nvars);
    do {
        r.add_term(base, GaussianRational(1));
    } while (std::next_permutation(base.begin(), base.end()));
    return r;
}

// ---- RadialPoly ----

RadialPoly RadialPoly::from_poly(MultiPoly f, Rational base) {
    RadialPoly r(f.nvars(), std::move(base));
    if (!f.is_zero()) r.parts_.emplace(0, std::move(f));
    return r;
}

void RadialPoly::add_part(long offset, const MultiPoly& p) {
    if (p.is_zero()) return;
    check_same_vars(n_, p.nvars());
    auto [it, inserted] = parts_.emplace(offset, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) parts_.erase(it);
    }
}

RadialPoly RadialPoly::operator-() const {
    RadialPoly r(n_, base_);
    for (const auto& [j, p] : parts_) r.parts_.emplace(j, -p);
    return r;
}

namespace {

// Offsets are relative to each base; addition requires the bases to agree
// modulo integers, with offsets adjusted by the integer gap.
long base_gap(const Rational& a, const Rational& b) {
    Rational diff = b - a;
    if (!diff.is_integer()) throw Error("radial bases differ by a non-integer");
    return diff.to_long();
}

}  // namespace

RadialPoly& RadialPoly::operator+=(const RadialPoly& o) {
    check_same_vars(n_, o.n_);
    const long gap = base_gap(base_, o.base_);
    for (const auto& [j, p] : o.parts_) add_part(j + gap, p);
    return *this;
}

RadialPoly& RadialPoly::operator-=(const RadialPoly& o) {
    check_same_vars(n_, o.n_);
    const long gap = base_gap(base_, o.base_);
    for (const auto& [j, p] : o.parts_) add_part(j + gap, -p);
    return *this;
}

RadialPoly operator*(const RadialPoly& a, const RadialPoly& b) {
    check_same_vars(a.n_, b.n_);
    RadialPoly r(a.n_, a.base_ + b.base_);
    for (const auto& [ja, pa] : a.parts_)
        for (const auto& [jb, pb] : b.parts_) r.add_part(ja + jb, pa * pb);
    return r;
}

bool operator==(const RadialPoly& a, const RadialPoly& b) {
    if (a.n_ != b.n_) return false;
    if (a.parts_.empty() && b.parts_.empty()) return true;
    long gap;
    try {
        gap = base_gap(a.base_, b.base_);
    } catch (const Error&) {
        return false;
    }
    if (a.parts_.size() != b.parts_.size()) return false;
    for (const auto& [j, p] : b.parts_) {
        auto it = a.parts_.find(j + gap);
        if (it == a.parts_.end() || !(it->second == p)) return false;
    }
    return true;
}

RadialPoly RadialPoly::scaled(const GaussianRational& c) const {
    RadialPoly r(n_, base_);
    if (c.is_zero()) return r;
    for (const auto& [j, p] : parts_) r.parts_.emplace(j, p.scaled(c));
    return r;
}

RadialPoly RadialPoly::radial_shifted(const Rational& delta) const {
    RadialPoly r(n_, base_ + delta);
    r.parts_ = parts_;
    return r;
}

RadialPoly RadialPoly::transposed(int i, int j) const {
    RadialPoly r(n_, base_);
    for (const auto& [off, p] : parts_) r.parts_.emplace(off, p.transposed(i, j));
    return r;
}

MultiPoly RadialPoly::collect() const {
    MultiPoly out(n_);
    const MultiPoly r2 = radius_squared(n_);
    for (const auto& [j, p] : parts_) {
        Rational e = base_ + Rational(j);
        if (!e.is_integer() || e.is_negative())
            throw NotPolynomial("(r^2)^" + e.str() + " with a nonzero coefficient");
        out += p * r2.pow(e.to_long());
    }
    return out;
}

GaussianRational RadialPoly::eval(std::span<const GaussianRational> point) const {
    GaussianRational r2;
    for (const auto& x : point) r2 += x * x;
    GaussianRational acc;
    for (const auto& [j, p] : parts_) {
        Rational e = base_ + Rational(j);
        if (!e.is_integer()) throw Error("cannot evaluate fractional radial power at a rational point");
        long ee = e.to_long();
        GaussianRational w(1);
        for (long t = 0; t < std::labs(ee); ++t) w *= r2;
        if (ee < 0) w = w.inverse();
        acc += p.eval(point) * w;
    }
    return acc;
}

}  // namespace angcm
