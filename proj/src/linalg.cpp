#include "angcm/linalg.hpp"

#include <set>

#include "angcm/errors.hpp"

namespace angcm {

namespace {

struct GaussianInt {
    mpz_class re, im;
    bool is_zero() const { return re == 0 && im == 0; }
};

GaussianInt gmul(const GaussianInt& a, const GaussianInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianInt gsub(const GaussianInt& a, const GaussianInt& b) { return {a.re - b.re, a.im - b.im}; }

// Exact quotient in Z[i]; Bareiss guarantees divisibility by the previous pivot.
GaussianInt gdiv_exact(const GaussianInt& a, const GaussianInt& b) {
    mpz_class norm = b.re * b.re + b.im * b.im;
    GaussianInt num = gmul(a, {b.re, -b.im});
    GaussianInt q;
    mpz_divexact(q.re.get_mpz_t(), num.re.get_mpz_t(), norm.get_mpz_t());
    mpz_divexact(q.im.get_mpz_t(), num.im.get_mpz_t(), norm.get_mpz_t());
    return q;
}

std::vector<std::vector<GaussianInt>> cleared(const Matrix& m) {
    std::vector<std::vector<GaussianInt>> out;
    out.reserve(m.size());
    for (const auto& row : m) {
        mpz_class l = 1;
        for (const auto& c : row) {
            mpz_class d;
            mpz_lcm(d.get_mpz_t(), l.get_mpz_t(), c.re().den().get_mpz_t());
            mpz_lcm(l.get_mpz_t(), d.get_mpz_t(), c.im().den().get_mpz_t());
        }
        std::vector<GaussianInt> r;
        r.reserve(row.size());
        for (const auto& c : row)
            r.push_back({c.re().num() * (l / c.re().den()), c.im().num() * (l / c.im().den())});
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

long matrix_rank(const Matrix& m) {
    if (m.empty()) return 0;
    auto a = cleared(m);
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    GaussianInt prev{1, 0};
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[r], a[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = gdiv_exact(gsub(gmul(a[r][c], a[i][j]), gmul(a[i][c], a[r][j])), prev);
            a[i][c] = {0, 0};
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<long>(r);
}

std::vector<std::vector<GaussianRational>> nullspace(const Matrix& m) {
    if (m.empty()) return {};
    Matrix a = m;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::vector<long> pivot_col_of_row;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[r], a[pivot]);
        GaussianRational inv = a[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            GaussianRational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col_of_row.push_back(static_cast<long>(c));
        ++r;
    }
    std::set<long> pivot_cols(pivot_col_of_row.begin(), pivot_col_of_row.end());
    std::vector<std::vector<GaussianRational>> basis;
    for (std::size_t free_c = 0; free_c < cols; ++free_c) {
        if (pivot_cols.count(static_cast<long>(free_c))) continue;
        std::vector<GaussianRational> v(cols);
        v[free_c] = GaussianRational(1);
        for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i)
            v[pivot_col_of_row[i]] = -a[i][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix coefficient_matrix(const std::vector<MultiPoly>& polys) {
    std::set<Exponents, GrlexGreater> monomials;
    for (const auto& p : polys)
        for (const auto& [e, c] : p.terms()) monomials.insert(e);
    Matrix m;
    m.reserve(polys.size());
    for (const auto& p : polys) {
        std::vector<GaussianRational> row;
        row.reserve(monomials.size());
        for (const auto& e : monomials) row.push_back(p.coeff(e));
        m.push_back(std::move(row));
    }
    return m;
}

long rank_of(const std::vector<MultiPoly>& polys) {
    if (polys.empty()) return 0;
    return matrix_rank(coefficient_matrix(polys));
}

}  // namespace angcm
