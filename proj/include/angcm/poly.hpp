#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "angcm/rational.hpp"

namespace angcm {

using Exponents = std::vector<int32_t>;

inline long exponents_degree(const Exponents& e) {
    long d = 0;
    for (int32_t x : e) d += x;
    return d;
}

// Graded lexicographic order with x1 > x2 > ... > xn, largest term first.
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const {
        long da = exponents_degree(a), db = exponents_degree(b);
        if (da != db) return da > db;
        return a > b;  // lexicographic on exponent vectors, x1 first
    }
};

// Multivariate polynomial in x1..xn with exact Gaussian-rational coefficients.
// No zero coefficients are ever stored; term iteration is graded-lex descending.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, GaussianRational, GrlexGreater>;

    explicit MultiPoly(int nvars) : n_(nvars) {}

    static MultiPoly constant(int nvars, GaussianRational c);
    static MultiPoly one(int nvars) { return constant(nvars, GaussianRational(1)); }
    static MultiPoly variable(int nvars, int i);  // 1-based index
    static MultiPoly monomial(int nvars, Exponents e, GaussianRational c);

    int nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Exponents& e, const GaussianRational& c);

    GaussianRational coeff(const Exponents& e) const;
    GaussianRational constant_term() const { return coeff(Exponents(n_, 0)); }
    // Leading (graded-lex largest) term; polynomial must be nonzero.
    const std::pair<const Exponents, GaussianRational>& leading() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    MultiPoly scaled(const GaussianRational& c) const;
    MultiPoly pow(long e) const;

    MultiPoly derivative(int i) const;  // d/dx_i, 1-based

    // Variables x_i and x_j swapped in every exponent vector.
    MultiPoly transposed(int i, int j) const;
    // x_i -> sign_i * x_{perm[i]} for a signed permutation (1-based perm).
    MultiPoly substituted_signed(const std::vector<int>& perm, const std::vector<int>& sign) const;
    // x_i -> sum_j M[i][j] x_j for a general rational matrix.
    MultiPoly substituted_linear(const std::vector<std::vector<Rational>>& m) const;
    // x_n -> -(x_1 + ... + x_{n-1}); result lives in n-1 variables.
    MultiPoly restricted_to_hyperplane() const;

    GaussianRational eval(std::span<const GaussianRational> point) const;

    long total_degree() const;  // -1 for the zero polynomial
    bool is_homogeneous() const;
    // Invariance under all transpositions (adjacent swaps generate S_n).
    bool is_symmetric() const;
    bool is_real() const;

    // Divides leading coefficient out; zero stays zero.
    MultiPoly monic() const;

    std::string to_text() const;
    static MultiPoly parse(int nvars, std::string_view text);

private:
    int n_;
    TermMap terms_;
};

// Exact quotient f/d; throws DivisionNotExact on a nonzero remainder.
MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& d);

// Product of (x^i - x^j) over i < j.
MultiPoly vandermonde(int nvars);
// x1^2 + ... + xn^2.
MultiPoly radius_squared(int nvars);
// Monomial symmetric polynomial for a partition (sum over the S_n orbit).
MultiPoly monomial_symmetric(int nvars, const std::vector<int>& lambda);
// All partitions of m into at most nvars parts, i.e. a degree-m symmetric basis.
std::vector<std::vector<int>> partitions_into_parts(long m, int max_parts);

// Finite sum of P_j(x) * (r^2)^(a+j): the function space the Dunkl operators
// act on before everything is resolved back into a polynomial.
class RadialPoly {
public:
    RadialPoly(int nvars, Rational base) : n_(nvars), base_(std::move(base)) {}

    // f * (r^2)^base.
    static RadialPoly from_poly(MultiPoly f, Rational base = Rational(0));

    int nvars() const { return n_; }
    const Rational& base() const { return base_; }
    const std::map<long, MultiPoly>& parts() const { return parts_; }
    bool is_zero() const { return parts_.empty(); }

    void add_part(long offset, const MultiPoly& p);

    RadialPoly operator-() const;
    RadialPoly& operator+=(const RadialPoly& o);
    RadialPoly& operator-=(const RadialPoly& o);
    friend RadialPoly operator+(RadialPoly a, const RadialPoly& b) { return a += b; }
    friend RadialPoly operator-(RadialPoly a, const RadialPoly& b) { return a -= b; }
    // Radial exponents add: bases sum, offsets convolve.
    friend RadialPoly operator*(const RadialPoly& a, const RadialPoly& b);
    friend bool operator==(const RadialPoly& a, const RadialPoly& b);

    RadialPoly scaled(const GaussianRational& c) const;
    // Multiply by (r^2)^delta (integer delta shifts offsets, fractional moves the base).
    RadialPoly radial_shifted(const Rational& delta) const;
    RadialPoly transposed(int i, int j) const;

    // Expand every (r^2)^(a+j) power; requires all resolved exponents to be
    // nonnegative integers, otherwise throws NotPolynomial.
    MultiPoly collect() const;

    GaussianRational eval(std::span<const GaussianRational> point) const;

private:
    int n_;
    Rational base_;
    std::map<long, MultiPoly> parts_;  // offset -> nonzero coefficient polynomial
};

}  // namespace angcm
