#pragma once

#include <vector>

#include "angcm/poly.hpp"
#include "angcm/rational.hpp"

namespace angcm {

using Matrix = std::vector<std::vector<GaussianRational>>;

// Exact rank by fraction-free (Bareiss) elimination over the Gaussian
// integers, after clearing denominators row by row.
long matrix_rank(const Matrix& m);

// Basis of the right nullspace, by exact reduced row echelon form.
std::vector<std::vector<GaussianRational>> nullspace(const Matrix& m);

// Coefficient matrix of a list of polynomials over the union of their
// monomials (one row per polynomial, graded-lex column order).
Matrix coefficient_matrix(const std::vector<MultiPoly>& polys);

long rank_of(const std::vector<MultiPoly>& polys);

}  // namespace angcm
