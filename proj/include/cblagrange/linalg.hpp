#pragma once

#include <vector>

#include <Eigen/Dense>

#include "cblagrange/monomial.hpp"
#include "cblagrange/orthopoly.hpp"

namespace cblagrange {

using Matrix = Eigen::MatrixXd;
using MatrixExt = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

/// Relative singular-value cutoff used for every rank decision.
inline constexpr double kRankTol = 1e-10;

Eigen::VectorXd singular_values(const Matrix& m);

/// Number of singular values > rel_tol * max(largest singular value, reference).
/// A positive `reference` pins the scale for matrices whose rows are known to
/// have unit size, so that a matrix of pure rounding noise has rank 0.
int numerical_rank(const Matrix& m, double rel_tol = kRankTol, double reference = 0.0);

/// Orthonormal rows spanning the null space of m (right singular vectors
/// whose singular values fall below the cutoff, plus the columns m cannot
/// reach when it has fewer rows than columns).
Matrix nullspace_basis(const Matrix& m, double rel_tol = kRankTol);

/// Rank and null space from one extended-precision SVD. Ill-conditioned
/// Vandermonde matrices place their null space only to about
/// eps * cond, so the extra precision matters for span comparisons.
struct RankNullspace {
  int rank = 0;
  Matrix null_rows;
};
RankNullspace rank_and_nullspace(const MatrixExt& m, double rel_tol = kRankTol);

/// One row per polynomial; all polynomials must share a degree.
/// Rows are scaled to unit Euclidean norm when `normalize` is set.
Matrix coefficient_rows(const std::vector<MonomialPoly>& polys, bool normalize);

}  // namespace cblagrange
