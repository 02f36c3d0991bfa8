#include "cblagrange/linalg.hpp"

#include <algorithm>

#include "cblagrange/errors.hpp"

namespace cblagrange {

Eigen::VectorXd singular_values(const Matrix& m) {
  if (m.size() == 0) return Eigen::VectorXd();
  return Eigen::JacobiSVD<Matrix>(m).singularValues();
}

int numerical_rank(const Matrix& m, double rel_tol, double reference) {
  if (!m.allFinite()) throw NumericalError("rank of a matrix with non-finite entries");
  const auto sv = singular_values(m);
  if (sv.size() == 0) return 0;
  const double cutoff = rel_tol * std::max(sv(0), reference);
  if (cutoff == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++rank;
  }
  return rank;
}

Matrix nullspace_basis(const Matrix& m, double rel_tol) {
  const Eigen::Index cols = m.cols();
  if (m.rows() == 0) return Matrix::Identity(cols, cols);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = sv.size() > 0 ? rel_tol * sv(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++rank;
  }
  return svd.matrixV().rightCols(cols - rank).transpose();
}

RankNullspace rank_and_nullspace(const MatrixExt& m, double rel_tol) {
  const Eigen::Index cols = m.cols();
  if (m.rows() == 0) return {0, Matrix::Identity(cols, cols)};
  if (!m.allFinite()) throw NumericalError("rank of a matrix with non-finite entries");
  Eigen::JacobiSVD<MatrixExt> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const Real cutoff = sv.size() > 0 ? Real(rel_tol) * sv(0) : Real(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++rank;
  }
  return {rank, svd.matrixV().rightCols(cols - rank).transpose().cast<double>()};
}

Matrix coefficient_rows(const std::vector<MonomialPoly>& polys, bool normalize) {
  if (polys.empty()) return Matrix(0, 0);
  const auto width = static_cast<Eigen::Index>(polys.front().size());
  Matrix rows(static_cast<Eigen::Index>(polys.size()), width);
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (static_cast<Eigen::Index>(polys[i].size()) != width) {
      throw ValidationError("coefficient_rows: polynomials of different degree");
    }
    const auto c = polys[i].coeffs();
    for (Eigen::Index j = 0; j < width; ++j) rows(static_cast<Eigen::Index>(i), j) = c[static_cast<std::size_t>(j)];
    if (normalize) {
      const double norm = rows.row(static_cast<Eigen::Index>(i)).norm();
      if (norm > 0.0) rows.row(static_cast<Eigen::Index>(i)) /= norm;
    }
  }
  return rows;
}

}  // namespace cblagrange
