#include "cblagrange/verify.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "cblagrange/errors.hpp"

namespace cblagrange {

namespace {

struct AxisMap {
  double alpha;
  double beta;

  static AxisMap onto_unit(const NodeSequence& nodes) {
    const double span = nodes.span_width();
    if (span == 0.0) return {1.0, -nodes[0]};
    return {2.0 / span, -(nodes[0] + nodes[nodes.size() - 1]) / span};
  }

  double operator()(double x) const { return alpha * x + beta; }

  NodeSequence apply(const NodeSequence& nodes) const {
    std::vector<double> out(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) out[i] = (*this)(nodes[i]);
    return NodeSequence(std::move(out));
  }

  RecurrenceCoeffs apply(const RecurrenceCoeffs& c) const {
    return c.n() == 0 ? c : affine_transform(c, alpha, beta);
  }
};

}  // namespace

Matrix vandermonde(const CheckerboardSet& set, int d) {
  if (d < 0) throw ValidationError("vandermonde: negative degree");
  const auto exps = monomial_exponents(d);
  Matrix v(static_cast<Eigen::Index>(set.count()), static_cast<Eigen::Index>(exps.size()));
  for (std::size_t i = 0; i < set.count(); ++i) {
    const auto& pt = set.points[i];
    for (std::size_t c = 0; c < exps.size(); ++c) {
      v(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) =
          std::pow(pt.x, exps[c].first) * std::pow(pt.y, exps[c].second);
    }
  }
  return v;
}

MatrixExt vandermonde_ext(const GridInstance& grid, const CheckerboardSet& set, int d) {
  if (d < 0) throw ValidationError("vandermonde: negative degree");
  const auto exps = monomial_exponents(d);
  MatrixExt v(static_cast<Eigen::Index>(set.count()), static_cast<Eigen::Index>(exps.size()));
  for (std::size_t i = 0; i < set.count(); ++i) {
    const auto& pt = set.points[i];
    const bool on_grid = pt.r >= 0 && pt.r <= grid.n() && pt.u >= 0 && pt.u <= grid.n() + grid.sigma();
    const Real x = on_grid ? grid.xnodes_ext()[static_cast<std::size_t>(pt.r)] : Real(pt.x);
    const Real y = on_grid ? grid.ynodes_ext()[static_cast<std::size_t>(pt.u)] : Real(pt.y);
    for (std::size_t c = 0; c < exps.size(); ++c) {
      v(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) =
          std::pow(x, exps[c].first) * std::pow(y, exps[c].second);
    }
  }
  return v;
}

int rank(const Matrix& m) { return numerical_rank(m); }

ScaledInstance scale_to_unit_box(const GridInstance& grid, const CheckerboardSet& set) {
  const auto mx = AxisMap::onto_unit(grid.xnodes());
  const auto my = AxisMap::onto_unit(grid.ynodes());
  GridInstance scaled(grid.n(), grid.sigma(), mx.apply(grid.xnodes()), my.apply(grid.ynodes()),
                      mx.apply(grid.xcoeffs()), my.apply(grid.ycoeffs()));
  // Coordinates come from the scaled grid so the points sit exactly on its
  // nodes; a point off the grid index range keeps its mapped coordinates.
  CheckerboardSet points{set.tau, set.points};
  for (auto& pt : points.points) {
    const bool on_grid = pt.r >= 0 && pt.r <= grid.n() && pt.u >= 0 && pt.u <= grid.n() + grid.sigma();
    pt.x = on_grid ? scaled.xnodes()[static_cast<std::size_t>(pt.r)] : mx(pt.x);
    pt.y = on_grid ? scaled.ynodes()[static_cast<std::size_t>(pt.u)] : my(pt.y);
  }
  return {std::move(scaled), std::move(points)};
}

namespace {

Matrix oracle_solve(const MatrixExt& v) {
  const auto n = v.rows();
  Eigen::JacobiSVD<MatrixExt> svd(v, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const Real cutoff = sv.size() > 0 ? Real(kRankTol) * sv(0) : Real(0);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++rank;
  }
  if (rank < n) throw NumericalError("oracle_lagrange: Vandermonde matrix is rank deficient");
  // Minimum-norm solution of V L = I: V^+ = W S^{-1} U^T.
  const MatrixExt sol = svd.matrixV().leftCols(rank) *
                        sv.head(rank).cwiseInverse().asDiagonal() *
                        svd.matrixU().leftCols(rank).transpose();
  return sol.cast<double>();
}

}  // namespace

const char* to_string(NullspaceStatus s) {
  switch (s) {
    case NullspaceStatus::kOk:
      return "OK";
    case NullspaceStatus::kDimensionMismatch:
      return "DIMENSION_MISMATCH";
    case NullspaceStatus::kSpanMismatch:
      return "SPAN_MISMATCH";
  }
  return "?";
}

namespace {

NullspaceReport compare_nullspace(const RankNullspace& split, const QuotientBasis& q) {
  const Matrix& null_rows = split.null_rows;
  NullspaceReport report;
  report.nullspace_dim = static_cast<int>(null_rows.rows());
  report.M = q.M;
  const Matrix q_rows = coefficient_rows(q.elements, true);
  Matrix stacked(null_rows.rows() + q_rows.rows(), null_rows.cols());
  if (null_rows.rows() > 0) stacked.topRows(null_rows.rows()) = null_rows;
  if (q_rows.rows() > 0) stacked.bottomRows(q_rows.rows()) = q_rows;
  report.combined_rank = numerical_rank(stacked, kRankTol, 1.0);
  if (report.nullspace_dim != report.M) {
    report.status = NullspaceStatus::kDimensionMismatch;
  } else if (report.combined_rank > report.M) {
    report.status = NullspaceStatus::kSpanMismatch;
  }
  return report;
}

}  // namespace

NullspaceReport nullspace_equals_Q(const GridInstance& grid, const CheckerboardSet& set) {
  const auto inst = scale_to_unit_box(grid, set);
  const int d = inst.grid.n() + inst.grid.delta();
  return compare_nullspace(rank_and_nullspace(vandermonde_ext(inst.grid, inst.set, d)),
                           build_Q(inst.grid, set.tau));
}

Matrix oracle_lagrange(const CheckerboardSet& set, int d) {
  MatrixExt v = vandermonde(set, d).cast<Real>();
  return oracle_solve(v);
}

Matrix oracle_lagrange(const GridInstance& grid, const CheckerboardSet& set, int d) {
  return oracle_solve(vandermonde_ext(grid, set, d));
}

bool difference_in_span(const Matrix& oracle, const std::vector<BasisFunction>& bases,
                        const QuotientBasis& q) {
  if (static_cast<std::size_t>(oracle.cols()) != bases.size()) {
    throw ValidationError("difference_in_span: oracle and basis sizes differ");
  }
  Matrix diff(oracle.cols(), oracle.rows());
  double scale = 0.0;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const auto expanded = bases[i].expand();
    const auto c = expanded.coeffs();
    if (static_cast<Eigen::Index>(c.size()) != oracle.rows()) {
      throw ValidationError("difference_in_span: degree mismatch");
    }
    const auto row = static_cast<Eigen::Index>(i);
    double norm = 0.0;
    for (Eigen::Index j = 0; j < oracle.rows(); ++j) {
      diff(row, j) = oracle(j, row) - c[static_cast<std::size_t>(j)];
      norm += c[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(j)];
    }
    scale = std::max({scale, std::sqrt(norm), oracle.col(row).norm()});
  }
  if (scale > 0.0) diff /= scale;
  const Matrix q_rows = coefficient_rows(q.elements, true);
  Matrix stacked(q_rows.rows() + diff.rows(), diff.cols());
  if (q_rows.rows() > 0) stacked.topRows(q_rows.rows()) = q_rows;
  stacked.bottomRows(diff.rows()) = diff;
  return numerical_rank(stacked, kRankTol, 1.0) == q.M;
}

bool VerifyReport::passed() const {
  return rank_ok() && nullspace_dim == M && span_equal && delta_ok() &&
         (!oracle_checked || oracle_in_span);
}

VerifyReport verify_instance(const GridInstance& grid, const CheckerboardSet& set,
                             const VerifyOptions& options) {
  require_on_grid(grid, set);
  const auto inst = scale_to_unit_box(grid, set);
  const int d = grid.n() + grid.delta();
  const auto q = build_Q(inst.grid, set.tau);

  VerifyReport report;
  report.N_tau = static_cast<int>(set.count());
  report.M = q.M;
  const auto split = rank_and_nullspace(vandermonde_ext(inst.grid, inst.set, d));
  report.rank = split.rank;

  const auto ns = compare_nullspace(split, q);
  report.nullspace_dim = ns.nullspace_dim;
  report.combined_rank = ns.combined_rank;
  report.span_equal = ns.ok();

  const auto shared = std::make_shared<const GridInstance>(grid);
  report.max_delta_error = max_delta_error(build_bases(shared, set), set);

  if (options.check_oracle) {
    report.oracle_checked = true;
    try {
      const auto scaled_grid = std::make_shared<const GridInstance>(inst.grid);
      report.oracle_in_span =
          difference_in_span(oracle_lagrange(inst.grid, inst.set, d), build_bases(scaled_grid, inst.set), q);
    } catch (const NumericalError&) {
      report.oracle_in_span = false;
    }
  }
  return report;
}

}  // namespace cblagrange
