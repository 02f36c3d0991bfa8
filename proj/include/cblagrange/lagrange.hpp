#pragma once

#include <memory>
#include <vector>

#include "cblagrange/checkerboard.hpp"
#include "cblagrange/monomial.hpp"

namespace cblagrange {

struct Point {
  double x;
  double y;
};

/// p_0..p_n at x and q_0..q_{n+sigma} at y for one grid.
struct AxisValues {
  std::vector<Real> p;
  std::vector<Real> q;

  static AxisValues at(const GridInstance& grid, Point point);
  /// At grid node (x_r, y_u), using the extended-precision node values.
  static AxisValues at_node(const GridInstance& grid, int r, int u);
};

/// c_k of the y-recurrence for 0 <= k <= n + sigma. The top index k = n + sigma
/// lies one past the stored coefficients and takes the reflected value c_0;
/// it is only reached when sigma = 0.
double y_coeff(const GridInstance& grid, int k);

/// K_d(P; A) = sum_{j=0}^{n-1} a_j p_j(x) p_j(x_s) sum_{k=0}^{n-j+d} c_k q_k(y) q_k(y_v),
/// evaluated as the literal double sum. d ranges over [-1, max(sigma-1, floor(sigma/2))].
double kernel_K(const GridInstance& grid, int delta_param, Point point, Point anchor);

/// J(P; A) = a_0 p_n(x) p_n(x_s) [sum_{k<=sigma-delta-1} + sum_{k<=delta}] c_k q_k(y) q_k(y_v),
/// delta = floor(sigma/2), empty sums are zero.
double boundary_J(const GridInstance& grid, Point point, Point anchor);

/// G = K_delta + K_{sigma-delta-1} + J, computed from precomputed axis values
/// with prefix sums over k. O(n + sigma).
double reproducing_G(const GridInstance& grid, const AxisValues& at_point,
                     const AxisValues& at_anchor);
double reproducing_G(const GridInstance& grid, Point point, Point anchor);

/// G(.; anchor) expanded over monomials of total degree <= n + delta.
MonomialPoly expand_G(const GridInstance& grid, Point anchor);

/// One Lagrange basis element L(.; anchor) = G(.; anchor) / G(anchor; anchor).
/// Holds the grid, the anchor and its axis values; evaluation recomputes G.
/// The anchor is located by its (r, u) indices; its x, y fields are not read.
class BasisFunction {
 public:
  BasisFunction(std::shared_ptr<const GridInstance> grid, GridPoint anchor);

  const GridInstance& grid() const { return *grid_; }
  const GridPoint& anchor() const { return anchor_; }
  int delta() const { return grid_->delta(); }
  double normalizer() const { return static_cast<double>(normalizer_); }

  double G(double x, double y) const;
  double G(const AxisValues& at_point) const;
  double operator()(double x, double y) const;
  double operator()(const AxisValues& at_point) const;

  /// Monomial expansion of L.
  MonomialPoly expand() const;

 private:
  std::shared_ptr<const GridInstance> grid_;
  GridPoint anchor_;
  AxisValues anchor_values_;
  Real normalizer_;
};

BasisFunction build_basis(std::shared_ptr<const GridInstance> grid, GridPoint anchor);

/// Basis elements for every point of `set`, in set order.
std::vector<BasisFunction> build_bases(const std::shared_ptr<const GridInstance>& grid,
                                       const CheckerboardSet& set);

double eval_L(const BasisFunction& basis, Point point);

/// max over i, j of |L_i(node_j) - [i == j]|, nodes taken by (r, u).
double max_delta_error(const std::vector<BasisFunction>& bases, const CheckerboardSet& set);

}  // namespace cblagrange
