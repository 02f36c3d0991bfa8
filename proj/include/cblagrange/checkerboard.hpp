#pragma once

#include <cstdint>
#include <vector>

#include "cblagrange/nodemap.hpp"
#include "cblagrange/orthopoly.hpp"

namespace cblagrange {

/// Rectangular grid data: x_0 > ... > x_n, y_0 > ... > y_{n+sigma}, and the
/// recurrence coefficients generating each axis.
class GridInstance {
 public:
  /// Checks lengths and that nodes_from_coeffs reproduces each axis to
  /// 1e-8 * max(1, span). The coefficients are authoritative: the stored
  /// nodes are the recomputed ones, not the supplied ones. Axes with a single
  /// node are accepted with empty coefficients.
  GridInstance(int n, int sigma, NodeSequence xnodes, NodeSequence ynodes,
               RecurrenceCoeffs xcoeffs, RecurrenceCoeffs ycoeffs);

  /// Nodes computed from the coefficients.
  static GridInstance from_coeffs(RecurrenceCoeffs xcoeffs, RecurrenceCoeffs ycoeffs);

  /// Coefficients recovered with coeffs_from_nodes (a_0 = 1 for even lengths).
  static GridInstance from_nodes(NodeSequence xnodes, NodeSequence ynodes);

  int n() const { return n_; }
  int sigma() const { return sigma_; }
  /// floor(sigma / 2)
  int delta() const { return sigma_ / 2; }
  const NodeSequence& xnodes() const { return xnodes_; }
  const NodeSequence& ynodes() const { return ynodes_; }
  /// Nodes before rounding to double.
  const std::vector<Real>& xnodes_ext() const { return xnodes_ext_; }
  const std::vector<Real>& ynodes_ext() const { return ynodes_ext_; }
  const RecurrenceCoeffs& xcoeffs() const { return xcoeffs_; }
  const RecurrenceCoeffs& ycoeffs() const { return ycoeffs_; }

 private:
  int n_;
  int sigma_;
  NodeSequence xnodes_;
  NodeSequence ynodes_;
  RecurrenceCoeffs xcoeffs_;
  RecurrenceCoeffs ycoeffs_;
  std::vector<Real> xnodes_ext_;
  std::vector<Real> ynodes_ext_;
};

struct GridPoint {
  int r;
  int u;
  double x;
  double y;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/// S_tau: grid points with (r + u) % 2 == tau, row-major in (r, u).
struct CheckerboardSet {
  int tau = 0;
  std::vector<GridPoint> points;

  std::size_t count() const { return points.size(); }
};

CheckerboardSet build_checkerboard(const GridInstance& grid, int tau);

/// Every point has in-range indices of parity tau and coordinates within
/// 1e-8 * max(1, span) of its grid node. Repeated points are allowed.
void require_on_grid(const GridInstance& grid, const CheckerboardSet& set);

/// N_tau: ((n+1)(n+sigma+1) + 1)/2 - tau when n and sigma are both even,
/// (n+1)(n+sigma+1)/2 otherwise.
std::int64_t count_nodes(std::int64_t n, std::int64_t sigma, int tau);

/// (d+1)(d+2)/2
std::int64_t poly_space_dim(std::int64_t d);

}  // namespace cblagrange
