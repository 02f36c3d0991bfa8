#include "cblagrange/checkerboard.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cblagrange/errors.hpp"

namespace cblagrange {

namespace {

// Nodes recomputed from the coefficients in extended precision, after
// checking the supplied ones against them.
std::vector<Real> canonical_axis(const char* name, const NodeSequence& nodes,
                                 const RecurrenceCoeffs& coeffs) {
  if (coeffs.n() != nodes.n()) {
    throw ValidationError(std::string(name) + ": coefficient length " +
                          std::to_string(coeffs.n()) + " does not match " +
                          std::to_string(nodes.size()) + " nodes");
  }
  if (coeffs.n() == 0) return {Real(nodes[0])};
  auto computed = nodes_from_coeffs_ext(coeffs);
  const double tol = 1e-8 * std::max(1.0, nodes.span_width());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (std::abs(static_cast<double>(computed[i]) - nodes[i]) > tol) {
      throw ValidationError(std::string(name) + ": nodes inconsistent with coefficients at index " +
                            std::to_string(i));
    }
  }
  return computed;
}

NodeSequence rounded(const std::vector<Real>& v) {
  return NodeSequence(std::vector<double>(v.begin(), v.end()));
}

}  // namespace

GridInstance::GridInstance(int n, int sigma, NodeSequence xnodes, NodeSequence ynodes,
                           RecurrenceCoeffs xcoeffs, RecurrenceCoeffs ycoeffs)
    : n_(n),
      sigma_(sigma),
      xnodes_(std::move(xnodes)),
      ynodes_(std::move(ynodes)),
      xcoeffs_(std::move(xcoeffs)),
      ycoeffs_(std::move(ycoeffs)) {
  if (n_ < 0 || sigma_ < 0) throw ValidationError("n and sigma must be nonnegative");
  if (xnodes_.n() != n_ || ynodes_.n() != n_ + sigma_) {
    throw ValidationError("grid expects " + std::to_string(n_ + 1) + " x-nodes and " +
                          std::to_string(n_ + sigma_ + 1) + " y-nodes");
  }
  xnodes_ext_ = canonical_axis("x-axis", xnodes_, xcoeffs_);
  ynodes_ext_ = canonical_axis("y-axis", ynodes_, ycoeffs_);
  xnodes_ = rounded(xnodes_ext_);
  ynodes_ = rounded(ynodes_ext_);
}

GridInstance GridInstance::from_coeffs(RecurrenceCoeffs xcoeffs, RecurrenceCoeffs ycoeffs) {
  const int n = xcoeffs.n();
  const int sigma = ycoeffs.n() - n;
  if (n < 1 || sigma < 0) {
    throw ValidationError("from_coeffs: need 1 <= len(x coeffs) <= len(y coeffs)");
  }
  auto xn = nodes_from_coeffs(xcoeffs);
  auto yn = nodes_from_coeffs(ycoeffs);
  return GridInstance(n, sigma, std::move(xn), std::move(yn), std::move(xcoeffs),
                      std::move(ycoeffs));
}

GridInstance GridInstance::from_nodes(NodeSequence xnodes, NodeSequence ynodes) {
  const int n = xnodes.n();
  const int sigma = ynodes.n() - n;
  if (sigma < 0) throw ValidationError("from_nodes: y-axis shorter than x-axis");
  auto xc = coeffs_from_nodes(xnodes);
  auto yc = coeffs_from_nodes(ynodes);
  return GridInstance(n, sigma, std::move(xnodes), std::move(ynodes), std::move(xc),
                      std::move(yc));
}

CheckerboardSet build_checkerboard(const GridInstance& grid, int tau) {
  if (tau != 0 && tau != 1) throw ValidationError("tau must be 0 or 1");
  CheckerboardSet set{tau, {}};
  set.points.reserve(static_cast<std::size_t>(count_nodes(grid.n(), grid.sigma(), tau)));
  for (int r = 0; r <= grid.n(); ++r) {
    for (int u = 0; u <= grid.n() + grid.sigma(); ++u) {
      if ((r + u) % 2 == tau) {
        set.points.push_back({r, u, grid.xnodes()[static_cast<std::size_t>(r)],
                              grid.ynodes()[static_cast<std::size_t>(u)]});
      }
    }
  }
  return set;
}

void require_on_grid(const GridInstance& grid, const CheckerboardSet& set) {
  const double tx = 1e-8 * std::max(1.0, grid.xnodes().span_width());
  const double ty = 1e-8 * std::max(1.0, grid.ynodes().span_width());
  for (const auto& pt : set.points) {
    if (pt.r < 0 || pt.r > grid.n() || pt.u < 0 || pt.u > grid.n() + grid.sigma()) {
      throw ValidationError("point (" + std::to_string(pt.r) + ", " + std::to_string(pt.u) +
                            ") is outside the grid index range");
    }
    if ((pt.r + pt.u) % 2 != set.tau) {
      throw ValidationError("point parity does not match tau");
    }
    if (std::abs(pt.x - grid.xnodes()[static_cast<std::size_t>(pt.r)]) > tx ||
        std::abs(pt.y - grid.ynodes()[static_cast<std::size_t>(pt.u)]) > ty) {
      throw ValidationError("point (" + std::to_string(pt.r) + ", " + std::to_string(pt.u) +
                            ") does not lie on its grid node");
    }
  }
}

std::int64_t count_nodes(std::int64_t n, std::int64_t sigma, int tau) {
  if (n < 0 || sigma < 0) throw ValidationError("count_nodes: negative size");
  if (tau != 0 && tau != 1) throw ValidationError("tau must be 0 or 1");
  const std::int64_t total = (n + 1) * (n + sigma + 1);
  if (n % 2 == 0 && sigma % 2 == 0) return (total + 1) / 2 - tau;
  return total / 2;
}

std::int64_t poly_space_dim(std::int64_t d) { return (d + 1) * (d + 2) / 2; }

}  // namespace cblagrange
