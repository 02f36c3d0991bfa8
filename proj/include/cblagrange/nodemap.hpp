#pragma once

#include <span>
#include <vector>

#include "cblagrange/orthopoly.hpp"

namespace cblagrange {

/// Strictly decreasing abscissas x_0 > x_1 > ... > x_n.
class NodeSequence {
 public:
  NodeSequence() = default;

  /// Rejects non-finite values and consecutive gaps at or below
  /// 1e-12 * (x_0 - x_n).
  explicit NodeSequence(std::vector<double> nodes);

  std::size_t size() const { return nodes_.size(); }
  int n() const { return static_cast<int>(nodes_.size()) - 1; }
  double operator[](std::size_t i) const { return nodes_[i]; }
  std::span<const double> values() const { return nodes_; }
  double span_width() const { return nodes_.empty() ? 0.0 : nodes_.front() - nodes_.back(); }

 private:
  std::vector<double> nodes_;
};

/// Coefficients -> nodes. For n = 2m-1 the nodes are the merged zeros of
/// p_m - p_{m-1} (even indices) and p_m + p_{m-1} (odd indices); for n = 2m
/// the odd-indexed nodes are the zeros of p_m and the even-indexed nodes the
/// zeros of p_{m+1} - p_{m-1}. The alternation condition is checked on the
/// result to 1e-9 relative. Requires n >= 1.
NodeSequence nodes_from_coeffs(const RecurrenceCoeffs& coeffs);
/// Same nodes in extended precision, before rounding to double.
std::vector<Real> nodes_from_coeffs_ext(const RecurrenceCoeffs& coeffs);

/// max over j, k of |p_{n-k}(x_j) - (-1)^j p_k(x_j)|, each term relative to
/// max(1, max_k |p_k(x_j)|, span * max_k |p_k'(x_j)|). The derivative term
/// accounts for the sensitivity of the residual to rounding in x_j.
double alternation_error(const RecurrenceCoeffs& coeffs, std::span<const double> nodes);

struct InverseMapOptions {
  int max_iterations = 100;
  int max_halvings = 20;
  /// Relative (to node span) residual accepted as converged.
  double accept_tol = 1e-10;
  /// a_0 imposed for even n (selects one member of the gamma family).
  double even_a0 = 1.0;
};

/// Nodes -> coefficients by damped Newton on nodes_from_coeffs(c) - X over the
/// free coefficients (k <= floor(n/2); a_0 fixed for even n). Falls back to
/// continuation from the affinely mapped Chebyshev-extrema family when the
/// direct solve stalls. Throws NumericalError on non-convergence.
RecurrenceCoeffs coeffs_from_nodes(const NodeSequence& nodes,
                                   const InverseMapOptions& options = {});

/// The reference family below mapped affinely so its nodes span [x_n, x_0].
/// Starting point of coeffs_from_nodes.
RecurrenceCoeffs reference_coeffs(const NodeSequence& nodes);

/// Even n only: a_k, b_k scaled by gamma for even k and by 1/gamma for odd k.
/// The node sequence is unchanged.
RecurrenceCoeffs gamma_rescale(const RecurrenceCoeffs& coeffs, double gamma);

/// Reference family a = (1, 2, ..., 2), b = 0 (Chebyshev T_k); its nodes are
/// cos(r*pi/n).
RecurrenceCoeffs chebyshev_like_coeffs(int n);

}  // namespace cblagrange
