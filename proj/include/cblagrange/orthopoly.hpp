#pragma once

#include <span>
#include <vector>

namespace cblagrange {

/// Coefficients (a_k, b_k), 0 <= k < n, of the three-term recurrence
///
///   p_0(x) = 1,  p_1(x) = a_0 x + b_0,
///   p_{k+1}(x) + p_{k-1}(x) = (a_k x + b_k) p_k(x),  1 <= k <= n-1,
///
/// constrained by positivity (a_k > 0) and reflection
/// (a_k = a_{n-k}, b_k = b_{n-k} for 1 <= k <= n-1).
///
/// Reflection holds exactly in every constructed value: the checked
/// constructor symmetrizes mirrored pairs after validating them, and
/// from_half() stores only the free half and mirrors it.
///
/// n = 0 is the empty sequence (p_0 only). It is the coefficient set of a
/// single-node axis.
class RecurrenceCoeffs {
 public:
  RecurrenceCoeffs() = default;

  /// Validates positivity, finiteness and reflection. Mirrored pairs must
  /// agree to `reflection_tol` relative; they are then averaged.
  RecurrenceCoeffs(std::vector<double> a, std::vector<double> b,
                   double reflection_tol = 1e-12);

  /// Builds from the free entries k = 0..floor(n/2) and mirrors the rest.
  static RecurrenceCoeffs from_half(std::span<const double> a_half,
                                    std::span<const double> b_half, int n);

  int n() const { return static_cast<int>(a_.size()); }
  std::span<const double> a() const { return a_; }
  std::span<const double> b() const { return b_; }
  double a(int k) const { return a_[static_cast<std::size_t>(k)]; }
  double b(int k) const { return b_[static_cast<std::size_t>(k)]; }

  /// Leading coefficient of p_k, prod_{j<k} a_j.
  double leading(int k) const;

  friend bool operator==(const RecurrenceCoeffs&, const RecurrenceCoeffs&) = default;

 private:
  std::vector<double> a_;
  std::vector<double> b_;
};

/// Extended precision for node computation and kernel sums. The Lagrange
/// basis is very sensitive to node positions, so nodes are kept beyond
/// double internally.
using Real = long double;

/// p_0(x), ..., p_upto(x). values[0] is always 1.
using PolySequenceEval = std::vector<double>;

PolySequenceEval eval_sequence(const RecurrenceCoeffs& coeffs, double x, int upto);
std::vector<Real> eval_sequence_ext(const RecurrenceCoeffs& coeffs, Real x, int upto);

/// Which polynomial combination combo_zeros() should solve.
enum class ComboKind {
  kP,              // p_m
  kPMinusPrev,     // p_m - p_{m-1}
  kPPlusPrev,      // p_m + p_{m-1}
  kNextMinusPrev,  // p_{m+1} - p_{m-1}
};

struct ComboSpec {
  ComboKind kind;
  int m;
};

/// Value of the designated combination at x.
double eval_combo(const RecurrenceCoeffs& coeffs, ComboSpec spec, double x);

/// Zeros of p_m, strictly decreasing. Eigenvalues of the symmetric
/// tridiagonal (Jacobi) matrix of the monic recurrence.
std::vector<double> zeros_of(const RecurrenceCoeffs& coeffs, int m);
std::vector<Real> zeros_of_ext(const RecurrenceCoeffs& coeffs, int m);

/// All real zeros of the designated combination, strictly decreasing, each
/// localized to adjacent extended-precision values (well below 1e-13 absolute).
/// Brackets come from the interlacing of the zeros of p_m and p_{m-1} (or of
/// p_m alone for p_{m+1} - p_{m-1}); unbounded end intervals are expanded
/// outward by step doubling. Throws NumericalError if a bracket shows no
/// sign change.
std::vector<double> combo_zeros(const RecurrenceCoeffs& coeffs, ComboSpec spec);
std::vector<Real> combo_zeros_ext(const RecurrenceCoeffs& coeffs, ComboSpec spec);

/// Monomial coefficients (ascending powers) of p_0..p_upto.
std::vector<std::vector<double>> monomial_expansion(const RecurrenceCoeffs& coeffs,
                                                    int upto);

/// Coefficients of the same polynomial sequence in the variable t = alpha*x + beta,
/// i.e. the result r satisfies r.p_k(alpha*x + beta) == p_k(x). alpha > 0.
RecurrenceCoeffs affine_transform(const RecurrenceCoeffs& coeffs, double alpha,
                                  double beta);

}  // namespace cblagrange
