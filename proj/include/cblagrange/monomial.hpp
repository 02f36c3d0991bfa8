#pragma once

#include <span>
#include <vector>

namespace cblagrange {

/// Dense bivariate polynomial of total degree <= d over monomials x^j y^k,
/// ordered 1, x, ..., x^d, y, xy, ..., x^{d-1} y, ..., y^d (increasing power
/// of y, then of x).
class MonomialPoly {
 public:
  MonomialPoly() = default;
  explicit MonomialPoly(int degree);
  MonomialPoly(int degree, std::vector<double> coeffs);

  int degree() const { return degree_; }
  std::size_t size() const { return coeffs_.size(); }
  std::span<const double> coeffs() const { return coeffs_; }
  std::span<double> coeffs() { return coeffs_; }

  /// Position of x^j y^k; requires j + k <= degree.
  std::size_t index(int j, int k) const;
  double& at(int j, int k) { return coeffs_[index(j, k)]; }
  double at(int j, int k) const { return coeffs_[index(j, k)]; }

  double operator()(double x, double y) const;
  /// sum |c_jk| |x|^j |y|^k; bounds the rounding error of operator().
  double abs_eval(double x, double y) const;
  double max_abs() const;

  /// Largest j + k with |c_jk| > tol * max_abs(); -1 for the zero polynomial.
  int effective_degree(double tol) const;

  /// f(x) g(y) for univariate ascending coefficient vectors.
  static MonomialPoly outer(int degree, std::span<const double> fx, std::span<const double> gy,
                            double scale = 1.0);
  void add_outer(std::span<const double> fx, std::span<const double> gy, double scale);

  MonomialPoly& operator+=(const MonomialPoly& other);
  MonomialPoly& operator-=(const MonomialPoly& other);
  MonomialPoly& operator*=(double s);

 private:
  int degree_ = 0;
  std::vector<double> coeffs_;
};

/// (d+1)(d+2)/2 monomials as (j, k) pairs in MonomialPoly order.
std::vector<std::pair<int, int>> monomial_exponents(int degree);

}  // namespace cblagrange
