#include "cblagrange/monomial.hpp"

#include <algorithm>
#include <cmath>

#include "cblagrange/errors.hpp"

namespace cblagrange {

MonomialPoly::MonomialPoly(int degree)
    : degree_(degree),
      coeffs_(static_cast<std::size_t>((degree + 1) * (degree + 2) / 2), 0.0) {
  if (degree < 0) throw ValidationError("negative polynomial degree");
}

MonomialPoly::MonomialPoly(int degree, std::vector<double> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree < 0 ||
      coeffs_.size() != static_cast<std::size_t>((degree + 1) * (degree + 2) / 2)) {
    throw ValidationError("coefficient count does not match degree");
  }
}

std::size_t MonomialPoly::index(int j, int k) const {
  // Rows k' < k hold degree_ + 1 - k' entries each.
  return static_cast<std::size_t>(k * (degree_ + 1) - k * (k - 1) / 2 + j);
}

double MonomialPoly::operator()(double x, double y) const {
  double total = 0.0;
  double yk = 1.0;
  for (int k = 0; k <= degree_; ++k) {
    // Horner in x for the row of y^k.
    double row = 0.0;
    for (int j = degree_ - k; j >= 0; --j) row = row * x + at(j, k);
    total += row * yk;
    yk *= y;
  }
  return total;
}

double MonomialPoly::abs_eval(double x, double y) const {
  return MonomialPoly(degree_, [&] {
           auto c = coeffs_;
           for (double& v : c) v = std::abs(v);
           return c;
         }())(std::abs(x), std::abs(y));
}

double MonomialPoly::max_abs() const {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

int MonomialPoly::effective_degree(double tol) const {
  const double cutoff = tol * max_abs();
  int deg = -1;
  for (int k = 0; k <= degree_; ++k) {
    for (int j = 0; j + k <= degree_; ++j) {
      if (std::abs(at(j, k)) > cutoff && at(j, k) != 0.0) deg = std::max(deg, j + k);
    }
  }
  return deg;
}

MonomialPoly MonomialPoly::outer(int degree, std::span<const double> fx,
                                 std::span<const double> gy, double scale) {
  MonomialPoly p(degree);
  p.add_outer(fx, gy, scale);
  return p;
}

void MonomialPoly::add_outer(std::span<const double> fx, std::span<const double> gy,
                             double scale) {
  const int dx = static_cast<int>(fx.size()) - 1;
  const int dy = static_cast<int>(gy.size()) - 1;
  if (dx + dy > degree_) throw ValidationError("outer product exceeds polynomial degree");
  for (int k = 0; k <= dy; ++k) {
    const double gk = scale * gy[static_cast<std::size_t>(k)];
    if (gk == 0.0) continue;
    for (int j = 0; j <= dx; ++j) at(j, k) += fx[static_cast<std::size_t>(j)] * gk;
  }
}

MonomialPoly& MonomialPoly::operator+=(const MonomialPoly& other) {
  if (other.degree_ != degree_) throw ValidationError("degree mismatch in polynomial sum");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

MonomialPoly& MonomialPoly::operator-=(const MonomialPoly& other) {
  if (other.degree_ != degree_) throw ValidationError("degree mismatch in polynomial difference");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

MonomialPoly& MonomialPoly::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  return *this;
}

std::vector<std::pair<int, int>> monomial_exponents(int degree) {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>((degree + 1) * (degree + 2) / 2));
  for (int k = 0; k <= degree; ++k) {
    for (int j = 0; j + k <= degree; ++j) out.emplace_back(j, k);
  }
  return out;
}

}  // namespace cblagrange
