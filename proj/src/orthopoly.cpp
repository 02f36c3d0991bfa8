#include "cblagrange/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include <Eigen/Eigenvalues>

#include "cblagrange/errors.hpp"

namespace cblagrange {

namespace {

constexpr int kMaxDoublings = 64;
constexpr int kMaxBisections = 400;

bool close_relative(double u, double v, double tol, double floor) {
  return std::abs(u - v) <= tol * std::max({std::abs(u), std::abs(v), floor});
}

template <class T>
std::vector<T> eval_seq(const RecurrenceCoeffs& coeffs, T x, int upto) {
  std::vector<T> p(static_cast<std::size_t>(upto) + 1);
  p[0] = 1;
  if (upto >= 1) p[1] = T(coeffs.a(0)) * x + T(coeffs.b(0));
  for (int k = 1; k < upto; ++k) {
    const auto i = static_cast<std::size_t>(k);
    p[i + 1] = (T(coeffs.a(k)) * x + T(coeffs.b(k))) * p[i] - p[i - 1];
  }
  return p;
}

void check_upto(const RecurrenceCoeffs& coeffs, int upto) {
  if (upto < 0 || upto > coeffs.n()) {
    throw ValidationError("eval_sequence: upto=" + std::to_string(upto) +
                          " outside [0, " + std::to_string(coeffs.n()) + "]");
  }
}

template <class T>
T combo_value(const RecurrenceCoeffs& coeffs, ComboSpec spec, T x) {
  const auto m = static_cast<std::size_t>(spec.m);
  switch (spec.kind) {
    case ComboKind::kP:
      return eval_seq(coeffs, x, spec.m)[m];
    case ComboKind::kPMinusPrev: {
      const auto p = eval_seq(coeffs, x, spec.m);
      return p[m] - p[m - 1];
    }
    case ComboKind::kPPlusPrev: {
      const auto p = eval_seq(coeffs, x, spec.m);
      return p[m] + p[m - 1];
    }
    case ComboKind::kNextMinusPrev: {
      const auto p = eval_seq(coeffs, x, spec.m + 1);
      return p[m + 1] - p[m - 1];
    }
  }
  return 0;
}

using Fn = std::function<Real(Real)>;

// Safeguarded secant inside [lo, hi] with f(lo), f(hi) of opposite sign.
// Alternates a secant step with a bisection step so the bracket at least
// halves every two iterations. Runs until the bracket cannot shrink.
Real solve_bracketed(const Fn& f, Real lo, Real hi, Real flo, Real fhi) {
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  bool secant_turn = true;
  for (int iter = 0; iter < kMaxBisections; ++iter) {
    const Real mid = (lo + hi) / 2;
    if (mid <= lo || mid >= hi) break;
    Real x = mid;
    if (secant_turn) {
      const Real s = hi - fhi * (hi - lo) / (fhi - flo);
      if (s > lo && s < hi) x = s;
    }
    secant_turn = !secant_turn;
    const Real fx = f(x);
    if (fx == 0) return x;
    if ((fx < 0) == (flo < 0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
  }
  return (lo + hi) / 2;
}

// Expands outward from `edge` (a point with f(edge) != 0) until f changes sign.
Real expand_bracket(const Fn& f, Real edge, Real direction) {
  const Real fedge = f(edge);
  Real offset = 1;
  for (int i = 0; i < kMaxDoublings; ++i, offset *= 2) {
    const Real far = edge + direction * offset;
    const Real ffar = f(far);
    if ((ffar < 0) != (fedge < 0) || ffar == 0) {
      return direction > 0 ? solve_bracketed(f, edge, far, fedge, ffar)
                           : solve_bracketed(f, far, edge, ffar, fedge);
    }
  }
  throw NumericalError("no sign change after outward bracket expansion");
}

Real solve_between(const Fn& f, Real lo, Real hi) {
  const Real flo = f(lo);
  const Real fhi = f(hi);
  if (flo != 0 && fhi != 0 && (flo < 0) == (fhi < 0)) {
    throw NumericalError("interlacing bracket [" + sci(static_cast<double>(lo)) + ", " +
                         sci(static_cast<double>(hi)) + "] has no sign change");
  }
  return solve_bracketed(f, lo, hi, flo, fhi);
}

void require_strictly_decreasing(const std::vector<Real>& zeros) {
  for (std::size_t i = 1; i < zeros.size(); ++i) {
    if (!(zeros[i] < zeros[i - 1])) {
      throw NumericalError("combination zeros are not strictly separated");
    }
  }
}

std::vector<double> rounded(const std::vector<Real>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

RecurrenceCoeffs::RecurrenceCoeffs(std::vector<double> a_values, std::vector<double> b_values,
                                   double reflection_tol)
    : a_(std::move(a_values)), b_(std::move(b_values)) {
  if (a_.size() != b_.size()) {
    throw ValidationError("recurrence sequences a and b differ in length");
  }
  const int n = this->n();
  double amax = 0.0;
  for (int k = 0; k < n; ++k) {
    if (!std::isfinite(a(k)) || !std::isfinite(b(k))) {
      throw ValidationError("non-finite recurrence coefficient at k=" + std::to_string(k));
    }
    if (!(a(k) > 0.0)) {
      throw ValidationError("positivity violated: a_" + std::to_string(k) + " <= 0");
    }
    amax = std::max(amax, a(k));
  }
  for (int k = 1; k < n; ++k) {
    const int mirror = n - k;
    if (!close_relative(a(k), a(mirror), reflection_tol, 0.0) ||
        !close_relative(b(k), b(mirror), reflection_tol, amax)) {
      throw ValidationError("reflection violated at k=" + std::to_string(k));
    }
  }
  for (int k = 1; k < n - k; ++k) {
    const auto i = static_cast<std::size_t>(k);
    const auto j = static_cast<std::size_t>(n - k);
    a_[i] = a_[j] = 0.5 * (a_[i] + a_[j]);
    b_[i] = b_[j] = 0.5 * (b_[i] + b_[j]);
  }
}

RecurrenceCoeffs RecurrenceCoeffs::from_half(std::span<const double> a_half,
                                             std::span<const double> b_half, int n) {
  if (n < 0) throw ValidationError("negative recurrence length");
  const auto need = n == 0 ? 0u : static_cast<std::size_t>(n / 2 + 1);
  if (a_half.size() != need || b_half.size() != need) {
    throw ValidationError("from_half expects floor(n/2)+1 free entries");
  }
  std::vector<double> a(static_cast<std::size_t>(n));
  std::vector<double> b(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const int src = (k == 0 || k <= n / 2) ? k : n - k;
    a[static_cast<std::size_t>(k)] = a_half[static_cast<std::size_t>(src)];
    b[static_cast<std::size_t>(k)] = b_half[static_cast<std::size_t>(src)];
  }
  return RecurrenceCoeffs(std::move(a), std::move(b), 0.0);
}

double RecurrenceCoeffs::leading(int k) const {
  double lead = 1.0;
  for (int j = 0; j < k; ++j) lead *= a(j);
  return lead;
}

PolySequenceEval eval_sequence(const RecurrenceCoeffs& coeffs, double x, int upto) {
  if (!std::isfinite(x)) throw ValidationError("non-finite abscissa");
  check_upto(coeffs, upto);
  return eval_seq(coeffs, x, upto);
}

std::vector<Real> eval_sequence_ext(const RecurrenceCoeffs& coeffs, Real x, int upto) {
  if (!std::isfinite(x)) throw ValidationError("non-finite abscissa");
  check_upto(coeffs, upto);
  return eval_seq(coeffs, x, upto);
}

double eval_combo(const RecurrenceCoeffs& coeffs, ComboSpec spec, double x) {
  return combo_value(coeffs, spec, x);
}

std::vector<Real> zeros_of_ext(const RecurrenceCoeffs& coeffs, int m) {
  if (m < 0 || m > coeffs.n()) {
    throw ValidationError("zeros_of: degree " + std::to_string(m) + " out of range");
  }
  if (m == 0) return {};
  using Vec = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
  using Mat = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
  // Monic P_k = p_k / prod_{j<k} a_j satisfies
  //   x P_k = P_{k+1} - (b_k/a_k) P_k + P_{k-1} / (a_k a_{k-1}).
  Vec diag(m);
  Vec sub(std::max(m - 1, 0));
  for (int k = 0; k < m; ++k) diag(k) = -Real(coeffs.b(k)) / Real(coeffs.a(k));
  for (int k = 1; k < m; ++k) sub(k - 1) = 1 / std::sqrt(Real(coeffs.a(k)) * Real(coeffs.a(k - 1)));
  Eigen::SelfAdjointEigenSolver<Mat> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("tridiagonal eigenvalue solve failed");
  }
  std::vector<Real> zeros(solver.eigenvalues().data(), solver.eigenvalues().data() + m);
  std::sort(zeros.begin(), zeros.end(), std::greater<>());
  return zeros;
}

std::vector<double> zeros_of(const RecurrenceCoeffs& coeffs, int m) {
  return rounded(zeros_of_ext(coeffs, m));
}

std::vector<Real> combo_zeros_ext(const RecurrenceCoeffs& coeffs, ComboSpec spec) {
  const int n = coeffs.n();
  const int m = spec.m;
  const Fn f = [&](Real x) { return combo_value(coeffs, spec, x); };
  const auto at = [](const std::vector<Real>& v, int i) { return v[static_cast<std::size_t>(i)]; };
  std::vector<Real> out;

  switch (spec.kind) {
    case ComboKind::kP:
      return zeros_of_ext(coeffs, m);

    case ComboKind::kPMinusPrev:
    case ComboKind::kPPlusPrev: {
      if (m < 1 || m > n) throw ValidationError("combo_zeros: m out of range");
      const auto u = zeros_of_ext(coeffs, m);      // u_1 > ... > u_m
      const auto v = zeros_of_ext(coeffs, m - 1);  // v_1 > ... > v_{m-1}
      if (spec.kind == ComboKind::kPMinusPrev) {
        // (u_1, inf), (u_2, v_1), ..., (u_m, v_{m-1})
        out.push_back(expand_bracket(f, u[0], +1));
        for (int i = 1; i < m; ++i) out.push_back(solve_between(f, at(u, i), at(v, i - 1)));
      } else {
        // (v_1, u_1), ..., (v_{m-1}, u_{m-1}), (-inf, u_m)
        for (int i = 0; i < m - 1; ++i) out.push_back(solve_between(f, at(v, i), at(u, i)));
        out.push_back(expand_bracket(f, u.back(), -1));
      }
      break;
    }

    case ComboKind::kNextMinusPrev: {
      if (m < 1 || m + 1 > n) throw ValidationError("combo_zeros: m out of range");
      const auto u = zeros_of_ext(coeffs, m);
      // (u_1, inf), (u_2, u_1), ..., (u_m, u_{m-1}), (-inf, u_m)
      out.push_back(expand_bracket(f, u[0], +1));
      for (int i = 1; i < m; ++i) out.push_back(solve_between(f, at(u, i), at(u, i - 1)));
      out.push_back(expand_bracket(f, u.back(), -1));
      break;
    }
  }
  require_strictly_decreasing(out);
  return out;
}

std::vector<double> combo_zeros(const RecurrenceCoeffs& coeffs, ComboSpec spec) {
  return rounded(combo_zeros_ext(coeffs, spec));
}

std::vector<std::vector<double>> monomial_expansion(const RecurrenceCoeffs& coeffs,
                                                    int upto) {
  if (upto < 0 || upto > coeffs.n()) {
    throw ValidationError("monomial_expansion: upto out of range");
  }
  std::vector<std::vector<double>> p(static_cast<std::size_t>(upto) + 1);
  p[0] = {1.0};
  if (upto >= 1) p[1] = {coeffs.b(0), coeffs.a(0)};
  for (int k = 1; k < upto; ++k) {
    const auto i = static_cast<std::size_t>(k);
    std::vector<double> next(i + 2, 0.0);
    for (std::size_t e = 0; e < p[i].size(); ++e) {
      next[e + 1] += coeffs.a(k) * p[i][e];
      next[e] += coeffs.b(k) * p[i][e];
    }
    for (std::size_t e = 0; e < p[i - 1].size(); ++e) next[e] -= p[i - 1][e];
    p[i + 1] = std::move(next);
  }
  return p;
}

RecurrenceCoeffs affine_transform(const RecurrenceCoeffs& coeffs, double alpha,
                                  double beta) {
  if (!(alpha > 0.0) || !std::isfinite(beta)) {
    throw ValidationError("affine_transform requires alpha > 0");
  }
  std::vector<double> a(coeffs.a().begin(), coeffs.a().end());
  std::vector<double> b(coeffs.b().begin(), coeffs.b().end());
  for (std::size_t k = 0; k < a.size(); ++k) {
    b[k] -= a[k] * beta / alpha;
    a[k] /= alpha;
  }
  return RecurrenceCoeffs(std::move(a), std::move(b), 1e-12);
}

}  // namespace cblagrange
