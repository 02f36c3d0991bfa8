#include "cblagrange/nodemap.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include <Eigen/Dense>

#include "cblagrange/errors.hpp"

namespace cblagrange {

namespace {

constexpr double kAlternationTol = 1e-9;

// Free unknowns of a coefficient set: a_0..a_h then b_0..b_h, h = floor(n/2),
// with a_0 dropped for even n.
struct FreeLayout {
  int n;
  int half;
  bool fix_a0;

  int size() const { return 2 * (half + 1) - (fix_a0 ? 1 : 0); }

  Eigen::VectorXd pack(const RecurrenceCoeffs& c) const {
    Eigen::VectorXd z(size());
    int i = 0;
    for (int k = fix_a0 ? 1 : 0; k <= half; ++k) z(i++) = c.a(k);
    for (int k = 0; k <= half; ++k) z(i++) = c.b(k);
    return z;
  }

  std::optional<RecurrenceCoeffs> unpack(const Eigen::VectorXd& z, double a0) const {
    std::vector<double> a(static_cast<std::size_t>(half) + 1);
    std::vector<double> b(static_cast<std::size_t>(half) + 1);
    int i = 0;
    if (fix_a0) a[0] = a0;
    for (int k = fix_a0 ? 1 : 0; k <= half; ++k) a[static_cast<std::size_t>(k)] = z(i++);
    for (int k = 0; k <= half; ++k) b[static_cast<std::size_t>(k)] = z(i++);
    for (double ak : a) {
      if (!(ak > 0.0) || !std::isfinite(ak)) return std::nullopt;
    }
    for (double bk : b) {
      if (!std::isfinite(bk)) return std::nullopt;
    }
    return RecurrenceCoeffs::from_half(a, b, n);
  }
};

std::optional<Eigen::VectorXd> residual(const FreeLayout& layout, const Eigen::VectorXd& z,
                                        double a0, std::span<const double> target) {
  const auto c = layout.unpack(z, a0);
  if (!c) return std::nullopt;
  try {
    const auto nodes = nodes_from_coeffs(*c);
    Eigen::VectorXd r(static_cast<Eigen::Index>(target.size()));
    for (std::size_t i = 0; i < target.size(); ++i) {
      r(static_cast<Eigen::Index>(i)) = nodes[i] - target[i];
    }
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// Damped Newton with a central-difference Jacobian. Returns the final iterate
// and whether its residual met `accept` (absolute).
struct NewtonResult {
  Eigen::VectorXd z;
  double residual;
  bool converged;
};

NewtonResult newton_solve(const FreeLayout& layout, Eigen::VectorXd z, double a0,
                          std::span<const double> target, double accept,
                          const InverseMapOptions& options) {
  auto r = residual(layout, z, a0, target);
  if (!r) return {z, HUGE_VAL, false};
  double norm = r->lpNorm<Eigen::Infinity>();
  const double stop = accept * 1e-4;
  const Eigen::Index dim = z.size();

  for (int iter = 0; iter < options.max_iterations && norm > stop; ++iter) {
    Eigen::MatrixXd jac(r->size(), dim);
    bool jac_ok = true;
    for (Eigen::Index i = 0; i < dim && jac_ok; ++i) {
      const double h = 1e-6 * std::max(std::abs(z(i)), 1e-3);
      Eigen::VectorXd zp = z;
      Eigen::VectorXd zm = z;
      zp(i) += h;
      zm(i) -= h;
      const auto rp = residual(layout, zp, a0, target);
      const auto rm = residual(layout, zm, a0, target);
      if (!rp || !rm) {
        jac_ok = false;
        break;
      }
      jac.col(i) = (*rp - *rm) / (2.0 * h);
    }
    if (!jac_ok) break;

    const Eigen::VectorXd step = jac.colPivHouseholderQr().solve(-*r);
    if (!step.allFinite()) break;

    double lambda = 1.0;
    bool accepted = false;
    for (int halving = 0; halving <= options.max_halvings; ++halving, lambda *= 0.5) {
      const Eigen::VectorXd trial = z + lambda * step;
      const auto rt = residual(layout, trial, a0, target);
      if (rt && rt->lpNorm<Eigen::Infinity>() < norm) {
        z = trial;
        r = rt;
        norm = rt->lpNorm<Eigen::Infinity>();
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }
  return {z, norm, norm <= accept};
}

}  // namespace

NodeSequence::NodeSequence(std::vector<double> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw ValidationError("node sequence is empty");
  for (double x : nodes_) {
    if (!std::isfinite(x)) throw ValidationError("non-finite node");
  }
  const double min_gap = 1e-12 * span_width();
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    if (!(nodes_[i - 1] - nodes_[i] > min_gap)) {
      throw ValidationError("nodes not strictly decreasing at index " + std::to_string(i));
    }
  }
}

namespace {

template <class T>
double alternation_error_t(const RecurrenceCoeffs& coeffs, std::span<const T> nodes) {
  const int n = coeffs.n();
  if (nodes.empty()) return 0.0;
  const T span = nodes.front() - nodes.back();
  T worst = 0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const T x = nodes[j];
    const auto p = eval_sequence_ext(coeffs, x, n);
    // p'_{k+1} = a_k p_k + (a_k x + b_k) p'_k - p'_{k-1}
    std::vector<T> dp(p.size(), 0);
    if (n >= 1) dp[1] = coeffs.a(0);
    for (int k = 1; k < n; ++k) {
      const auto i = static_cast<std::size_t>(k);
      dp[i + 1] = T(coeffs.a(k)) * T(p[i]) + (T(coeffs.a(k)) * x + T(coeffs.b(k))) * dp[i] - dp[i - 1];
    }
    T scale = 1;
    for (std::size_t k = 0; k < p.size(); ++k) {
      scale = std::max({scale, T(std::abs(p[k])), span * std::abs(dp[k])});
    }
    const T sign = (j % 2 == 0) ? 1 : -1;
    for (int k = 0; k <= n; ++k) {
      const T diff = T(p[static_cast<std::size_t>(n - k)]) - sign * T(p[static_cast<std::size_t>(k)]);
      worst = std::max(worst, std::abs(diff) / scale);
    }
  }
  return static_cast<double>(worst);
}

}  // namespace

double alternation_error(const RecurrenceCoeffs& coeffs, std::span<const double> nodes) {
  return alternation_error_t(coeffs, nodes);
}

std::vector<Real> nodes_from_coeffs_ext(const RecurrenceCoeffs& coeffs) {
  const int n = coeffs.n();
  if (n < 1) throw ValidationError("nodes_from_coeffs requires n >= 1");
  std::vector<Real> nodes(static_cast<std::size_t>(n) + 1);
  const auto at = [&](int i) -> Real& { return nodes[static_cast<std::size_t>(i)]; };
  if (n % 2 == 1) {
    const int m = (n + 1) / 2;
    const auto minus = combo_zeros_ext(coeffs, {ComboKind::kPMinusPrev, m});
    const auto plus = combo_zeros_ext(coeffs, {ComboKind::kPPlusPrev, m});
    for (int i = 0; i < m; ++i) {
      at(2 * i) = minus[static_cast<std::size_t>(i)];
      at(2 * i + 1) = plus[static_cast<std::size_t>(i)];
    }
  } else {
    const int m = n / 2;
    const auto odd = combo_zeros_ext(coeffs, {ComboKind::kP, m});
    const auto even = combo_zeros_ext(coeffs, {ComboKind::kNextMinusPrev, m});
    for (int i = 0; i <= m; ++i) at(2 * i) = even[static_cast<std::size_t>(i)];
    for (int i = 0; i < m; ++i) at(2 * i + 1) = odd[static_cast<std::size_t>(i)];
  }
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (!(nodes[i] < nodes[i - 1])) {
      throw NumericalError("merged node sequence is not strictly decreasing");
    }
  }
  if (const double err = alternation_error_t<Real>(coeffs, nodes); err > kAlternationTol) {
    throw NumericalError("alternation condition violated at computed nodes (error " +
                         sci(err) + ")");
  }
  return nodes;
}

NodeSequence nodes_from_coeffs(const RecurrenceCoeffs& coeffs) {
  const auto ext = nodes_from_coeffs_ext(coeffs);
  return NodeSequence(std::vector<double>(ext.begin(), ext.end()));
}

RecurrenceCoeffs gamma_rescale(const RecurrenceCoeffs& coeffs, double gamma) {
  if (coeffs.n() % 2 != 0) {
    throw ValidationError("gamma_rescale: coefficients are unique for odd n");
  }
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw ValidationError("gamma_rescale: gamma must be positive");
  }
  std::vector<double> a(coeffs.a().begin(), coeffs.a().end());
  std::vector<double> b(coeffs.b().begin(), coeffs.b().end());
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double f = (k % 2 == 0) ? gamma : 1.0 / gamma;
    a[k] *= f;
    b[k] *= f;
  }
  return RecurrenceCoeffs(std::move(a), std::move(b), 0.0);
}

RecurrenceCoeffs chebyshev_like_coeffs(int n) {
  std::vector<double> a(static_cast<std::size_t>(n), 2.0);
  std::vector<double> b(static_cast<std::size_t>(n), 0.0);
  if (n > 0) a[0] = 1.0;
  return RecurrenceCoeffs(std::move(a), std::move(b));
}

RecurrenceCoeffs reference_coeffs(const NodeSequence& nodes) {
  const int n = nodes.n();
  if (n < 1) return RecurrenceCoeffs{};
  // Chebyshev extrema mapped affinely onto [x_n, x_0].
  const double span = nodes.span_width();
  const double alpha = 2.0 / span;
  const double beta = -(nodes[0] + nodes[static_cast<std::size_t>(n)]) / span;
  return affine_transform(chebyshev_like_coeffs(n), 1.0 / alpha, -beta / alpha);
}

RecurrenceCoeffs coeffs_from_nodes(const NodeSequence& nodes, const InverseMapOptions& options) {
  const int n = nodes.n();
  if (n < 1) return RecurrenceCoeffs{};
  if (n % 2 == 0 && !(options.even_a0 > 0.0)) {
    throw ValidationError("coeffs_from_nodes: a_0 normalization must be positive");
  }
  const bool even = n % 2 == 0;
  const FreeLayout layout{n, n / 2, even};
  const double span = nodes.span_width();
  const double accept = options.accept_tol * span;

  RecurrenceCoeffs start = reference_coeffs(nodes);
  if (even) start = gamma_rescale(start, options.even_a0 / start.a(0));

  const auto target = nodes.values();
  auto direct = newton_solve(layout, layout.pack(start), options.even_a0, target, accept, options);
  if (direct.converged) return *layout.unpack(direct.z, options.even_a0);

  // Continuation: march the target from the start family's nodes to X.
  const auto origin = nodes_from_coeffs(start);
  Eigen::VectorXd z = layout.pack(start);
  double t = 0.0;
  double dt = 0.125;
  std::vector<double> stage(target.size());
  while (t < 1.0) {
    const double next = std::min(1.0, t + dt);
    for (std::size_t i = 0; i < stage.size(); ++i) {
      stage[i] = (1.0 - next) * origin[i] + next * target[i];
    }
    const auto res = newton_solve(layout, z, options.even_a0, stage, accept, options);
    if (res.converged) {
      z = res.z;
      t = next;
      dt = std::min(0.5, dt * 2.0);
    } else {
      dt *= 0.5;
      if (dt < 1e-4) {
        throw NumericalError("coeffs_from_nodes: Newton continuation did not converge (residual " +
                             sci(res.residual / span) + " relative)");
      }
    }
  }
  return *layout.unpack(z, options.even_a0);
}

}  // namespace cblagrange
