#include "cblagrange/vanishing.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "cblagrange/errors.hpp"
#include "cblagrange/linalg.hpp"

namespace cblagrange {

namespace {

constexpr double kVanishTol = 1e-9;

std::vector<double> node_polynomial(const NodeSequence& nodes) {
  std::vector<double> w{1.0};
  for (double r : nodes.values()) {
    std::vector<double> next(w.size() + 1, 0.0);
    for (std::size_t e = 0; e < w.size(); ++e) {
      next[e + 1] += w[e];
      next[e] -= r * w[e];
    }
    w = std::move(next);
  }
  return w;
}

void scale_to_unit(MonomialPoly& f) {
  const double m = f.max_abs();
  if (m > 0.0) f *= 1.0 / m;
}

}  // namespace

const char* to_string(QuotientCase c) {
  switch (c) {
    case QuotientCase::kI:
      return "I";
    case QuotientCase::kII:
      return "II";
    case QuotientCase::kIII:
      return "III";
  }
  return "?";
}

QuotientCase quotient_case(int n, int sigma) {
  if (sigma % 2 == 1) return QuotientCase::kI;
  return n % 2 == 1 ? QuotientCase::kII : QuotientCase::kIII;
}

std::int64_t quotient_dimension(std::int64_t n, std::int64_t sigma, int tau) {
  if (n < 0 || sigma < 0) throw ValidationError("quotient_dimension: negative size");
  if (tau != 0 && tau != 1) throw ValidationError("tau must be 0 or 1");
  const std::int64_t delta = sigma / 2;
  const std::int64_t base = delta * (delta + 1) / 2;
  if (sigma % 2 == 1) return base;
  if (n % 2 == 1) return base + (n + 1) / 2;
  return base + n / 2 + tau;
}

std::vector<MonomialPoly> build_V(const GridInstance& grid) {
  const int delta = grid.delta();
  const int degree = grid.n() + delta;
  const auto omega = node_polynomial(grid.xnodes());
  std::vector<MonomialPoly> out;
  for (int total = 0; total <= delta - 1; ++total) {
    for (int k = 0; k <= total; ++k) {
      const int j = total - k;
      // omega(x) x^j as a univariate vector, times y^k.
      std::vector<double> fx(static_cast<std::size_t>(j), 0.0);
      fx.insert(fx.end(), omega.begin(), omega.end());
      std::vector<double> gy(static_cast<std::size_t>(k) + 1, 0.0);
      gy.back() = 1.0;
      out.push_back(MonomialPoly::outer(degree, fx, gy));
    }
  }
  return out;
}

double relative_vanishing_error(const MonomialPoly& f, const CheckerboardSet& set) {
  // One scale for the whole set: pointwise |f| / sum|terms| is 0/0 where every
  // term vanishes, e.g. at a node that is zero up to rounding.
  double worst = 0.0;
  double scale = 0.0;
  for (const auto& pt : set.points) {
    worst = std::max(worst, std::abs(f(pt.x, pt.y)));
    scale = std::max(scale, f.abs_eval(pt.x, pt.y));
  }
  return scale == 0.0 ? 0.0 : worst / scale;
}

QuotientBasis build_Q(const GridInstance& grid, int tau) {
  if (tau != 0 && tau != 1) throw ValidationError("tau must be 0 or 1");
  const int n = grid.n();
  const int delta = grid.delta();
  const int degree = n + delta;
  const auto qcase = quotient_case(n, grid.sigma());

  QuotientBasis basis{build_V(grid), qcase, 0};
  if (qcase != QuotientCase::kI) {
    const int last = qcase == QuotientCase::kII ? (n + 1) / 2 - 1 : n / 2 - 1 + tau;
    const auto px = monomial_expansion(grid.xcoeffs(), n);
    const auto qy = monomial_expansion(grid.ycoeffs(), n + delta);
    const double sign = tau == 0 ? 1.0 : -1.0;
    for (int j = 0; j <= last; ++j) {
      auto g = MonomialPoly::outer(degree, px[static_cast<std::size_t>(n - j)],
                                   qy[static_cast<std::size_t>(j + delta)]);
      g.add_outer(px[static_cast<std::size_t>(j)], qy[static_cast<std::size_t>(n + delta - j)],
                  -sign);
      basis.elements.push_back(std::move(g));
    }
  }
  for (auto& e : basis.elements) scale_to_unit(e);
  basis.M = static_cast<int>(basis.elements.size());

  const auto set = build_checkerboard(grid, tau);
  for (std::size_t i = 0; i < basis.elements.size(); ++i) {
    const double err = relative_vanishing_error(basis.elements[i], set);
    if (err > kVanishTol) {
      throw ValidationError("quotient element " + std::to_string(i) +
                            " does not vanish on S_tau (relative error " + sci(err) + ")");
    }
  }
  if (basis.M > 0 && numerical_rank(coefficient_rows(basis.elements, true)) != basis.M) {
    throw ValidationError("quotient elements are linearly dependent");
  }
  if (basis.M != quotient_dimension(n, grid.sigma(), tau)) {
    throw ValidationError("quotient basis size disagrees with the dimension count");
  }
  return basis;
}

}  // namespace cblagrange
