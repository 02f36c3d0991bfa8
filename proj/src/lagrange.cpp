#include "cblagrange/lagrange.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cblagrange/errors.hpp"

namespace cblagrange {

namespace {

void require_basis_grid(const GridInstance& grid) {
  if (grid.n() < 1) throw ValidationError("Lagrange basis construction requires n >= 1");
}

std::size_t idx(int k) { return static_cast<std::size_t>(k); }

// C_l = sum_{k=0}^{l} c_k q_k(y) q_k(y_v) for l = -1..n+sigma, stored at l+1.
std::vector<Real> kernel_prefix(const GridInstance& grid, const AxisValues& at_point,
                                const AxisValues& at_anchor) {
  const int top = grid.n() + grid.sigma();
  std::vector<Real> prefix(idx(top) + 2, 0);
  for (int k = 0; k <= top; ++k) {
    prefix[idx(k) + 1] =
        prefix[idx(k)] + Real(y_coeff(grid, k)) * at_point.q[idx(k)] * at_anchor.q[idx(k)];
  }
  return prefix;
}

Real G_ext(const GridInstance& grid, const AxisValues& at_point, const AxisValues& at_anchor) {
  const int n = grid.n();
  const int sigma = grid.sigma();
  const int delta = grid.delta();
  const auto C = kernel_prefix(grid, at_point, at_anchor);
  const auto prefix = [&](int l) { return C[idx(l + 1)]; };
  const auto& a = grid.xcoeffs();
  Real total = 0;
  for (int j = 0; j <= n - 1; ++j) {
    total += Real(a.a(j)) * at_point.p[idx(j)] * at_anchor.p[idx(j)] *
             (prefix(n - j + delta) + prefix(n - j + sigma - delta - 1));
  }
  total += Real(a.a(0)) * at_point.p[idx(n)] * at_anchor.p[idx(n)] *
           (prefix(sigma - delta - 1) + prefix(delta));
  return total;
}

// Ascending monomial coefficients of p_0..p_upto, extended precision.
std::vector<std::vector<Real>> expansion_ext(const RecurrenceCoeffs& c, int upto) {
  std::vector<std::vector<Real>> p(idx(upto) + 1);
  p[0] = {1};
  if (upto >= 1) p[1] = {Real(c.b(0)), Real(c.a(0))};
  for (int k = 1; k < upto; ++k) {
    const auto i = idx(k);
    std::vector<Real> next(i + 2, 0);
    for (std::size_t e = 0; e < p[i].size(); ++e) {
      next[e + 1] += Real(c.a(k)) * p[i][e];
      next[e] += Real(c.b(k)) * p[i][e];
    }
    for (std::size_t e = 0; e < p[i - 1].size(); ++e) next[e] -= p[i - 1][e];
    p[i + 1] = std::move(next);
  }
  return p;
}

}  // namespace

AxisValues AxisValues::at(const GridInstance& grid, Point point) {
  return {eval_sequence_ext(grid.xcoeffs(), point.x, grid.n()),
          eval_sequence_ext(grid.ycoeffs(), point.y, grid.n() + grid.sigma())};
}

AxisValues AxisValues::at_node(const GridInstance& grid, int r, int u) {
  if (r < 0 || r > grid.n() || u < 0 || u > grid.n() + grid.sigma()) {
    throw ValidationError("grid node (" + std::to_string(r) + ", " + std::to_string(u) +
                          ") out of range");
  }
  return {eval_sequence_ext(grid.xcoeffs(), grid.xnodes_ext()[idx(r)], grid.n()),
          eval_sequence_ext(grid.ycoeffs(), grid.ynodes_ext()[idx(u)], grid.n() + grid.sigma())};
}

double y_coeff(const GridInstance& grid, int k) {
  const int len = grid.ycoeffs().n();
  if (k < 0 || k > len || len == 0) {
    throw ValidationError("y-recurrence coefficient c_" + std::to_string(k) + " out of range");
  }
  return k == len ? grid.ycoeffs().a(0) : grid.ycoeffs().a(k);
}

double kernel_K(const GridInstance& grid, int delta_param, Point point, Point anchor) {
  require_basis_grid(grid);
  const int sigma = grid.sigma();
  if (delta_param < -1 || delta_param > std::max(sigma - 1, grid.delta())) {
    throw ValidationError("kernel_K: delta parameter " + std::to_string(delta_param) +
                          " outside [-1, " + std::to_string(std::max(sigma - 1, grid.delta())) + "]");
  }
  const auto P = AxisValues::at(grid, point);
  const auto A = AxisValues::at(grid, anchor);
  const int n = grid.n();
  Real total = 0;
  for (int j = 0; j <= n - 1; ++j) {
    Real inner = 0;
    for (int k = 0; k <= n - j + delta_param; ++k) {
      inner += Real(y_coeff(grid, k)) * P.q[idx(k)] * A.q[idx(k)];
    }
    total += Real(grid.xcoeffs().a(j)) * P.p[idx(j)] * A.p[idx(j)] * inner;
  }
  return static_cast<double>(total);
}

double boundary_J(const GridInstance& grid, Point point, Point anchor) {
  require_basis_grid(grid);
  const auto P = AxisValues::at(grid, point);
  const auto A = AxisValues::at(grid, anchor);
  const int n = grid.n();
  const int delta = grid.delta();
  const auto partial = [&](int upper) {
    Real s = 0;
    for (int k = 0; k <= upper; ++k) s += Real(y_coeff(grid, k)) * P.q[idx(k)] * A.q[idx(k)];
    return s;
  };
  return static_cast<double>(Real(grid.xcoeffs().a(0)) * P.p[idx(n)] * A.p[idx(n)] *
                             (partial(grid.sigma() - delta - 1) + partial(delta)));
}

double reproducing_G(const GridInstance& grid, const AxisValues& at_point,
                     const AxisValues& at_anchor) {
  return static_cast<double>(G_ext(grid, at_point, at_anchor));
}

double reproducing_G(const GridInstance& grid, Point point, Point anchor) {
  require_basis_grid(grid);
  return reproducing_G(grid, AxisValues::at(grid, point), AxisValues::at(grid, anchor));
}

namespace {

MonomialPoly expand_from(const GridInstance& grid, const AxisValues& A, Real scale) {
  const int n = grid.n();
  const int sigma = grid.sigma();
  const int delta = grid.delta();
  const int degree = n + delta;
  const auto px = expansion_ext(grid.xcoeffs(), n);
  const auto qy = expansion_ext(grid.ycoeffs(), degree);

  // S_l(y) = sum_{k<=l} c_k q_k(y_v) q_k(y), l = -1..degree, stored at l+1.
  std::vector<std::vector<Real>> S(idx(degree) + 2);
  S[0] = {0};
  for (int k = 0; k <= degree; ++k) {
    auto next = S[idx(k)];
    next.resize(idx(k) + 1, 0);
    const Real w = Real(y_coeff(grid, k)) * A.q[idx(k)];
    for (std::size_t e = 0; e < qy[idx(k)].size(); ++e) next[e] += w * qy[idx(k)][e];
    S[idx(k) + 1] = std::move(next);
  }
  const auto partial = [&](int l) -> const std::vector<Real>& { return S[idx(l + 1)]; };

  MonomialPoly shape(degree);
  std::vector<Real> acc(shape.size(), 0);
  const auto add = [&](const std::vector<Real>& fx, const std::vector<Real>& gy, Real w) {
    for (std::size_t k = 0; k < gy.size(); ++k) {
      for (std::size_t j = 0; j < fx.size(); ++j) {
        acc[shape.index(static_cast<int>(j), static_cast<int>(k))] += w * fx[j] * gy[k];
      }
    }
  };
  const auto& a = grid.xcoeffs();
  for (int j = 0; j <= n - 1; ++j) {
    const Real w = Real(a.a(j)) * A.p[idx(j)];
    add(px[idx(j)], partial(n - j + delta), w);
    add(px[idx(j)], partial(n - j + sigma - delta - 1), w);
  }
  const Real w = Real(a.a(0)) * A.p[idx(n)];
  add(px[idx(n)], partial(sigma - delta - 1), w);
  add(px[idx(n)], partial(delta), w);

  std::vector<double> out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<double>(acc[i] / scale);
  return MonomialPoly(degree, std::move(out));
}

}  // namespace

MonomialPoly expand_G(const GridInstance& grid, Point anchor) {
  require_basis_grid(grid);
  return expand_from(grid, AxisValues::at(grid, anchor), 1);
}

BasisFunction::BasisFunction(std::shared_ptr<const GridInstance> grid, GridPoint anchor)
    : grid_(std::move(grid)), anchor_(anchor) {
  if (!grid_) throw ValidationError("basis requires a grid");
  require_basis_grid(*grid_);
  anchor_values_ = AxisValues::at_node(*grid_, anchor_.r, anchor_.u);
  normalizer_ = G_ext(*grid_, anchor_values_, anchor_values_);
  if (!(normalizer_ > 0)) {
    throw ValidationError("G(anchor; anchor) = " + sci(static_cast<double>(normalizer_)) +
                          " is not positive; grid data is inconsistent");
  }
}

double BasisFunction::G(double x, double y) const { return G(AxisValues::at(*grid_, {x, y})); }

double BasisFunction::G(const AxisValues& at_point) const {
  return reproducing_G(*grid_, at_point, anchor_values_);
}

double BasisFunction::operator()(const AxisValues& at_point) const {
  return static_cast<double>(G_ext(*grid_, at_point, anchor_values_) / normalizer_);
}

double BasisFunction::operator()(double x, double y) const {
  return (*this)(AxisValues::at(*grid_, {x, y}));
}

MonomialPoly BasisFunction::expand() const {
  return expand_from(*grid_, anchor_values_, normalizer_);
}

BasisFunction build_basis(std::shared_ptr<const GridInstance> grid, GridPoint anchor) {
  return BasisFunction(std::move(grid), anchor);
}

std::vector<BasisFunction> build_bases(const std::shared_ptr<const GridInstance>& grid,
                                       const CheckerboardSet& set) {
  std::vector<BasisFunction> bases;
  bases.reserve(set.count());
  for (const auto& pt : set.points) bases.emplace_back(grid, pt);
  return bases;
}

double eval_L(const BasisFunction& basis, Point point) { return basis(point.x, point.y); }

double max_delta_error(const std::vector<BasisFunction>& bases, const CheckerboardSet& set) {
  if (bases.empty()) return 0.0;
  const auto& grid = bases.front().grid();
  std::vector<AxisValues> values;
  values.reserve(set.count());
  for (const auto& pt : set.points) values.push_back(AxisValues::at_node(grid, pt.r, pt.u));
  double worst = 0.0;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::size_t j = 0; j < values.size(); ++j) {
      const double expected = (i == j) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(bases[i](values[j]) - expected));
    }
  }
  return worst;
}

}  // namespace cblagrange
