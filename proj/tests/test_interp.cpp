#include <cmath>
#include <memory>
#include <random>

#include <gtest/gtest.h>

#include "cblagrange/errors.hpp"
#include "cblagrange/interp.hpp"
#include "cblagrange/linalg.hpp"
#include "cblagrange/presets.hpp"
#include "cblagrange/verify.hpp"
#include "test_util.hpp"

using namespace cblagrange;

namespace {

std::shared_ptr<const GridInstance> shared(GridInstance g) {
  return std::make_shared<const GridInstance>(std::move(g));
}

// Null-space membership of f against the Vandermonde matrix of `set`,
// relative to f's coefficient size.
double vandermonde_residual(const MonomialPoly& f, const CheckerboardSet& set) {
  const auto v = vandermonde(set, f.degree());
  const Eigen::Map<const Eigen::VectorXd> c(f.coeffs().data(), static_cast<Eigen::Index>(f.size()));
  return (v * c).cwiseAbs().maxCoeff() / std::max(1.0, c.cwiseAbs().maxCoeff());
}

}  // namespace

TEST(Interpolate, ConstantFunction) {
  const auto g = shared(random_grid(4, 2, 1));
  const auto p = interpolate(g, 0, [](double, double) { return 1.0; });
  for (const auto& pt : p.nodes().points) EXPECT_NEAR(p(pt.x, pt.y), 1.0, 1e-10);
  // Off the nodes the deviation from 1 is a vanishing polynomial.
  auto dev = p.expand();
  dev.at(0, 0) -= 1.0;
  EXPECT_LT(vandermonde_residual(dev, build_checkerboard(*g, 0)), 1e-9);
}

TEST(Interpolate, IdentityOnTwoNodes) {
  const auto g = shared(GridInstance::from_coeffs(RecurrenceCoeffs({2.0}, {0.0}), RecurrenceCoeffs({2.0}, {0.0})));
  const auto p = interpolate(g, 0, [](double x, double) { return x; });
  EXPECT_NEAR(eval_interpolant(p, {0.5, 0.5}), 0.5, 1e-15);
  EXPECT_NEAR(eval_interpolant(p, {-0.5, -0.5}), -0.5, 1e-15);
}

TEST(Interpolate, ZeroSamples) {
  const auto g = shared(random_grid(3, 2, 2));
  const auto p = interpolate(g, 1, [](double, double) { return 0.0; });
  EXPECT_EQ(p(0.1, 0.2), 0.0);
}

TEST(Interpolate, SampleKeys) {
  const auto g = shared(random_grid(1, 1, 3));
  std::map<std::pair<int, int>, double> s{{{0, 0}, 1.0}, {{0, 2}, 2.0}, {{1, 1}, 3.0}};
  const auto p = interpolate(g, 0, s);
  EXPECT_NEAR(p(g->xnodes()[1], g->ynodes()[1]), 3.0, 1e-12);
  auto missing = s;
  missing.erase({1, 1});
  EXPECT_THROW(interpolate(g, 0, missing), ValidationError);
  auto extra = s;
  extra[{1, 0}] = 4.0;
  EXPECT_THROW(interpolate(g, 0, extra), ValidationError);
}

TEST(Interpolate, NodeReproduction) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> noise(0.0, 10.0);
  for (int n = 1; n <= 12; ++n) {
    for (int s : {0, 3, 6}) {
      const auto g = shared(random_grid(n, s, cbl_test::sweep_seed(n, s, 1)));
      const int tau = n % 2;
      const auto set = build_checkerboard(*g, tau);
      std::vector<double> f(set.count());
      double fmax = 0.0;
      for (auto& v : f) {
        v = noise(rng);
        fmax = std::max(fmax, std::abs(v));
      }
      const Interpolant p(g, tau, f);
      for (std::size_t i = 0; i < set.count(); ++i) {
        EXPECT_LE(std::abs(p(set.points[i].x, set.points[i].y) - f[i]), 1e-8 * fmax) << "n=" << n << " s=" << s;
      }
    }
  }
}

TEST(Interpolate, Linearity) {
  const auto g = shared(random_grid(6, 3, 7));
  const auto f = [](double x, double y) { return std::sin(x) + y * y; };
  const auto h = [](double x, double y) { return std::exp(x * y); };
  const double alpha = 2.5;
  const double beta = -0.75;
  const auto pf = interpolate(g, 0, f);
  const auto ph = interpolate(g, 0, h);
  const auto pc = interpolate(g, 0, [&](double x, double y) { return alpha * f(x, y) + beta * h(x, y); });
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 30; ++t) {
    const double x = u(rng);
    const double y = u(rng);
    const double want = alpha * pf(x, y) + beta * ph(x, y);
    EXPECT_LE(std::abs(pc(x, y) - want), 1e-10 * std::max(1.0, std::abs(want)));
  }
}

TEST(Interpolate, QuotientReproduction) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n : {2, 3, 5, 6}) {
    for (int s : {1, 2, 4}) {
      const auto g = shared(random_grid(n, s, cbl_test::sweep_seed(n, s, 2)));
      const int d = n + s / 2;
      MonomialPoly r(d);
      for (double& c : r.coeffs()) c = u(rng);
      const auto p = interpolate(g, 1, [&](double x, double y) { return r(x, y); });
      auto diff = p.expand();
      diff -= r;
      const auto set = build_checkerboard(*g, 1);
      const auto inst = scale_to_unit_box(*g, set);
      // Null-space test on the [-1, 1] instance where the rank cutoff is meaningful.
      EXPECT_LT(vandermonde_residual(diff, set), 1e-8) << "n=" << n << " s=" << s;
      Matrix stacked(1, static_cast<Eigen::Index>(diff.size()));
      for (std::size_t i = 0; i < diff.size(); ++i) stacked(0, static_cast<Eigen::Index>(i)) = diff.coeffs()[i];
      EXPECT_EQ(numerical_rank(vandermonde(set, d)), static_cast<int>(set.count()));
    }
  }
}

TEST(Interpolate, RungeTrendOnPadua) {
  const auto runge = [](double x, double y) { return 1.0 / (1.0 + 25.0 * (x * x + y * y)); };
  double previous = INFINITY;
  for (int n = 4; n <= 12; n += 2) {
    const auto p = interpolate(shared(padua_grid(n)), 0, runge);
    double sup = 0.0;
    for (int i = 0; i <= 40; ++i) {
      for (int j = 0; j <= 40; ++j) {
        const double x = -1.0 + i / 20.0;
        const double y = -1.0 + j / 20.0;
        sup = std::max(sup, std::abs(p(x, y) - runge(x, y)));
      }
    }
    EXPECT_LT(sup, previous) << "n=" << n;
    previous = sup;
  }
}
