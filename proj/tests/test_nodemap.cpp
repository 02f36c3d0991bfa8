#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "cblagrange/errors.hpp"
#include "cblagrange/nodemap.hpp"
#include "cblagrange/presets.hpp"
#include "test_util.hpp"

using namespace cblagrange;

namespace {

void expect_nodes(const NodeSequence& got, const std::vector<double>& want, double tol) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(got[i], want[i], tol) << "index " << i;
}

void expect_coeffs(const RecurrenceCoeffs& got, const std::vector<double>& a,
                   const std::vector<double>& b, double tol) {
  ASSERT_EQ(got.n(), static_cast<int>(a.size()));
  for (int k = 0; k < got.n(); ++k) {
    EXPECT_NEAR(got.a(k), a[static_cast<std::size_t>(k)], tol) << "a_" << k;
    EXPECT_NEAR(got.b(k), b[static_cast<std::size_t>(k)], tol) << "b_" << k;
  }
}

}  // namespace

TEST(NodeSequence, Validation) {
  EXPECT_THROW(NodeSequence(std::vector<double>{}), ValidationError);
  EXPECT_THROW(NodeSequence({1.0, 1.0}), ValidationError);
  EXPECT_THROW(NodeSequence({0.0, 1.0}), ValidationError);
  EXPECT_THROW(NodeSequence({1.0, NAN}), ValidationError);
  EXPECT_THROW(NodeSequence({1.0, 0.5, 0.5 - 1e-13}), ValidationError);
  EXPECT_NO_THROW(NodeSequence({1.0, 0.5, 0.5 - 1e-11}));
  EXPECT_NO_THROW(NodeSequence({3.0}));
}

TEST(NodesFromCoeffs, Examples) {
  expect_nodes(nodes_from_coeffs(RecurrenceCoeffs({2.0}, {0.0})), {0.5, -0.5}, 1e-15);
  expect_nodes(nodes_from_coeffs(RecurrenceCoeffs({1.0, 2.0}, {0.0, 0.0})), {1.0, 0.0, -1.0}, 1e-15);
  expect_nodes(nodes_from_coeffs(RecurrenceCoeffs({1.0, 2.0, 2.0}, {0.0, 0.0, 0.0})),
               {1.0, 0.5, -0.5, -1.0}, 1e-15);
}

TEST(NodesFromCoeffs, ChebyshevFamilyGivesExtrema) {
  for (int n = 1; n <= 16; ++n) {
    const auto x = nodes_from_coeffs(chebyshev_like_coeffs(n));
    for (int r = 0; r <= n; ++r) EXPECT_NEAR(x[static_cast<std::size_t>(r)], std::cos(r * std::numbers::pi / n), 1e-14);
  }
}

TEST(NodesFromCoeffs, RequiresPositiveLength) {
  EXPECT_THROW(nodes_from_coeffs(RecurrenceCoeffs{}), ValidationError);
}

TEST(NodesFromCoeffs, AlternationAndInterleaving) {
  std::mt19937_64 rng(12);
  for (int n = 1; n <= 12; ++n) {
    for (int rep = 0; rep < 4; ++rep) {
      const auto c = random_coeffs(n, rng);
      const auto x = nodes_from_coeffs(c);
      EXPECT_LT(alternation_error(c, x.values()), 1e-9) << "n=" << n;
      if (n % 2 == 1) {
        // x_0 > u_1 > x_1 > v_1 > ... with u, v the zeros of p_m, p_{m-1}
        const int m = (n + 1) / 2;
        const auto u = zeros_of(c, m);
        for (int i = 0; i < m; ++i) {
          EXPECT_GT(x[static_cast<std::size_t>(2 * i)], u[static_cast<std::size_t>(i)]);
          EXPECT_GT(u[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(2 * i + 1)]);
        }
      }
    }
  }
}

TEST(CoeffsFromNodes, Examples) {
  expect_coeffs(coeffs_from_nodes(NodeSequence({0.5, -0.5})), {2.0}, {0.0}, 1e-9);
  expect_coeffs(coeffs_from_nodes(NodeSequence({1.0, 0.0, -1.0})), {1.0, 2.0}, {0.0, 0.0}, 1e-9);
  expect_coeffs(coeffs_from_nodes(NodeSequence({1.0, 0.5, -0.5, -1.0})), {1.0, 2.0, 2.0},
                {0.0, 0.0, 0.0}, 1e-9);
}

TEST(CoeffsFromNodes, TwoNodeClosedForm) {
  const double x0 = 2.5;
  const double x1 = -0.25;
  const auto c = coeffs_from_nodes(NodeSequence({x0, x1}));
  const double a0 = 2.0 / (x0 - x1);
  expect_coeffs(c, {a0}, {-a0 * (x0 + x1) / 2}, 1e-10);
}

TEST(CoeffsFromNodes, EvenNormalization) {
  InverseMapOptions opts;
  opts.even_a0 = 2.5;
  const auto c = coeffs_from_nodes(NodeSequence({1.0, 0.2, -0.3, -0.6, -1.0}), opts);
  EXPECT_DOUBLE_EQ(c.a(0), 2.5);
  opts.even_a0 = -1.0;
  EXPECT_THROW(coeffs_from_nodes(NodeSequence({1.0, 0.0, -1.0}), opts), ValidationError);
}

TEST(CoeffsFromNodes, SingleNode) { EXPECT_EQ(coeffs_from_nodes(NodeSequence({0.3})).n(), 0); }

TEST(CoeffsFromNodes, RoundTripCoefficients) {
  std::mt19937_64 rng(31);
  for (int n = 1; n <= 12; ++n) {
    for (int rep = 0; rep < 3; ++rep) {
      const auto c = random_coeffs(n, rng);
      const auto back = coeffs_from_nodes(nodes_from_coeffs(c));
      for (int k = 0; k < n; ++k) {
        EXPECT_LE(cbl_test::rel_err(back.a(k), c.a(k)), 1e-7) << "n=" << n << " a_" << k;
        EXPECT_LE(cbl_test::rel_err(back.b(k), c.b(k)), 1e-7) << "n=" << n << " b_" << k;
      }
    }
  }
}

TEST(CoeffsFromNodes, RoundTripNodes) {
  std::mt19937_64 rng(41);
  for (int n = 1; n <= 12; ++n) {
    for (int rep = 0; rep < 3; ++rep) {
      const NodeSequence x(cbl_test::random_nodes(n, rng));
      const auto back = nodes_from_coeffs(coeffs_from_nodes(x));
      EXPECT_LE(cbl_test::max_abs_diff(back.values(), x.values()), 1e-8 * x.span_width()) << "n=" << n;
    }
  }
}

TEST(CoeffsFromNodes, ClusteredNodes) {
  // Geometric clustering toward the right end; needs more than one Newton phase.
  std::vector<double> x;
  for (int i = 0; i <= 8; ++i) x.push_back(1.0 - 2.0 * (std::pow(1.6, i) - 1) / (std::pow(1.6, 8) - 1));
  const NodeSequence nodes(x);
  const auto back = nodes_from_coeffs(coeffs_from_nodes(nodes));
  EXPECT_LE(cbl_test::max_abs_diff(back.values(), nodes.values()), 1e-8 * nodes.span_width());
}

TEST(GammaRescale, Example) {
  const auto c = gamma_rescale(RecurrenceCoeffs({1.0, 2.0}, {0.0, 0.0}), 3.0);
  expect_coeffs(c, {3.0, 2.0 / 3.0}, {0.0, 0.0}, 1e-15);
  expect_nodes(nodes_from_coeffs(c), {1.0, 0.0, -1.0}, 1e-14);
}

TEST(GammaRescale, IdentityAndErrors) {
  std::mt19937_64 rng(2);
  const auto c = random_coeffs(6, rng);
  EXPECT_EQ(gamma_rescale(c, 1.0), c);
  EXPECT_THROW(gamma_rescale(random_coeffs(5, rng), 2.0), ValidationError);
  EXPECT_THROW(gamma_rescale(c, 0.0), ValidationError);
  EXPECT_THROW(gamma_rescale(c, -1.0), ValidationError);
}

TEST(GammaRescale, NodeInvariance) {
  std::mt19937_64 rng(13);
  for (int n = 2; n <= 12; n += 2) {
    const auto c = random_coeffs(n, rng);
    const auto x = nodes_from_coeffs(c);
    for (double g : {0.5, 2.0, 5.0}) {
      const auto y = nodes_from_coeffs(gamma_rescale(c, g));
      EXPECT_LE(cbl_test::max_abs_diff(x.values(), y.values()), 1e-9) << "n=" << n << " g=" << g;
    }
  }
}
