#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "cblagrange/errors.hpp"
#include "cblagrange/orthopoly.hpp"
#include "cblagrange/presets.hpp"
#include "test_util.hpp"

using namespace cblagrange;

namespace {

RecurrenceCoeffs cheb(int n) {
  std::vector<double> a(static_cast<std::size_t>(n), 2.0);
  a[0] = 1.0;
  return RecurrenceCoeffs(a, std::vector<double>(static_cast<std::size_t>(n), 0.0));
}

void expect_seq(const std::vector<double>& got, const std::vector<double>& want, double tol) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], tol) << "index " << i;
}

}  // namespace

TEST(EvalSequence, FirstDegree) {
  RecurrenceCoeffs c({1.0}, {0.0});
  expect_seq(eval_sequence(c, 0.5, 1), {1.0, 0.5}, 0.0);
}

TEST(EvalSequence, ChebyshevAtCosPiOverThree) {
  expect_seq(eval_sequence(cheb(3), 0.5, 3), {1.0, 0.5, -0.5, -1.0}, 1e-15);
}

TEST(EvalSequence, ChebyshevAtOne) {
  expect_seq(eval_sequence(cheb(2), 1.0, 2), {1.0, 1.0, 1.0}, 0.0);
}

TEST(EvalSequence, Rejects) {
  const auto c = cheb(3);
  EXPECT_THROW(eval_sequence(c, std::nan(""), 2), ValidationError);
  EXPECT_THROW(eval_sequence(c, INFINITY, 2), ValidationError);
  EXPECT_THROW(eval_sequence(c, 0.0, 4), ValidationError);
  EXPECT_THROW(eval_sequence(c, 0.0, -1), ValidationError);
}

TEST(EvalSequence, ChebyshevIdentity) {
  const auto c = cheb(12);
  for (double theta : {0.1, 0.7, 1.3, 2.9}) {
    const auto p = eval_sequence(c, std::cos(theta), 12);
    for (int k = 0; k <= 12; ++k) EXPECT_NEAR(p[static_cast<std::size_t>(k)], std::cos(k * theta), 1e-13);
  }
}

TEST(RecurrenceCoeffs, Validation) {
  EXPECT_THROW(RecurrenceCoeffs({1.0, 0.0}, {0.0, 0.0}), ValidationError);
  EXPECT_THROW(RecurrenceCoeffs({1.0, -2.0}, {0.0, 0.0}), ValidationError);
  EXPECT_THROW(RecurrenceCoeffs({1.0}, {0.0, 0.0}), ValidationError);
  EXPECT_THROW(RecurrenceCoeffs({1.0, NAN}, {0.0, 0.0}), ValidationError);
  // reflection a_1 = a_2 for n = 3
  EXPECT_THROW(RecurrenceCoeffs({1.0, 2.0, 2.5}, {0.0, 0.0, 0.0}), ValidationError);
  EXPECT_THROW(RecurrenceCoeffs({1.0, 2.0, 2.0}, {0.0, 0.1, 0.0}), ValidationError);
  // a_0 is unconstrained by reflection
  EXPECT_NO_THROW(RecurrenceCoeffs({0.7, 2.0, 2.0}, {0.3, 0.1, 0.1}));
}

TEST(RecurrenceCoeffs, ReflectionToleranceSymmetrizes) {
  RecurrenceCoeffs c({1.0, 2.0, 2.0 * (1 + 5e-13)}, {0.0, 0.5, 0.5});
  EXPECT_EQ(c.a(1), c.a(2));
  EXPECT_THROW(RecurrenceCoeffs({1.0, 2.0, 2.0 * (1 + 5e-12)}, {0.0, 0.5, 0.5}), ValidationError);
}

TEST(RecurrenceCoeffs, FromHalfMirrors) {
  const std::vector<double> a{1.0, 2.0, 3.0};
  const std::vector<double> b{0.1, 0.2, 0.3};
  const auto c = RecurrenceCoeffs::from_half(a, b, 5);
  ASSERT_EQ(c.n(), 5);
  const std::vector<double> want_a{1.0, 2.0, 3.0, 3.0, 2.0};
  const std::vector<double> want_b{0.1, 0.2, 0.3, 0.3, 0.2};
  for (int k = 0; k < 5; ++k) {
    EXPECT_EQ(c.a(k), want_a[static_cast<std::size_t>(k)]);
    EXPECT_EQ(c.b(k), want_b[static_cast<std::size_t>(k)]);
  }
  EXPECT_THROW(RecurrenceCoeffs::from_half(a, b, 6), ValidationError);
}

TEST(RecurrenceCoeffs, Leading) {
  RecurrenceCoeffs c({1.5, 2.0, 2.0}, {0.0, 0.0, 0.0});
  EXPECT_DOUBLE_EQ(c.leading(0), 1.0);
  EXPECT_DOUBLE_EQ(c.leading(3), 6.0);
}

TEST(ComboZeros, ChebyshevT2) {
  const auto z = combo_zeros(cheb(2), {ComboKind::kP, 2});
  expect_seq(z, {std::sqrt(2.0) / 2, -std::sqrt(2.0) / 2}, 1e-15);
}

TEST(ComboZeros, Linear) {
  RecurrenceCoeffs c({2.0}, {0.0});
  const auto z = combo_zeros(c, {ComboKind::kP, 1});
  ASSERT_EQ(z.size(), 1u);
  EXPECT_EQ(z[0], 0.0);
}

TEST(ComboZeros, PTwoMinusPOne) {
  expect_seq(combo_zeros(cheb(3), {ComboKind::kPMinusPrev, 2}), {1.0, -0.5}, 1e-15);
  expect_seq(combo_zeros(cheb(3), {ComboKind::kPPlusPrev, 2}), {0.5, -1.0}, 1e-15);
}

TEST(ComboZeros, NextMinusPrevChebyshev) {
  // T_{m+1} - T_{m-1} = -2 sin(theta) sin(m theta): zeros cos(r pi / m), r = 0..m
  for (int m = 1; m <= 6; ++m) {
    const auto z = combo_zeros(cheb(2 * m), {ComboKind::kNextMinusPrev, m});
    ASSERT_EQ(z.size(), static_cast<std::size_t>(m + 1));
    for (int r = 0; r <= m; ++r) {
      EXPECT_NEAR(z[static_cast<std::size_t>(r)], std::cos(r * std::numbers::pi / m), 1e-13);
    }
  }
}

TEST(ComboZeros, RangeChecks) {
  const auto c = cheb(4);
  EXPECT_THROW(combo_zeros(c, {ComboKind::kP, 5}), ValidationError);
  EXPECT_THROW(combo_zeros(c, {ComboKind::kNextMinusPrev, 4}), ValidationError);
  EXPECT_THROW(combo_zeros(c, {ComboKind::kPMinusPrev, 0}), ValidationError);
}

TEST(ComboZeros, CountsAndResidualsOnRandomCoefficients) {
  std::mt19937_64 rng(77);
  for (int n = 1; n <= 14; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      const auto c = random_coeffs(n, rng);
      std::vector<std::pair<ComboSpec, int>> cases;
      if (n % 2 == 1) {
        const int m = (n + 1) / 2;
        cases = {{{ComboKind::kPMinusPrev, m}, m}, {{ComboKind::kPPlusPrev, m}, m}};
      } else {
        const int m = n / 2;
        cases = {{{ComboKind::kP, m}, m}, {{ComboKind::kNextMinusPrev, m}, m + 1}};
      }
      for (const auto& [spec, count] : cases) {
        const auto z = combo_zeros(c, spec);
        ASSERT_EQ(z.size(), static_cast<std::size_t>(count));
        for (std::size_t i = 0; i < z.size(); ++i) {
          if (i > 0) EXPECT_LT(z[i], z[i - 1]);
          // One ulp of the zero moves the value by about |f'| * ulp.
          const double h = 1e-7 * std::max(1.0, std::abs(z[i]));
          const double slope =
              std::abs(eval_combo(c, spec, z[i] + h) - eval_combo(c, spec, z[i] - h)) / (2 * h);
          EXPECT_LE(std::abs(eval_combo(c, spec, z[i])), 1e-13 * std::max(1.0, slope))
              << "n=" << n << " zero " << i;
        }
      }
    }
  }
}

TEST(ZerosOf, Interlacing) {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 12; ++n) {
    const auto c = random_coeffs(n, rng);
    for (int k = 1; k < n; ++k) {
      const auto lo = zeros_of(c, k);
      const auto hi = zeros_of(c, k + 1);
      for (int i = 0; i < k; ++i) {
        EXPECT_GT(hi[static_cast<std::size_t>(i)], lo[static_cast<std::size_t>(i)]);
        EXPECT_GT(lo[static_cast<std::size_t>(i)], hi[static_cast<std::size_t>(i + 1)]);
      }
    }
  }
}

TEST(EvalSequence, LeadingCoefficientPositivity) {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 12; ++n) {
    const auto c = random_coeffs(n, rng);
    const auto z = zeros_of(c, n);
    const auto p = eval_sequence(c, z.front() + 1.0, n);
    for (double v : p) EXPECT_GT(v, 0.0);
  }
}

TEST(EvalSequence, RecurrenceConsistency) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ux(-2.0, 2.0);
  for (int n = 2; n <= 12; ++n) {
    const auto c = random_coeffs(n, rng);
    for (int t = 0; t < 20; ++t) {
      const double x = ux(rng);
      const auto p = eval_sequence(c, x, n);
      for (int k = 1; k < n; ++k) {
        const auto i = static_cast<std::size_t>(k);
        const double lhs = p[i + 1] + p[i - 1];
        const double rhs = (c.a(k) * x + c.b(k)) * p[i];
        EXPECT_LE(std::abs(lhs - rhs), 1e-10 * std::max(1.0, std::abs(p[i + 1])));
      }
    }
  }
}

TEST(MonomialExpansion, MatchesEvaluation) {
  std::mt19937_64 rng(8);
  const auto c = random_coeffs(9, rng);
  const auto mono = monomial_expansion(c, 9);
  for (double x : {-1.3, -0.2, 0.4, 1.1}) {
    const auto p = eval_sequence(c, x, 9);
    for (int k = 0; k <= 9; ++k) {
      double v = 0.0;
      const auto& coef = mono[static_cast<std::size_t>(k)];
      for (std::size_t e = coef.size(); e-- > 0;) v = v * x + coef[e];
      EXPECT_NEAR(v, p[static_cast<std::size_t>(k)], 1e-10 * std::max(1.0, std::abs(v)));
    }
    EXPECT_DOUBLE_EQ(mono[9].back(), c.leading(9));
  }
}

TEST(AffineTransform, PreservesValues) {
  std::mt19937_64 rng(21);
  const auto c = random_coeffs(7, rng);
  const double alpha = 0.37;
  const double beta = -1.2;
  const auto t = affine_transform(c, alpha, beta);
  for (double x : {-2.0, 0.3, 1.7}) {
    const auto p = eval_sequence(c, x, 7);
    const auto q = eval_sequence(t, alpha * x + beta, 7);
    for (std::size_t k = 0; k < p.size(); ++k) {
      EXPECT_NEAR(q[k], p[k], 1e-12 * std::max(1.0, std::abs(p[k])));
    }
  }
  EXPECT_THROW(affine_transform(c, 0.0, 0.0), ValidationError);
}
