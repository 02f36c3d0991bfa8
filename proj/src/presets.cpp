#include "cblagrange/presets.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "cblagrange/errors.hpp"

namespace cblagrange {

namespace {

NodeSequence cosines(int count, double numerator_step, double offset, double denominator) {
  std::vector<double> x(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    x[static_cast<std::size_t>(i)] =
        std::cos((numerator_step * i + offset) * std::numbers::pi / denominator);
  }
  return NodeSequence(std::move(x));
}

}  // namespace

GridInstance padua_grid(int n) {
  if (n < 1) throw ValidationError("padua_grid requires n >= 1");
  return GridInstance::from_nodes(cosines(n + 1, 1.0, 0.0, n), cosines(n + 2, 1.0, 0.0, n + 1));
}

GridInstance chebyshev_grid(int n) {
  if (n < 0) throw ValidationError("chebyshev_grid requires n >= 0");
  const double denom = 2.0 * (n + 1);
  return GridInstance::from_nodes(cosines(n + 1, 2.0, 1.0, denom), cosines(n + 1, 2.0, 1.0, denom));
}

RecurrenceCoeffs random_coeffs(int n, std::mt19937_64& rng) {
  if (n < 0) throw ValidationError("random_coeffs: negative length");
  if (n == 0) return RecurrenceCoeffs{};
  std::uniform_real_distribution<double> adist(0.5, 3.0);
  std::uniform_real_distribution<double> bdist(-1.0, 1.0);
  const std::size_t half = static_cast<std::size_t>(n / 2) + 1;
  std::vector<double> a(half);
  std::vector<double> b(half);
  for (std::size_t k = 0; k < half; ++k) {
    a[k] = adist(rng);
    b[k] = bdist(rng);
  }
  if (n % 2 == 0) a[0] = 1.0;
  return RecurrenceCoeffs::from_half(a, b, n);
}

GridInstance random_grid(int n, int sigma, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto xc = random_coeffs(n, rng);
  auto yc = random_coeffs(n + sigma, rng);
  return GridInstance::from_coeffs(std::move(xc), std::move(yc));
}

}  // namespace cblagrange
