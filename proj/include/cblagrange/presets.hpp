#pragma once

#include <cstdint>
#include <random>

#include "cblagrange/checkerboard.hpp"

namespace cblagrange {

/// sigma = 1, x_r = cos(r pi / n), y_u = cos(u pi / (n + 1)). Requires n >= 1.
GridInstance padua_grid(int n);

/// sigma = 0, both axes the n + 1 zeros of T_{n+1}:
/// cos((2r + 1) pi / (2(n + 1))), r = 0..n.
GridInstance chebyshev_grid(int n);

/// Random valid coefficients of length n: a_k in [0.5, 3], b_k in [-1, 1],
/// reflection-symmetric, a_0 = 1 when n is even.
RecurrenceCoeffs random_coeffs(int n, std::mt19937_64& rng);

/// Grid built from random_coeffs(n) and random_coeffs(n + sigma) drawn in that
/// order from a generator seeded with `seed`.
GridInstance random_grid(int n, int sigma, std::uint64_t seed);

}  // namespace cblagrange
