#pragma once

#include <cstdint>
#include <vector>

#include "cblagrange/checkerboard.hpp"
#include "cblagrange/monomial.hpp"

namespace cblagrange {

/// Case I: sigma odd. Case II: sigma even, n odd. Case III: sigma and n even.
enum class QuotientCase { kI, kII, kIII };

const char* to_string(QuotientCase c);

/// Basis of a subspace of polynomials in P_{n+delta} vanishing on S_tau,
/// with dim = (n+delta+1)(n+delta+2)/2 - N_tau.
struct QuotientBasis {
  std::vector<MonomialPoly> elements;
  QuotientCase qcase;
  int M;
};

QuotientCase quotient_case(int n, int sigma);

/// Closed form: delta(delta+1)/2, plus m (case II, n = 2m-1), plus m + tau
/// (case III, n = 2m).
std::int64_t quotient_dimension(std::int64_t n, std::int64_t sigma, int tau);

/// omega(x) x^j y^k for j + k <= delta - 1, omega(x) = prod_r (x - x_r),
/// as polynomials of degree n + delta. Empty when delta = 0.
std::vector<MonomialPoly> build_V(const GridInstance& grid);

/// V plus, in cases II and III, the generators
///   p_{n-j}(x) q_{j+delta}(y) - (-1)^tau p_j(x) q_{n+delta-j}(y)
/// for 0 <= j <= m-1 (case II) or 0 <= j <= m-1+tau (case III).
/// Every element is scaled to unit max coefficient. Throws ValidationError if
/// an element does not vanish on S_tau or the elements are dependent.
QuotientBasis build_Q(const GridInstance& grid, int tau);

/// max |f(node)| over `set`, divided by the largest sum_jk |c_jk| |x|^j |y|^k there.
double relative_vanishing_error(const MonomialPoly& f, const CheckerboardSet& set);

}  // namespace cblagrange
