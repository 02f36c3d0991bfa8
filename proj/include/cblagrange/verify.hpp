#pragma once

#include "cblagrange/checkerboard.hpp"
#include "cblagrange/lagrange.hpp"
#include "cblagrange/linalg.hpp"
#include "cblagrange/vanishing.hpp"

namespace cblagrange {

/// N x (d+1)(d+2)/2 matrix of x_i^j y_i^k in MonomialPoly column order.
Matrix vandermonde(const CheckerboardSet& set, int d);

/// Same matrix in extended precision, with points located on the grid by
/// (r, u) and read from its extended-precision nodes.
MatrixExt vandermonde_ext(const GridInstance& grid, const CheckerboardSet& set, int d);

/// Numerical rank with the 1e-10 relative singular-value cutoff.
int rank(const Matrix& m);

/// The grid and point set mapped axis-wise onto [-1, 1]. Recurrence
/// coefficients are transformed so every polynomial keeps its values at
/// corresponding points; membership and vanishing statements carry over.
struct ScaledInstance {
  GridInstance grid;
  CheckerboardSet set;
};

ScaledInstance scale_to_unit_box(const GridInstance& grid, const CheckerboardSet& set);

enum class NullspaceStatus { kOk, kDimensionMismatch, kSpanMismatch };

const char* to_string(NullspaceStatus s);

struct NullspaceReport {
  int nullspace_dim = 0;
  int M = 0;
  int combined_rank = 0;
  NullspaceStatus status = NullspaceStatus::kOk;

  bool ok() const { return status == NullspaceStatus::kOk; }
};

/// Compares the Vandermonde null space of `set` (degree n + delta) with
/// span(Q) built from the grid: dimensions, then the rank of the stacked
/// [null-space basis; Q rows]. Runs on the unit-box scaled instance.
NullspaceReport nullspace_equals_Q(const GridInstance& grid, const CheckerboardSet& set);

/// Minimum-norm least-squares solution of V L = I; column i holds the
/// monomial coefficients of the i-th Lagrange polynomial. Throws
/// NumericalError when rank(V) < N.
Matrix oracle_lagrange(const CheckerboardSet& set, int d);
/// Same, solved in extended precision on the grid's extended nodes.
Matrix oracle_lagrange(const GridInstance& grid, const CheckerboardSet& set, int d);

/// True when every column difference between `oracle` and the expansions of
/// `bases` lies in span(Q) (stacked rank equals Q's size).
bool difference_in_span(const Matrix& oracle, const std::vector<BasisFunction>& bases,
                        const QuotientBasis& q);

struct VerifyReport {
  int rank = 0;
  int N_tau = 0;
  int M = 0;
  int nullspace_dim = 0;
  int combined_rank = 0;
  bool span_equal = false;
  double max_delta_error = 0.0;
  bool oracle_checked = false;
  bool oracle_in_span = false;

  bool rank_ok() const { return rank == N_tau; }
  bool delta_ok() const { return max_delta_error < 1e-9; }
  bool passed() const;
};

struct VerifyOptions {
  bool check_oracle = true;
};

/// Runs every check on one instance. `set` is normally build_checkerboard(grid, tau);
/// a modified point set (e.g. with a duplicated node) is checked as given.
VerifyReport verify_instance(const GridInstance& grid, const CheckerboardSet& set,
                             const VerifyOptions& options = {});

}  // namespace cblagrange
