#pragma once

#include <functional>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "cblagrange/lagrange.hpp"

namespace cblagrange {

/// p(x, y) = sum_i f_i L_i(x, y) over the nodes of S_tau.
class Interpolant {
 public:
  Interpolant(std::shared_ptr<const GridInstance> grid, int tau, std::vector<double> samples);

  const GridInstance& grid() const { return *grid_; }
  int tau() const { return set_.tau; }
  const CheckerboardSet& nodes() const { return set_; }
  const std::vector<double>& samples() const { return samples_; }

  double operator()(double x, double y) const;
  MonomialPoly expand() const;

 private:
  std::shared_ptr<const GridInstance> grid_;
  CheckerboardSet set_;
  std::vector<BasisFunction> bases_;
  std::vector<double> samples_;
};

/// Samples keyed by (r, u); every node of S_tau must appear exactly once.
Interpolant interpolate(std::shared_ptr<const GridInstance> grid, int tau,
                        const std::map<std::pair<int, int>, double>& samples);

/// Samples f at the nodes of S_tau.
Interpolant interpolate(std::shared_ptr<const GridInstance> grid, int tau,
                        const std::function<double(double, double)>& f);

double eval_interpolant(const Interpolant& p, Point point);

}  // namespace cblagrange
