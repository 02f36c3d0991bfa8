#include "cblagrange/interp.hpp"

#include <cmath>
#include <string>

#include "cblagrange/errors.hpp"

namespace cblagrange {

Interpolant::Interpolant(std::shared_ptr<const GridInstance> grid, int tau,
                         std::vector<double> samples)
    : grid_(std::move(grid)), samples_(std::move(samples)) {
  if (!grid_) throw ValidationError("interpolant requires a grid");
  set_ = build_checkerboard(*grid_, tau);
  if (samples_.size() != set_.count()) {
    throw ValidationError("expected " + std::to_string(set_.count()) + " samples, got " +
                          std::to_string(samples_.size()));
  }
  for (double f : samples_) {
    if (!std::isfinite(f)) throw ValidationError("non-finite sample value");
  }
  bases_ = build_bases(grid_, set_);
}

double Interpolant::operator()(double x, double y) const {
  const auto at = AxisValues::at(*grid_, {x, y});
  double total = 0.0;
  for (std::size_t i = 0; i < bases_.size(); ++i) {
    if (samples_[i] != 0.0) total += samples_[i] * bases_[i](at);
  }
  return total;
}

MonomialPoly Interpolant::expand() const {
  MonomialPoly total(grid_->n() + grid_->delta());
  for (std::size_t i = 0; i < bases_.size(); ++i) {
    auto term = bases_[i].expand();
    term *= samples_[i];
    total += term;
  }
  return total;
}

Interpolant interpolate(std::shared_ptr<const GridInstance> grid, int tau,
                        const std::map<std::pair<int, int>, double>& samples) {
  if (!grid) throw ValidationError("interpolate requires a grid");
  const auto set = build_checkerboard(*grid, tau);
  std::vector<double> values;
  values.reserve(set.count());
  for (const auto& pt : set.points) {
    const auto it = samples.find({pt.r, pt.u});
    if (it == samples.end()) {
      throw ValidationError("missing sample for node (" + std::to_string(pt.r) + ", " +
                            std::to_string(pt.u) + ")");
    }
    values.push_back(it->second);
  }
  if (samples.size() != set.count()) {
    throw ValidationError("samples contain keys outside S_tau");
  }
  return Interpolant(std::move(grid), tau, std::move(values));
}

Interpolant interpolate(std::shared_ptr<const GridInstance> grid, int tau,
                        const std::function<double(double, double)>& f) {
  if (!grid) throw ValidationError("interpolate requires a grid");
  const auto set = build_checkerboard(*grid, tau);
  std::vector<double> values;
  values.reserve(set.count());
  for (const auto& pt : set.points) values.push_back(f(pt.x, pt.y));
  return Interpolant(std::move(grid), tau, std::move(values));
}

double eval_interpolant(const Interpolant& p, Point point) { return p(point.x, point.y); }

}  // namespace cblagrange
