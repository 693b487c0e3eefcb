// Polar sampling grids and grid-check verdicts.
#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace gft {

using cplx = std::complex<double>;

// Radii are checked strictly inside the unit disc: every r must satisfy
// 0 < r <= 1 - boundary_margin.
struct GridSpec {
  std::vector<double> radii;
  std::size_t angular_samples = 720;
  double boundary_margin = 1e-9;

  static GridSpec default_grid() {
    GridSpec g;
    g.radii = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99};
    return g;
  }

  void validate() const {
    if (radii.empty()) throw std::invalid_argument("grid: no radii");
    if (angular_samples == 0) throw std::invalid_argument("grid: no angular samples");
    for (double r : radii)
      if (!(r > 0.0) || !(r <= 1.0 - boundary_margin))
        throw std::invalid_argument("grid: radius outside (0, 1 - margin]");
  }

  std::size_t point_count() const { return radii.size() * angular_samples; }
};

// Visits points in lexicographic (radius, angle) order so that the first
// reported violation is deterministic.  Angles are 2*pi*j / angular_samples.
template <typename Fn>
void for_each_grid_point(const GridSpec& grid, Fn&& fn) {
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  for (double r : grid.radii) {
    for (std::size_t j = 0; j < grid.angular_samples; ++j) {
      const double phi = kTwoPi * double(j) / double(grid.angular_samples);
      fn(std::polar(r, phi));
    }
  }
}

enum class Outcome { HoldsOnGrid, ViolatedAt };

struct Witness {
  std::complex<double> z;
  std::complex<double> value;
  std::string reason;
};

// Result of evaluating a pointwise predicate over a grid, together with the
// extremes of a monitored real quantity (whatever the check deems relevant:
// a defining quartic, a real part, a margin).
struct Verdict {
  Outcome outcome = Outcome::HoldsOnGrid;
  std::optional<Witness> witness;
  double stat_min = 0.0;
  double stat_max = 0.0;
  std::size_t points = 0;

  bool holds() const { return outcome == Outcome::HoldsOnGrid; }
};

namespace detail {

// Shared fold for grid checks: predicate returns (ok, monitored value).
template <typename Check>
Verdict run_grid_check(const GridSpec& grid, Check&& check) {
  grid.validate();
  Verdict v;
  bool first = true;
  bool done = false;
  for_each_grid_point(grid, [&](std::complex<double> z) {
    if (done) return;
    auto [ok, monitored, value, reason] = check(z);
    if (first) {
      v.stat_min = v.stat_max = monitored;
      first = false;
    } else {
      if (monitored < v.stat_min) v.stat_min = monitored;
      if (monitored > v.stat_max) v.stat_max = monitored;
    }
    ++v.points;
    if (!ok) {
      v.outcome = Outcome::ViolatedAt;
      v.witness = Witness{z, value, reason};
      done = true;
    }
  });
  return v;
}

}  // namespace detail

}  // namespace gft
