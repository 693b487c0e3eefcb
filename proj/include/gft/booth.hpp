// The oval region swept by z / (1 - alpha z^2) on the unit disc, its defining
// quartic, and the map itself.
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <tuple>

#include "gft/errors.hpp"
#include "gft/grid.hpp"

namespace gft {

inline constexpr double kPoleTolerance = 1e-14;
inline constexpr double kBoundaryQuarticBand = 1e-12;

// w = z / (1 - alpha z^2).  At alpha = 1 the denominator vanishes at z = ±1,
// so callers on the closed disc must stay off those points.
inline cplx lemniscate_map(double alpha, cplx z) {
  const cplx den = 1.0 - alpha * z * z;
  if (std::abs(den) < kPoleTolerance)
    throw PoleAtZ("lemniscate_map: pole of the target map");
  return z / den;
}

// d/dz of the map: (1 + alpha z^2) / (1 - alpha z^2)^2.
inline cplx lemniscate_map_derivative(double alpha, cplx z) {
  const cplx den = 1.0 - alpha * z * z;
  if (std::abs(den) < kPoleTolerance)
    throw PoleAtZ("lemniscate_map_derivative: pole of the target map");
  return (1.0 + alpha * z * z) / (den * den);
}

enum class RegionSide { inside, boundary_indeterminate, outside };

// Open oval { (x^2+y^2)^2 < x^2/(1-alpha)^2 + y^2/(1+alpha)^2 } together with
// the origin.  For alpha in (0,1) this is the interior of a Booth lemniscate;
// at alpha = 0 it degenerates to the open unit disc.
class BoothRegion {
 public:
  explicit BoothRegion(double alpha) : alpha_(alpha) {
    if (!(alpha >= 0.0) || !(alpha < 1.0))
      throw std::invalid_argument("region parameter must lie in [0, 1)");
    inv_minus_ = 1.0 / ((1.0 - alpha) * (1.0 - alpha));
    inv_plus_ = 1.0 / ((1.0 + alpha) * (1.0 + alpha));
  }

  double alpha() const { return alpha_; }

  // Negative inside, zero on the boundary, positive outside.
  double quartic(cplx w) const {
    const double x = w.real(), y = w.imag();
    const double s = x * x + y * y;
    return s * s - x * x * inv_minus_ - y * y * inv_plus_;
  }

  RegionSide classify(cplx w) const {
    if (w == cplx{}) return RegionSide::inside;
    const double q = quartic(w);
    if (std::abs(q) < kBoundaryQuarticBand) return RegionSide::boundary_indeterminate;
    return q < 0.0 ? RegionSide::inside : RegionSide::outside;
  }

  bool contains(cplx w) const { return w == cplx{} || quartic(w) < 0.0; }

  // Image of the unit circle point e^{i phi}; parameterizes the boundary.
  cplx boundary_point(double phi) const {
    return lemniscate_map(alpha_, std::polar(1.0, phi));
  }

  double re_lower() const { return 1.0 / (alpha_ - 1.0); }
  double re_upper() const { return 1.0 / (1.0 - alpha_); }

 private:
  double alpha_;
  double inv_minus_;
  double inv_plus_;
};

// Checks 1/(alpha-1) < Re(z/(1-alpha z^2)) < 1/(1-alpha) over the grid,
// monitoring the real part itself.
inline Verdict check_re_bounds(double alpha, const GridSpec& grid) {
  const BoothRegion region(alpha);
  const double lo = region.re_lower(), hi = region.re_upper();
  return detail::run_grid_check(grid, [&](cplx z) {
    const cplx w = lemniscate_map(alpha, z);
    const double re = w.real();
    const bool ok = re > lo && re < hi;
    return std::tuple{ok, re, w, std::string("real part escapes the strip")};
  });
}

// Signed curvature factor Re(1 + z F''/F') of the boundary image of the unit
// circle, minimized over phi.  With u = alpha z^2 the quantity is
// 1 + 2u(3 + u)/(1 - u^2).
inline double curvature_functional(double alpha, double phi) {
  const cplx z = std::polar(1.0, phi);
  const cplx u = alpha * z * z;
  const cplx t = 1.0 + 2.0 * u * (3.0 + u) / (1.0 - u * u);
  return t.real();
}

struct CurvatureScan {
  double minimum;
  double phi_at_min;
};

inline CurvatureScan curvature_min(double alpha, std::size_t samples = 4096) {
  if (!(alpha >= 0.0) || !(alpha < 1.0))
    throw std::invalid_argument("curvature scan parameter must lie in [0, 1)");
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  CurvatureScan scan{curvature_functional(alpha, 0.0), 0.0};
  for (std::size_t j = 1; j < samples; ++j) {
    const double phi = kTwoPi * double(j) / double(samples);
    const double t = curvature_functional(alpha, phi);
    if (t < scan.minimum) scan = {t, phi};
  }
  return scan;
}

// Parameter below which the boundary curve stays convex: the positive root of
// a^2 - 6a + 1, located by bisection on the scanned minimum.
inline double convex_boundary_threshold(std::size_t samples = 4096) {
  double lo = 0.0, hi = 0.5;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (curvature_min(mid, samples).minimum > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace gft
