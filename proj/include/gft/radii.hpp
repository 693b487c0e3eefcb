// Radius of starlikeness of order gamma, with a bisection oracle as ground
// truth, and the inverse bound on the class parameter.
#pragma once

#include <cmath>
#include <stdexcept>

namespace gft {

// h(r) = 1 - r/(1 - alpha r^2), strictly decreasing on [0, 1) for
// alpha in [0, 1): h'(r) = -(1 + alpha r^2)/(1 - alpha r^2)^2 < 0.
inline double h_function(double alpha, double r) {
  return 1.0 - r / (1.0 - alpha * r * r);
}

namespace detail {

// Root of h(r) = gamma.  Monotonicity makes plain bisection unconditionally
// safe; bracket stops just short of 1 so the denominator stays positive.
inline double bisect_radius(double alpha, double gamma) {
  double lo = 0.0, hi = 1.0 - 1e-15;
  if (h_function(alpha, hi) > gamma) return hi;
  for (int i = 0; i < 200 && hi - lo > 1e-14; ++i) {
    const double mid = 0.5 * (lo + hi);
    (h_function(alpha, mid) > gamma ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

struct RadiusResult {
  double alpha = 0.0;
  double gamma = 0.0;
  double r_closed = 0.0;       // positive root of alpha(1-g) r^2 + r - (1-g) = 0
  double r_bisect = 0.0;       // root of h(r) = gamma located by bisection
  double agreement = 0.0;      // |r_closed - r_bisect|
  double paper_formula_value = 0.0;  // published closed form; matches only at gamma = 0
};

// Largest disc on which every class member is starlike of order gamma.  The
// defining equation is h(r) = gamma; its positive root has the stable form
// 2(1-g) / (1 + sqrt(1 + 4 alpha (1-g)^2)), which degrades gracefully to
// 1 - gamma as alpha -> 0.  The published variant replaces (1-g)^2 by (1-g)
// under the radical; it solves a different equation for gamma > 0 and is
// carried only as an audit value.
inline RadiusResult radius_starlike(double alpha, double gamma) {
  if (!(alpha >= 0.0) || !(alpha < 1.0))
    throw std::invalid_argument("radius: class parameter must lie in [0, 1)");
  if (!(gamma >= 0.0) || !(gamma < 1.0))
    throw std::invalid_argument("radius: order must lie in [0, 1)");
  const double g1 = 1.0 - gamma;
  RadiusResult res;
  res.alpha = alpha;
  res.gamma = gamma;
  res.r_closed = 2.0 * g1 / (1.0 + std::sqrt(1.0 + 4.0 * alpha * g1 * g1));
  res.r_bisect = detail::bisect_radius(alpha, gamma);
  res.agreement = std::abs(res.r_closed - res.r_bisect);
  res.paper_formula_value = 2.0 / (1.0 + std::sqrt(1.0 + 4.0 * alpha * g1));
  return res;
}

// |h(r*) - gamma| at the bisection root: the starlikeness margin vanishes
// there, so the residual certifies sharpness of the radius.
inline double sharpness_check(double alpha, double gamma) {
  const double r = detail::bisect_radius(alpha, gamma);
  const double a_at = 1.0 + (-r) / (1.0 - alpha * r * r);
  return std::abs(a_at - gamma);
}

// Supremum of class parameters for which every member is starlike on
// |z| < r: min((1-r)/r^2, 1), the second clamp being the class constraint.
inline double alpha_for_radius(double r) {
  if (!(r > 0.0) || !(r <= 1.0))
    throw std::invalid_argument("alpha bound: radius must lie in (0, 1]");
  const double raw = (1.0 - r) / (r * r);
  return raw < 1.0 ? raw : 1.0;
}

}  // namespace gft
