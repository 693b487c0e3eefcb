// Membership machinery for the class of maps whose log-derivative stays in
// the oval region: grid tests, structural builders, the exact two-term
// exclusion criteria, and the convexity floor.
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <tuple>

#include "gft/booth.hpp"
#include "gft/errors.hpp"
#include "gft/functions.hpp"
#include "gft/grid.hpp"
#include "gft/power_series.hpp"

namespace gft {

inline constexpr double kNormalizationTol = 1e-9;
inline constexpr double kRatioZeroTol = 1e-13;

// f/z as a series: exp(int_0^z q(t)/t dt) for a driver q with q(0) = 0.
inline PowerSeries build_ratio(const PowerSeries& q) {
  return exp_series(integrate_over_t(q));
}

// f(z) = z exp(int_0^z q(t)/t dt).  The driver q must take values in the
// target oval on the disc; composing the target map with a Schwarz generator
// (overload below) guarantees that by construction.
inline SeriesMap build_member(const PowerSeries& q) {
  const PowerSeries e = build_ratio(q);
  PowerSeries f(e.order() + 1);
  for (std::size_t k = 0; k <= e.order(); ++k) f.at(k + 1) = e[k];
  return SeriesMap(std::move(f));
}

// q = w / (1 - alpha w^2) for a Schwarz generator series w.
inline PowerSeries subordinate_driver(double alpha, const SchwarzGenerator& gen,
                                      std::size_t order = kDefaultSeriesOrder) {
  const PowerSeries w = generator_series(gen, order);
  PowerSeries den = mul(w, w);
  for (std::size_t k = 0; k <= den.order(); ++k) den.at(k) *= -alpha;
  den.at(0) += 1.0;
  return div(w, den);
}

inline SeriesMap build_member(double alpha, const SchwarzGenerator& gen,
                              std::size_t order = kDefaultSeriesOrder) {
  return build_member(subordinate_driver(alpha, gen, order));
}

// Grid certificate for membership: z f'/f - 1 must stay in the oval at every
// sampled point.  ViolatedAt is conclusive; HoldsOnGrid is evidence only.
// The monitored statistic is the region's defining quartic (negative inside).
inline Verdict membership_test(const AnalyticFunction& f, double alpha, const GridSpec& grid) {
  if (std::abs(evaluate(f, cplx{})) > kNormalizationTol ||
      std::abs(derivative_at(f, cplx{}) - 1.0) > kNormalizationTol)
    throw std::invalid_argument("membership test requires f(0) = 0 and f'(0) = 1");
  const BoothRegion region(alpha);
  return detail::run_grid_check(grid, [&](cplx z) {
    const cplx fz = evaluate(f, z);
    if (std::abs(fz) < kRatioZeroTol)
      throw ZeroOfFOnGrid("membership test: f vanishes at a sampled point");
    const cplx w = z * derivative_at(f, z) / fz - 1.0;
    return std::tuple{region.contains(w), region.quartic(w), w,
                      std::string("log-derivative leaves the oval")};
  });
}

// Necessary condition only: Re(z f'/f) must stay in the horizontal strip the
// oval spans, (alpha/(alpha-1), (2-alpha)/(1-alpha)).
inline Verdict starlike_strip_check(const AnalyticFunction& f, double alpha,
                                    const GridSpec& grid) {
  if (std::abs(evaluate(f, cplx{})) > kNormalizationTol ||
      std::abs(derivative_at(f, cplx{}) - 1.0) > kNormalizationTol)
    throw std::invalid_argument("strip check requires f(0) = 0 and f'(0) = 1");
  const double lo = alpha / (alpha - 1.0);
  const double hi = (2.0 - alpha) / (1.0 - alpha);
  return detail::run_grid_check(grid, [&](cplx z) {
    const cplx fz = evaluate(f, z);
    if (std::abs(fz) < kRatioZeroTol)
      throw ZeroOfFOnGrid("strip check: f vanishes at a sampled point");
    const cplx v = z * derivative_at(f, z) / fz;
    const double re = v.real();
    return std::tuple{re > lo && re < hi, re, v,
                      std::string("log-derivative escapes the strip")};
  });
}

enum class ExclusionCondition { none, cond_i, cond_ii, cond_iii, cond_iv };

inline const char* exclusion_label(ExclusionCondition c) {
  switch (c) {
    case ExclusionCondition::cond_i: return "i";
    case ExclusionCondition::cond_ii: return "ii";
    case ExclusionCondition::cond_iii: return "iii";
    case ExclusionCondition::cond_iv: return "iv";
    default: return "none";
  }
}

// Diagnostics for z + c z^n: x1 and x2 are the real endpoints of the disc
// swept by (n-1)u/(1+u) over |u| = |c|.
struct ExclusionResult {
  ExclusionCondition condition = ExclusionCondition::none;
  double x1 = 0.0;
  double x2 = 0.0;
  bool excluded() const { return condition != ExclusionCondition::none; }
};

// Exact sufficient conditions under which z + c z^n lies outside the class.
// Evaluated literally, first match wins; no match means inconclusive (they
// are not necessary).  Conditions (i) and (ii) overlap: a draw satisfying
// (ii) also satisfies (i) and is reported as (i).
inline ExclusionResult two_term_nonmembership(int n, cplx c, double alpha) {
  if (n < 2) throw std::invalid_argument("two-term map needs n >= 2");
  if (!(alpha >= 0.0) || !(alpha < 1.0))
    throw std::invalid_argument("two-term exclusion: class parameter must lie in [0, 1)");
  const double m = std::abs(c);
  if (std::abs(m - 1.0) < 1e-14)
    throw DegenerateModulus("two-term exclusion: |c| = 1 leaves x1 undefined");
  ExclusionResult res;
  res.x1 = m * double(n - 1) / (m - 1.0);
  res.x2 = m * double(n - 1) / (m + 1.0);
  const double nn = double(n);
  if (1.0 / (alpha + nn * (1.0 - alpha)) < m && m < 1.0)
    res.condition = ExclusionCondition::cond_i;
  else if (nn > (3.0 - alpha) / (1.0 - alpha) &&
           1.0 / (alpha - 2.0 + nn * (1.0 - alpha)) < m && m < 1.0)
    res.condition = ExclusionCondition::cond_ii;
  else if (nn >= (2.0 - alpha) / (1.0 - alpha) && m > 1.0)
    res.condition = ExclusionCondition::cond_iii;
  else if (nn < (2.0 - alpha) / (1.0 - alpha) && m > 1.0 &&
           m < 1.0 / (2.0 - alpha + nn * (alpha - 1.0)))
    res.condition = ExclusionCondition::cond_iv;
  return res;
}

// Re(1 + z p''/p') for the shifted extremal ratio, in the reduced rational
// form 1 + (z + 2 alpha z^2)/(1 - alpha z^2); at alpha = 0 this collapses to
// 1 + z with no special casing.
inline double convexity_functional(double alpha, cplx z) {
  const cplx t = 1.0 + (z + 2.0 * alpha * z * z) / (1.0 - alpha * z * z);
  return t.real();
}

// Claimed floor 1 + (1 - 2 sqrt(a))/(a - 1) - 2 sqrt(a)/(1 + sqrt(a)), which
// simplifies to a/(1 - a).  The floor is attained in the limit z -> -1 only
// for a <= 1/4; above that the measured grid minimum drops below it (see the
// verification suite), while positivity itself still holds.
inline double convexity_floor_constant(double alpha) {
  const double s = std::sqrt(alpha);
  return 1.0 + (1.0 - 2.0 * s) / (alpha - 1.0) - 2.0 * s / (1.0 + s);
}

struct ConvexityReport {
  double grid_min = 0.0;
  double k_alpha = 0.0;
};

inline ConvexityReport convexity_check_p(double alpha, std::size_t samples = 720) {
  if (!(alpha >= 0.0) || !(alpha < 1.0))
    throw std::invalid_argument("convexity check: class parameter must lie in [0, 1)");
  if (samples == 0) throw std::invalid_argument("convexity check: no samples");
  static constexpr double kRadii[] = {0.05, 0.1, 0.2, 0.3, 0.4, 0.5,
                                      0.6,  0.7, 0.8, 0.9, 0.95, 0.99};
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  ConvexityReport rep;
  rep.k_alpha = convexity_floor_constant(alpha);
  bool first = true;
  for (double r : kRadii) {
    for (std::size_t j = 0; j < samples; ++j) {
      const double t = convexity_functional(alpha, std::polar(r, kTwoPi * double(j) / double(samples)));
      if (first || t < rep.grid_min) rep.grid_min = t;
      first = false;
    }
  }
  return rep;
}

}  // namespace gft
