// Self-verification: every documented contract of the library as a named
// check.  Two checks are expected failures; their detail lines carry the
// measured values showing why the stated floor or closeness target cannot be
// met (see README, "Known discrepancies").  Detail strings never contain
// timings, only whether a budget was met, so output stays deterministic.
#pragma once

#include <chrono>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gft/booth.hpp"
#include "gft/bs_class.hpp"
#include "gft/functions.hpp"
#include "gft/grid.hpp"
#include "gft/power_series.hpp"
#include "gft/radii.hpp"
#include "gft/serialize.hpp"
#include "gft/subordination.hpp"

namespace gft {

struct CheckResult {
  std::string name;
  bool passed = false;
  bool expected_failure = false;
  std::string detail;
};

enum class CheckStatus { pass, fail, xfail, xpass };

inline CheckStatus status_of(const CheckResult& c) {
  if (c.passed) return c.expected_failure ? CheckStatus::xpass : CheckStatus::pass;
  return c.expected_failure ? CheckStatus::xfail : CheckStatus::fail;
}

inline const char* status_label(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::xfail: return "XFAIL";
    default: return "XPASS";
  }
}

// A suite is healthy when nothing failed unexpectedly and nothing expected to
// fail started passing (which would mean a documented discrepancy vanished
// and its bookkeeping is stale).
inline bool suite_ok(const std::vector<CheckResult>& results) {
  for (const CheckResult& c : results) {
    const CheckStatus s = status_of(c);
    if (s == CheckStatus::fail || s == CheckStatus::xpass) return false;
  }
  return true;
}

namespace detail {

inline double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

inline std::vector<CheckResult> run_radii_suite(std::uint64_t) {
  std::vector<CheckResult> out;

  {
    CheckResult c{"radius-limits"};
    const auto t0 = std::chrono::steady_clock::now();
    const RadiusResult near_one = radius_starlike(1.0 - 1e-8, 0.0);
    const RadiusResult near_zero = radius_starlike(1e-8, 0.0);
    const bool in_budget = detail::ms_since(t0) < 10.0;
    const double golden = 0.6180339887;
    const bool limits_ok = std::abs(near_one.r_bisect - golden) < 1e-6 &&
                           std::abs(near_zero.r_bisect - 1.0) < 1e-6;
    c.passed = limits_ok && in_budget;
    c.detail = "r(a=1-1e-8)=" + fmt17(near_one.r_bisect) +
               ", r(a=1e-8)=" + fmt17(near_zero.r_bisect) +
               ", met 10 ms budget: " + detail::yes_no(in_budget);
    out.push_back(std::move(c));
  }

  {
    CheckResult c{"radius-oracle-agreement"};
    const auto t0 = std::chrono::steady_clock::now();
    double max_gap = 0.0, max_resid = 0.0;
    for (int i = 0; i < 10; ++i) {
      const double a = 0.05 + 0.1 * i;
      for (int j = 0; j < 10; ++j) {
        const double g = 0.1 * j;
        const RadiusResult r = radius_starlike(a, g);
        max_gap = std::max(max_gap, r.agreement);
        max_resid = std::max(max_resid, sharpness_check(a, g));
      }
    }
    const bool in_budget = detail::ms_since(t0) < 1000.0;
    c.passed = max_gap < 1e-10 && max_resid < 1e-10 && in_budget;
    c.detail = "max closed-vs-bisect gap " + fmt17(max_gap) + ", max sharpness residual " +
               fmt17(max_resid) + ", met 1 s budget: " + detail::yes_no(in_budget);
    out.push_back(std::move(c));
  }

  return out;
}

inline std::vector<CheckResult> run_class_suite(std::uint64_t seed) {
  std::vector<CheckResult> out;

  {
    CheckResult c{"structural-coefficients"};
    double max_dev = 0.0;
    for (double a : {0.0, 0.1, 0.5, 0.9}) {
      const PowerSeries e = build_ratio(lemniscate_series(a, 8));
      max_dev = std::max({max_dev, std::abs(e[0] - 1.0), std::abs(e[1] - 1.0),
                          std::abs(e[2] - 0.5), std::abs(e[3] - (a + 0.5) / 3.0)});
    }
    c.passed = max_dev < 1e-12;
    c.detail = "max deviation of the first four ratio coefficients " + fmt17(max_dev);
    out.push_back(std::move(c));
  }

  {
    CheckResult c{"builder-soundness"};
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(seed ^ 0xb11dULL);
    const GridSpec grid = GridSpec::default_grid();
    std::size_t violations = 0;
    bool extremal_ok = true;
    for (double a : {0.05, 0.1, 0.3, 0.7}) {
      if (!membership_test(AnalyticFunction{ExtremalMember{a}}, a, grid).holds())
        extremal_ok = false;
      for (int t = 0; t < 25; ++t) {
        const AnalyticFunction f{build_member(a, random_generator(rng), 192)};
        if (!membership_test(f, a, grid).holds()) ++violations;
      }
    }
    const bool in_budget = detail::ms_since(t0) < 20000.0;
    c.passed = violations == 0 && extremal_ok && in_budget;
    c.detail = std::to_string(100 - violations) +
               "/100 built members hold on the default grid, extremal maps hold: " +
               detail::yes_no(extremal_ok) + ", met 20 s budget: " + detail::yes_no(in_budget);
    out.push_back(std::move(c));
  }

  {
    CheckResult c{"two-term-exclusion"};
    std::mt19937_64 rng(seed ^ 0x2222ULL);
    GridSpec grid = GridSpec::default_grid();
    grid.radii.push_back(0.999);
    grid.angular_samples = 1024;
    std::size_t not_excluded = 0, not_violated = 0, wrong_label = 0;
    const auto run_draw = [&](int n, double a, double m, ExclusionCondition expect) {
      const cplx cc = std::polar(m, 6.283185307179586 * unit_real(rng));
      const ExclusionResult res = two_term_nonmembership(n, cc, a);
      if (!res.excluded()) ++not_excluded;
      if (expect != ExclusionCondition::none && res.condition != expect) ++wrong_label;
      if (membership_test(AnalyticFunction{TwoTermMap{n, cc}}, a, grid).holds()) ++not_violated;
    };
    for (int t = 0; t < 50; ++t) {  // range below one, first window
      const double a = 0.9 * unit_real(rng);
      const int n = 2 + int(5.0 * unit_real(rng)) % 5;
      const double lo = 1.0 / (a + n * (1.0 - a));
      const double m = lo + (0.15 + 0.7 * unit_real(rng)) * (1.0 - lo);
      run_draw(n, a, m, ExclusionCondition::cond_i);
    }
    for (int t = 0; t < 50; ++t) {  // narrower window at large n (overlaps the first)
      const double a = 0.5 * unit_real(rng);
      const int n = int((3.0 - a) / (1.0 - a)) + 1 + int(3.0 * unit_real(rng)) % 3;
      const double lo = 1.0 / (a - 2.0 + n * (1.0 - a));
      const double m = lo + (0.15 + 0.7 * unit_real(rng)) * (1.0 - lo);
      run_draw(n, a, m, ExclusionCondition::none);
    }
    for (int t = 0; t < 50; ++t) {  // modulus above one, large n
      const double a = 0.8 * unit_real(rng);
      const int n = int(std::ceil((2.0 - a) / (1.0 - a) - 1e-9)) + int(3.0 * unit_real(rng)) % 3;
      const double m = 1.05 + 1.95 * unit_real(rng);
      run_draw(n, a, m, ExclusionCondition::cond_iii);
    }
    for (int t = 0; t < 50; ++t) {  // modulus above one, small n
      const int n = (t % 2 == 0) ? 2 : 3;
      const double a = (n == 2) ? 0.1 + 0.8 * unit_real(rng) : 0.55 + 0.35 * unit_real(rng);
      const double cap = std::min(1.0 / (2.0 - a + n * (a - 1.0)), 3.0);
      const double m = 1.0 + (0.15 + 0.7 * unit_real(rng)) * (cap - 1.0);
      run_draw(n, a, m, ExclusionCondition::cond_iv);
    }
    c.passed = not_excluded == 0 && not_violated == 0 && wrong_label == 0;
    c.detail = "200 draws: " + std::to_string(200 - not_excluded) + " excluded, " +
               std::to_string(200 - not_violated) + " violated on the fine grid, " +
               std::to_string(wrong_label) + " mislabeled";
    out.push_back(std::move(c));
  }

  {
    CheckResult floor_check{"convexity-floor"};
    CheckResult printed_check{"convexity-floor-printed-constant"};
    printed_check.expected_failure = true;
    bool positive = true, floor_small = true, zero_exact = convexity_floor_constant(0.0) == 0.0;
    bool floor_large = true;
    std::string large_detail;
    for (double a : {0.01, 0.1, 0.1715, 0.5, 0.9}) {
      const ConvexityReport rep = convexity_check_p(a, 720);
      positive = positive && rep.grid_min > 0.0;
      if (a <= 0.25) {
        floor_small = floor_small && rep.grid_min >= rep.k_alpha - 1e-9;
      } else {
        if (rep.grid_min < rep.k_alpha - 1e-9) floor_large = false;
        large_detail += " at a=" + fmt17(a) + " min=" + fmt17(rep.grid_min) +
                        " vs floor=" + fmt17(rep.k_alpha) + ";";
      }
    }
    floor_check.passed = positive && floor_small && zero_exact;
    floor_check.detail = std::string("minima positive at all five parameters: ") +
                         detail::yes_no(positive) +
                         ", floor respected for parameters <= 1/4: " +
                         detail::yes_no(floor_small) +
                         ", floor(0) = 0 exactly: " + detail::yes_no(zero_exact);
    printed_check.passed = floor_large;
    printed_check.detail =
        "the a/(1-a) floor binds only up to parameter 1/4; measured minima fall below it"
        " above that:" + large_detail + " positivity itself still holds";
    out.push_back(std::move(floor_check));
    out.push_back(std::move(printed_check));
  }

  return out;
}

inline std::vector<CheckResult> run_booth_suite(std::uint64_t seed) {
  std::vector<CheckResult> out;

  {
    CheckResult c{"curvature-threshold"};
    const double th = convex_boundary_threshold(4096);
    const double target = 3.0 - 2.0 * std::sqrt(2.0);
    const bool signs_ok = curvature_min(0.1, 4096).minimum > 0.0 &&
                          curvature_min(0.3, 4096).minimum < 0.0 &&
                          curvature_min(0.0, 4096).minimum == 1.0;
    c.passed = std::abs(th - target) < 1e-6 && signs_ok;
    c.detail = "boundary stays convex up to " + fmt17(th) + " (target " + fmt17(target) + ")";
    out.push_back(std::move(c));
  }

  {
    CheckResult c{"region-geometry"};
    std::mt19937_64 rng(seed ^ 0x9e09ULL);
    bool symmetric = true;
    double max_resid = 0.0;
    std::size_t escaped = 0;
    for (double a : {1.0 / 3.0, 0.5, 0.9}) {
      const BoothRegion region(a);
      const double b = region.re_upper() * 1.2;
      for (int i = 0; i < 200 && symmetric; ++i) {
        for (int j = 0; j < 200; ++j) {
          const double x = -b + 2.0 * b * i / 199.0;
          const double y = -b + 2.0 * b * j / 199.0;
          const double q = region.quartic({x, y});
          if (q != region.quartic({-x, y}) || q != region.quartic({x, -y}) ||
              region.contains({x, y}) != region.contains({-x, y}) ||
              region.contains({x, y}) != region.contains({x, -y})) {
            symmetric = false;
            break;
          }
        }
      }
      const double inv_m = 1.0 / ((1.0 - a) * (1.0 - a));
      const double inv_p = 1.0 / ((1.0 + a) * (1.0 + a));
      for (int j = 0; j < 256; ++j) {
        const double phi = 6.283185307179586 * j / 256.0;
        const cplx w = region.boundary_point(phi);
        const double x = w.real(), y = w.imag(), s = x * x + y * y;
        const double gx = 4.0 * x * s - 2.0 * x * inv_m;
        const double gy = 4.0 * y * s - 2.0 * y * inv_p;
        const double scale = std::max(std::hypot(gx, gy), 1e-30);
        max_resid = std::max(max_resid, std::abs(region.quartic(w)) / scale);
      }
      for (int t = 0; t < 10000; ++t) {
        const double r = std::sqrt(unit_real(rng)) * (1.0 - 1e-9);
        const cplx z = std::polar(r, 6.283185307179586 * unit_real(rng));
        if (!region.contains(lemniscate_map(a, z))) ++escaped;
      }
    }
    c.passed = symmetric && max_resid < 1e-9 && escaped == 0;
    c.detail = std::string("quadrant symmetry exact: ") + detail::yes_no(symmetric) +
               ", max scaled boundary residual " + fmt17(max_resid) + ", escaped image points " +
               std::to_string(escaped) + "/30000";
    out.push_back(std::move(c));
  }

  {
    CheckResult strict_check{"re-bounds-strict"};
    CheckResult sharp_check{"re-bounds-sharpness-0.9"};
    sharp_check.expected_failure = true;
    GridSpec grid = GridSpec::default_grid();
    grid.angular_samples = 1024;
    bool strict_ok = true, close_small = true;
    double dev9 = 0.0;
    for (double a : {0.1, 0.5, 0.9}) {
      if (!check_re_bounds(a, grid).holds()) strict_ok = false;
      const double val = lemniscate_map(a, cplx{0.999, 0.0}).real();
      const double target = 1.0 / (1.0 - a);
      const double dev = (target - val) / target;
      if (a < 0.9) {
        close_small = close_small && dev <= 0.01;
      } else {
        dev9 = dev;
      }
    }
    strict_check.passed = strict_ok && close_small;
    strict_check.detail = std::string("strict strip bounds hold at 11264 points per parameter: ") +
                          detail::yes_no(strict_ok) +
                          ", within 1% of the crossing at radius 0.999 for parameters 0.1 and "
                          "0.5: " + detail::yes_no(close_small);
    sharp_check.passed = dev9 <= 0.01;
    sharp_check.detail = "relative gap at parameter 0.9, radius 0.999 is " + fmt17(dev9) +
                         "; reaching 1% needs radius above 0.99948, so the closeness target is"
                         " unattainable at 0.999";
    out.push_back(std::move(strict_check));
    out.push_back(std::move(sharp_check));
  }

  return out;
}

inline std::vector<CheckResult> run_bounds_suite(std::uint64_t seed) {
  std::vector<CheckResult> out;

  {
    CheckResult c{"ratio-subordination"};
    GridSpec grid;
    grid.radii = {0.2, 0.5, 0.8, 0.95, 0.99};
    grid.angular_samples = 256;
    std::size_t violations = 0;
    bool contact_ok = true;
    for (double a : {0.1, 0.17}) {
      std::mt19937_64 rng(seed ^ 0x5b0dULL);
      const AnalyticFunction target{ExtremalRatio{a}};
      const JordanCurve curve =
          JordanCurve::from_function([&](cplx z) { return extremal_ratio(a, z); }, 4096);
      contact_ok = contact_ok &&
                   winding_number(curve, extremal_ratio(a, cplx{1.0, 0.0})).indeterminate &&
                   winding_number(curve, extremal_ratio(a, cplx{-1.0, 0.0})).indeterminate;
      for (int t = 0; t < 50; ++t) {
        const PowerSeries ratio =
            build_ratio(subordinate_driver(a, random_generator(rng), 192));
        const AnalyticFunction f{SeriesMap(ratio)};
        if (!check_subordination(f, target, grid, 4096).holds()) ++violations;
      }
    }
    c.passed = violations == 0 && contact_ok;
    c.detail = std::to_string(100 - violations) +
               "/100 member ratios stay inside the target image, boundary contact of the "
               "extremal ratio at both real circle points detected: " +
               detail::yes_no(contact_ok);
    out.push_back(std::move(c));
  }

  {
    CheckResult c{"ratio-bounds"};
    const Verdict v =
        verify_bounds_on_members(0.1, 50, GridSpec::default_grid(), seed ^ 0xb0'0dULL);
    const BoundsPair at_zero = re_f_over_z_bounds(0.1, 0.0);
    const bool unit_at_zero = at_zero.lower == 1.0 && at_zero.upper == 1.0;
    c.passed = v.holds() && unit_at_zero;
    c.detail = std::string("ring bounds hold for 50 members: ") + detail::yes_no(v.holds()) +
               " (worst margin " + fmt17(v.stat_min) + "), bounds at radius 0 are exactly 1: " +
               detail::yes_no(unit_at_zero);
    out.push_back(std::move(c));
  }

  return out;
}

inline std::vector<CheckResult> run_suite(const std::string& name, std::uint64_t seed) {
  std::vector<CheckResult> out;
  const auto append = [&](std::vector<CheckResult> v) {
    for (CheckResult& c : v) out.push_back(std::move(c));
  };
  bool known = false;
  if (name == "all" || name == "radii") {
    append(run_radii_suite(seed));
    known = true;
  }
  if (name == "all" || name == "class") {
    append(run_class_suite(seed));
    known = true;
  }
  if (name == "all" || name == "booth") {
    append(run_booth_suite(seed));
    known = true;
  }
  if (name == "all" || name == "bounds") {
    append(run_bounds_suite(seed));
    known = true;
  }
  if (!known) throw std::invalid_argument("unknown suite: " + name);
  return out;
}

}  // namespace gft
