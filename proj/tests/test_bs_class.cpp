#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <stdexcept>

#include "gft/bs_class.hpp"
#include "gft/functions.hpp"
#include "gft/grid.hpp"
#include "gft/power_series.hpp"

using namespace gft;

namespace {
constexpr double kPi = 3.14159265358979323846;

cplx seeded_point(std::mt19937_64& rng, double rmax) {
  return std::polar(rmax * std::sqrt(unit_real(rng)), 2.0 * kPi * unit_real(rng));
}
}  // namespace

TEST_CASE("zero driver builds the identity") {
  const SeriesMap f = build_member(PowerSeries(8));
  REQUIRE(f.series[0] == cplx{});
  REQUIRE(f.series[1] == cplx{1.0});
  for (std::size_t k = 2; k <= 9; ++k) REQUIRE(f.series[k] == cplx{});
  const cplx z{0.3, 0.1};
  REQUIRE(f(z) == z);
  REQUIRE(f.derivative(z) == cplx{1.0});
}

TEST_CASE("structural build reproduces the extremal member") {
  const double a = 0.3;
  const SeriesMap built = build_member(lemniscate_series(a, 64));
  std::mt19937_64 rng(2718);
  for (int t = 0; t < 200; ++t) {
    const cplx z = seeded_point(rng, 0.7);
    REQUIRE(std::abs(built(z) - extremal_member(a, z)) < 1e-9);
    REQUIRE(std::abs(built.derivative(z) - extremal_member_derivative(a, z)) < 1e-8);
  }
}

TEST_CASE("driver through a plain rotation matches the target series") {
  const PowerSeries q = subordinate_driver(0.7, Rotation{0.0}, 32);
  const PowerSeries expect = lemniscate_series(0.7, 32);
  for (std::size_t k = 0; k <= 32; ++k) REQUIRE(q[k] == expect[k]);
}

TEST_CASE("membership holds for manufactured members") {
  const GridSpec grid = GridSpec::default_grid();
  REQUIRE(membership_test(Identity{}, 0.5, grid).holds());
  REQUIRE(membership_test(ExtremalMember{0.2}, 0.2, grid).holds());

  const SeriesMap f = build_member(0.1, Rotation{kPi / 4.0}, 192);
  const Verdict v = membership_test(f, 0.1, grid);
  REQUIRE(v.holds());
  REQUIRE(v.points == grid.point_count());
  REQUIRE(v.stat_max < 0.0);  // quartic stays strictly negative
}

TEST_CASE("membership violation carries a checkable witness") {
  const TwoTermMap f{2, cplx{0.8}};
  const Verdict v = membership_test(f, 0.0, GridSpec::default_grid());
  REQUIRE_FALSE(v.holds());
  REQUIRE(v.witness.has_value());
  REQUIRE(v.witness->reason == "log-derivative leaves the oval");

  const BoothRegion disc(0.0);
  REQUIRE_FALSE(disc.contains(v.witness->value));
  const cplx recomputed = ratio_minus_one(AnalyticFunction{f}, v.witness->z);
  REQUIRE(std::abs(recomputed - v.witness->value) < 1e-15);
}

TEST_CASE("sampled zero of f aborts the check") {
  GridSpec grid;
  grid.radii = {0.5};
  grid.angular_samples = 8;
  REQUIRE_THROWS_AS(membership_test(TwoTermMap{2, cplx{-2.0}}, 0.0, grid), ZeroOfFOnGrid);
}

TEST_CASE("normalization is enforced") {
  const GridSpec grid = GridSpec::default_grid();
  REQUIRE_THROWS_AS(membership_test(SeriesMap(PowerSeries({0.0, 2.0})), 0.3, grid),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(membership_test(SeriesMap(PowerSeries({0.5, 1.0})), 0.3, grid),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(starlike_strip_check(SeriesMap(PowerSeries({0.0, 2.0})), 0.3, grid),
                    std::invalid_argument);
}

TEST_CASE("strip check brackets the log-derivative") {
  const GridSpec grid = GridSpec::default_grid();
  const Verdict v = starlike_strip_check(ExtremalMember{0.5}, 0.5, grid);
  REQUIRE(v.holds());
  REQUIRE(v.stat_min > -1.0);
  REQUIRE(v.stat_max < 3.0);

  const Verdict bad = starlike_strip_check(TwoTermMap{2, cplx{1.5}}, 0.5, grid);
  REQUIRE_FALSE(bad.holds());
  REQUIRE(bad.witness->reason == "log-derivative escapes the strip");
}

TEST_CASE("membership implies the strip condition on built members") {
  GridSpec grid;
  grid.radii = {0.3, 0.7, 0.95};
  grid.angular_samples = 180;
  std::mt19937_64 rng(0xC1A55);
  for (int t = 0; t < 6; ++t) {
    const SeriesMap f = build_member(0.3, random_generator(rng), 192);
    REQUIRE(membership_test(f, 0.3, grid).holds());
    REQUIRE(starlike_strip_check(f, 0.3, grid).holds());
  }
}

TEST_CASE("two-term exclusion conditions") {
  const ExclusionResult i = two_term_nonmembership(2, cplx{0.8}, 0.0);
  REQUIRE(i.condition == ExclusionCondition::cond_i);
  REQUIRE(i.excluded());
  REQUIRE(std::abs(i.x1 + 4.0) < 1e-12);

  const ExclusionResult ends = two_term_nonmembership(2, cplx{0.75}, 0.0);
  REQUIRE(ends.x1 == -3.0);
  REQUIRE(ends.x2 == 3.0 / 7.0);

  const ExclusionResult iii = two_term_nonmembership(5, cplx{2.0}, 0.5);
  REQUIRE(iii.condition == ExclusionCondition::cond_iii);

  const ExclusionResult iv = two_term_nonmembership(2, std::polar(1.2, 1.0), 0.3);
  REQUIRE(iv.condition == ExclusionCondition::cond_iv);

  const ExclusionResult none = two_term_nonmembership(2, cplx{0.4}, 0.0);
  REQUIRE(none.condition == ExclusionCondition::none);
  REQUIRE_FALSE(none.excluded());
  REQUIRE_FALSE(two_term_nonmembership(2, cplx{}, 0.2).excluded());

  REQUIRE(std::string(exclusion_label(ExclusionCondition::cond_i)) == "i");
  REQUIRE(std::string(exclusion_label(ExclusionCondition::cond_iv)) == "iv");
  REQUIRE(std::string(exclusion_label(ExclusionCondition::none)) == "none");

  REQUIRE_THROWS_AS(two_term_nonmembership(2, cplx{1.0}, 0.0), DegenerateModulus);
  REQUIRE_THROWS_AS(two_term_nonmembership(3, std::polar(1.0, 0.7), 0.2), DegenerateModulus);
  REQUIRE_THROWS_AS(two_term_nonmembership(1, cplx{0.5}, 0.0), std::invalid_argument);
  REQUIRE_THROWS_AS(two_term_nonmembership(2, cplx{0.5}, 1.0), std::invalid_argument);
  REQUIRE_THROWS_AS(two_term_nonmembership(2, cplx{0.5}, -0.1), std::invalid_argument);
}

TEST_CASE("an excluded two-term map fails the grid certificate") {
  GridSpec grid = GridSpec::default_grid();
  grid.radii.push_back(0.999);
  grid.angular_samples = 1024;
  const ExclusionResult res = two_term_nonmembership(2, cplx{0.8}, 0.0);
  REQUIRE(res.excluded());
  REQUIRE_FALSE(membership_test(TwoTermMap{2, cplx{0.8}}, 0.0, grid).holds());
}

TEST_CASE("derivatives agree with central differences") {
  const double h = 1e-6;
  const AnalyticFunction maps[] = {LemniscateMap{0.3}, ExtremalMember{0.3},
                                   ExtremalRatio{0.3}, TwoTermMap{3, cplx{0.5, 0.2}}};
  std::mt19937_64 rng(1618);
  for (const AnalyticFunction& f : maps) {
    for (int t = 0; t < 100; ++t) {
      const cplx z = seeded_point(rng, 0.8);
      const cplx fd = (evaluate(f, z + h) - evaluate(f, z - h)) / (2.0 * h);
      const cplx d = derivative_at(f, z);
      REQUIRE(std::abs(fd - d) < 1e-6 * std::max(1.0, std::abs(d)));
    }
    REQUIRE(ratio_minus_one(f, cplx{}) == cplx{});
  }
}

TEST_CASE("convexity floor constant and grid minimum") {
  REQUIRE(convexity_floor_constant(0.0) == 0.0);
  REQUIRE(std::abs(convexity_floor_constant(0.25) - 1.0 / 3.0) < 1e-15);
  // the simplified form of the same constant
  for (double a : {0.1, 0.25, 0.4})
    REQUIRE(std::abs(convexity_floor_constant(a) - a / (1.0 - a)) < 1e-14);

  REQUIRE(convexity_check_p(0.25).grid_min >= 1.0 / 3.0 - 1e-9);
  REQUIRE(convexity_check_p(0.5).grid_min > 0.0);

  const cplx z = std::polar(0.3, 1.0);
  REQUIRE(convexity_functional(0.0, z) == 1.0 + z.real());

  REQUIRE_THROWS_AS(convexity_check_p(1.0), std::invalid_argument);
  REQUIRE_THROWS_AS(convexity_check_p(0.2, 0), std::invalid_argument);
}
