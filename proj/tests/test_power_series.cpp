#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "gft/functions.hpp"
#include "gft/power_series.hpp"

using namespace gft;

namespace {

double coeff_gap(const PowerSeries& a, const PowerSeries& b) {
  double worst = 0.0;
  const std::size_t n = std::max(a.order(), b.order());
  for (std::size_t k = 0; k <= n; ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

PowerSeries random_series(std::mt19937_64& rng, std::size_t order, cplx head) {
  PowerSeries s(order);
  s.at(0) = head;
  for (std::size_t k = 1; k <= order; ++k)
    s.at(k) = cplx{unit_real(rng) - 0.5, unit_real(rng) - 0.5};
  return s;
}

}  // namespace

TEST_CASE("addition") {
  PowerSeries a({1.0, 1.0});
  PowerSeries b({1.0, -1.0});
  const PowerSeries sum = add(a, b);
  REQUIRE(sum[0] == cplx{2.0});
  REQUIRE(sum[1] == cplx{});

  const PowerSeries z = PowerSeries::variable(4);
  REQUIRE(coeff_gap(add(z, PowerSeries(4)), z) == 0.0);

  const PowerSeries mixed = add(PowerSeries({1.0, 0.0, 0.5}), z.truncated(2));
  REQUIRE(mixed[0] == cplx{1.0});
  REQUIRE(mixed[1] == cplx{1.0});
  REQUIRE(mixed[2] == cplx{0.5});
}

TEST_CASE("multiplication") {
  const PowerSeries one_plus({1.0, 1.0, 0.0});
  const PowerSeries one_minus({1.0, -1.0, 0.0});
  const PowerSeries prod = mul(one_plus, one_minus);
  REQUIRE(prod[0] == cplx{1.0});
  REQUIRE(prod[1] == cplx{});
  REQUIRE(prod[2] == cplx{-1.0});

  const PowerSeries z = PowerSeries::variable(2);
  REQUIRE(mul(z, z)[2] == cplx{1.0});
  REQUIRE(mul(z, z)[1] == cplx{});

  const PowerSeries p({1.0, 1.0, 1.0});
  const PowerSeries sq = mul(p, p);
  REQUIRE(sq[0] == cplx{1.0});
  REQUIRE(sq[1] == cplx{2.0});
  REQUIRE(sq[2] == cplx{3.0});
}

TEST_CASE("division") {
  PowerSeries one(5);
  one.at(0) = 1.0;
  PowerSeries geom_den(5);
  geom_den.at(0) = 1.0;
  geom_den.at(1) = -1.0;
  const PowerSeries geom = div(one, geom_den);
  for (std::size_t k = 0; k <= 5; ++k) REQUIRE(geom[k] == cplx{1.0});

  PowerSeries num(3);
  num.at(0) = 1.0;
  num.at(2) = -1.0;
  const PowerSeries lin = div(num, geom_den.truncated(3));
  REQUIRE(lin[0] == cplx{1.0});
  REQUIRE(lin[1] == cplx{1.0});
  REQUIRE(lin[2] == cplx{});
  REQUIRE(lin[3] == cplx{});

  // z/(1 - a z^2) by forward recurrence vs its known odd-power coefficients
  PowerSeries den(5);
  den.at(0) = 1.0;
  den.at(2) = -0.5;
  const PowerSeries f = div(PowerSeries::variable(5), den);
  REQUIRE(coeff_gap(f, lemniscate_series(0.5, 5)) == 0.0);
  REQUIRE(f[1] == cplx{1.0});
  REQUIRE(f[3] == cplx{0.5});
  REQUIRE(f[5] == cplx{0.25});

  PowerSeries tiny(2);
  tiny.at(0) = 1e-15;
  REQUIRE_THROWS_AS(div(one.truncated(2), tiny), DivisionByNonUnit);
  REQUIRE_THROWS_AS(div(one.truncated(2), PowerSeries(2)), DivisionByNonUnit);
}

TEST_CASE("exponential") {
  REQUIRE(exp_series(PowerSeries(3))[0] == cplx{1.0});
  REQUIRE(exp_series(PowerSeries(3))[3] == cplx{});

  const PowerSeries e = exp_series(PowerSeries::variable(4));
  REQUIRE(e[0] == cplx{1.0});
  REQUIRE(e[1] == cplx{1.0});
  REQUIRE(e[2] == cplx{0.5});
  REQUIRE(std::abs(e[3] - cplx{1.0 / 6.0}) < 1e-15);
  REQUIRE(std::abs(e[4] - cplx{1.0 / 24.0}) < 1e-15);

  PowerSeries bad(2);
  bad.at(0) = 1.0;
  REQUIRE_THROWS_AS(exp_series(bad), NonzeroConstantTerm);

  const PowerSeries ratio = exp_series(integrate_over_t(lemniscate_series(0.3, 3)));
  REQUIRE(std::abs(ratio[3] - cplx{0.8 / 3.0}) < 1e-15);
}

TEST_CASE("integration of q over t") {
  const PowerSeries z = PowerSeries::variable(3);
  REQUIRE(coeff_gap(integrate_over_t(z), z) == 0.0);

  PowerSeries z2(3);
  z2.at(2) = 1.0;
  REQUIRE(integrate_over_t(z2)[2] == cplx{0.5});

  const PowerSeries g = integrate_over_t(lemniscate_series(0.5, 5));
  REQUIRE(g[1] == cplx{1.0});
  REQUIRE(g[3] == cplx{0.5 / 3.0});
  REQUIRE(g[5] == cplx{0.25 / 5.0});

  PowerSeries bad(2);
  bad.at(0) = 2.0;
  REQUIRE_THROWS_AS(integrate_over_t(bad), NonzeroConstantTerm);
}

TEST_CASE("hadamard product") {
  std::mt19937_64 rng(11);
  const PowerSeries a = random_series(rng, 8, cplx{0.3, 0.1});
  PowerSeries geom(8);
  for (std::size_t k = 0; k <= 8; ++k) geom.at(k) = 1.0;
  REQUIRE(coeff_gap(hadamard(a, geom), a) == 0.0);

  // termwise product with sum z^n / n matches the integrated series
  PowerSeries l(9);
  for (std::size_t k = 1; k <= 9; ++k) l.at(k) = 1.0 / double(k);
  const PowerSeries f = lemniscate_series(0.4, 9);
  REQUIRE(coeff_gap(hadamard(f, l), integrate_over_t(f)) < 1e-15);

  PowerSeries z2(3), z3(3);
  z2.at(2) = 1.0;
  z3.at(3) = 1.0;
  REQUIRE(coeff_gap(hadamard(z2, z3), PowerSeries(3)) == 0.0);
}

TEST_CASE("evaluation and derivative") {
  REQUIRE(PowerSeries({1.0, 1.0}).evaluate(0.5) == cplx{1.5});

  PowerSeries z2(2);
  z2.at(2) = 1.0;
  const PowerSeries d = z2.derivative();
  REQUIRE(d.order() == 1);
  REQUIRE(d[1] == cplx{2.0});

  const PowerSeries ratio = exp_series(integrate_over_t(lemniscate_series(0.5, 6)));
  REQUIRE(ratio.derivative()[0] == cplx{1.0});
}

TEST_CASE("exp and log round trip") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t order = 8 + std::size_t(rng() % 17);
    const PowerSeries e = random_series(rng, order, cplx{1.0});
    const PowerSeries q = mul(PowerSeries::variable(order), div(e.derivative(), e));
    const PowerSeries back = exp_series(integrate_over_t(q));
    REQUIRE(coeff_gap(back, e) < 1e-12);
  }
}

TEST_CASE("division inverts multiplication") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const PowerSeries a = random_series(rng, 20, cplx{unit_real(rng) - 0.5, 0.2});
    const PowerSeries b =
        random_series(rng, 20, cplx{1.0 + 0.3 * (unit_real(rng) - 0.5), 0.1});
    REQUIRE(coeff_gap(mul(div(a, b), b), a) < 1e-12);
  }
}

TEST_CASE("structural ratio coefficients") {
  for (double a : {0.0, 0.1, 0.5, 0.9}) {
    const PowerSeries e = exp_series(integrate_over_t(lemniscate_series(a, 4)));
    REQUIRE(std::abs(e[0] - 1.0) < 1e-12);
    REQUIRE(std::abs(e[1] - 1.0) < 1e-12);
    REQUIRE(std::abs(e[2] - 0.5) < 1e-12);
    REQUIRE(std::abs(e[3] - (a + 0.5) / 3.0) < 1e-12);
  }
}

TEST_CASE("series evaluation matches the closed form inside the trust radius") {
  std::mt19937_64 rng(99);
  for (double a : {0.1, 0.5, 0.9}) {
    const PowerSeries f = lemniscate_series(a, 64);
    for (int t = 0; t < 100; ++t) {
      const cplx z =
          std::polar(0.7 * std::sqrt(unit_real(rng)), 6.283185307179586 * unit_real(rng));
      REQUIRE(std::abs(f.evaluate(z) - lemniscate_map(a, z)) < 1e-10);
    }
  }
}
