// Concrete analytic maps used throughout: the extremal member, two-term maps
// z + c z^n, series-backed maps, and Schwarz-function generators.
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <variant>

#include "gft/booth.hpp"
#include "gft/power_series.hpp"

namespace gft {

inline constexpr double kSmallAlphaBranch = 1e-4;

// Uniform in [0, 1) from the top 53 bits; avoids distribution objects so the
// stream is identical across standard-library implementations.
inline double unit_real(std::mt19937_64& rng) {
  return double(rng() >> 11) * 0x1.0p-53;
}

inline cplx ipow(cplx z, int k) {
  cplx r = 1.0;
  for (; k > 0; --k) r *= z;
  return r;
}

// G(z) = int_0^z t/((1 - alpha t^2) t) dt.  For alpha away from zero this is
// log((1 + z sqrt(alpha)) / (1 - z sqrt(alpha))) / (2 sqrt(alpha)); below the
// branch cutoff the closed form loses digits to cancellation, so the series
// sum_k alpha^k z^{2k+1} / (2k+1) is summed instead (it converges in a few
// terms there).
inline cplx structural_exponent(double alpha, cplx z) {
  if (alpha >= kSmallAlphaBranch) {
    const double s = std::sqrt(alpha);
    return std::log((1.0 + z * s) / (1.0 - z * s)) / (2.0 * s);
  }
  cplx acc = z;
  cplx term = z;
  const cplx z2 = z * z;
  for (int k = 1; k < 64; ++k) {
    term *= alpha * z2;
    const cplx contrib = term / double(2 * k + 1);
    acc += contrib;
    if (std::abs(contrib) < 1e-18) break;
  }
  return acc;
}

// Real-axis specialization; exact 0 at x = 0 so downstream exponentials hit
// 1.0 without rounding.
inline double structural_exponent(double alpha, double x) {
  if (alpha >= kSmallAlphaBranch) {
    const double s = std::sqrt(alpha);
    return (std::log1p(x * s) - std::log1p(-x * s)) / (2.0 * s);
  }
  double acc = x;
  double term = x;
  const double x2 = x * x;
  for (int k = 1; k < 64; ++k) {
    term *= alpha * x2;
    const double contrib = term / double(2 * k + 1);
    acc += contrib;
    if (std::abs(contrib) < 1e-18) break;
  }
  return acc;
}

// F(z) = exp(G(z)) = ((1 + z sqrt(alpha)) / (1 - z sqrt(alpha)))^{1/(2 sqrt(alpha))}.
inline cplx extremal_ratio(double alpha, cplx z) {
  return std::exp(structural_exponent(alpha, z));
}
inline double extremal_ratio(double alpha, double x) {
  return std::exp(structural_exponent(alpha, x));
}

// F'(z) = F(z) / (1 - alpha z^2).
inline cplx extremal_ratio_derivative(double alpha, cplx z) {
  return extremal_ratio(alpha, z) / (1.0 - alpha * z * z);
}

inline cplx extremal_member(double alpha, cplx z) {
  return z * extremal_ratio(alpha, z);
}

// f'(z) = F(z) (1 + z/(1 - alpha z^2)).
inline cplx extremal_member_derivative(double alpha, cplx z) {
  return extremal_ratio(alpha, z) * (1.0 + lemniscate_map(alpha, z));
}

// Maclaurin coefficients of z/(1 - alpha z^2): alpha^m at z^{2m+1}.
inline PowerSeries lemniscate_series(double alpha, std::size_t order = kDefaultSeriesOrder) {
  PowerSeries q(order);
  double p = 1.0;
  for (std::size_t k = 1; k <= order; k += 2) {
    q.at(k) = p;
    p *= alpha;
  }
  return q;
}

struct LemniscateMap {
  double alpha;
  cplx operator()(cplx z) const { return lemniscate_map(alpha, z); }
  cplx derivative(cplx z) const { return lemniscate_map_derivative(alpha, z); }
};

struct ExtremalMember {
  double alpha;
  cplx operator()(cplx z) const { return extremal_member(alpha, z); }
  cplx derivative(cplx z) const { return extremal_member_derivative(alpha, z); }
};

struct ExtremalRatio {
  double alpha;
  cplx operator()(cplx z) const { return extremal_ratio(alpha, z); }
  cplx derivative(cplx z) const { return extremal_ratio_derivative(alpha, z); }
};

struct Identity {
  cplx operator()(cplx z) const { return z; }
  cplx derivative(cplx) const { return 1.0; }
};

struct TwoTermMap {
  int n = 2;
  cplx c;
  cplx operator()(cplx z) const { return z + c * ipow(z, n); }
  cplx derivative(cplx z) const { return 1.0 + double(n) * c * ipow(z, n - 1); }
};

// A map given only by its truncated Maclaurin series.  The derivative series
// is fixed at construction so repeated derivative queries cost one Horner
// pass each.
struct SeriesMap {
  PowerSeries series;
  PowerSeries series_derivative;
  explicit SeriesMap(PowerSeries s)
      : series(std::move(s)), series_derivative(series.derivative()) {}
  cplx operator()(cplx z) const { return series.evaluate(z); }
  cplx derivative(cplx z) const { return series_derivative.evaluate(z); }
};

using AnalyticFunction =
    std::variant<Identity, LemniscateMap, ExtremalMember, ExtremalRatio, TwoTermMap, SeriesMap>;

inline cplx evaluate(const AnalyticFunction& f, cplx z) {
  return std::visit([&](const auto& g) { return g(z); }, f);
}

inline cplx derivative_at(const AnalyticFunction& f, cplx z) {
  return std::visit([&](const auto& g) { return g.derivative(z); }, f);
}

// z f'(z) / f(z) - 1, with the removable singularity at the origin filled by
// its limit 0 (all maps here fix 0 with f'(0) = 1).
inline cplx ratio_minus_one(const AnalyticFunction& f, cplx z) {
  if (z == cplx{}) return 0.0;
  return z * derivative_at(f, z) / evaluate(f, z) - 1.0;
}

// Schwarz-function generators: analytic omega with omega(0) = 0 and
// |omega(z)| <= |z| on the disc.  Used to manufacture class members.
struct Rotation {
  double theta = 0.0;
};
struct RotatedPower {
  int k = 2;
  double theta = 0.0;
};
struct RotatedBlaschke {
  cplx a;  // |a| < 1
  double theta = 0.0;
};

using SchwarzGenerator = std::variant<Rotation, RotatedPower, RotatedBlaschke>;

inline PowerSeries generator_series(const SchwarzGenerator& gen, std::size_t order) {
  return std::visit(
      [&](const auto& g) -> PowerSeries {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Rotation>) {
          PowerSeries w(order);
          if (order >= 1) w.at(1) = std::polar(1.0, g.theta);
          return w;
        } else if constexpr (std::is_same_v<T, RotatedPower>) {
          PowerSeries w(order);
          if (std::size_t(g.k) <= order) w.at(g.k) = std::polar(1.0, g.theta);
          return w;
        } else {
          // e^{i theta} z (z + a) / ((1 + conj(a) z) (1 + |a|))
          const cplx scale = std::polar(1.0, g.theta) / (1.0 + std::abs(g.a));
          PowerSeries num(order);
          if (order >= 1) num.at(1) = scale * g.a;
          if (order >= 2) num.at(2) = scale;
          PowerSeries den(order);
          den.at(0) = 1.0;
          if (order >= 1) den.at(1) = std::conj(g.a);
          return div(num, den);
        }
      },
      gen);
}

inline SchwarzGenerator random_generator(std::mt19937_64& rng) {
  const double theta = 6.283185307179586 * unit_real(rng);
  const int kind = int(3.0 * unit_real(rng)) % 3;
  if (kind == 0) return Rotation{theta};
  if (kind == 1) return RotatedPower{2 + int(4.0 * unit_real(rng)) % 4, theta};
  const double mag = 0.05 + 0.5 * unit_real(rng);
  const double arg = 6.283185307179586 * unit_real(rng);
  return RotatedBlaschke{std::polar(mag, arg), theta};
}

}  // namespace gft
