// Dense truncated power series over complex doubles.
#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "gft/errors.hpp"

namespace gft {

using cplx = std::complex<double>;

inline constexpr std::size_t kDefaultSeriesOrder = 64;
inline constexpr double kUnitTermTolerance = 1e-14;

// Coefficients c[0..N] of a polynomial truncation modulo z^{N+1}.  Binary
// operations pad the shorter operand and work at the larger order.  Horner
// evaluation is reliable well inside the unit disc (|z| <= 0.7 at the default
// order); closed forms are used elsewhere in the library for larger |z|.
class PowerSeries {
 public:
  PowerSeries() : c_(1) {}
  explicit PowerSeries(std::size_t order) : c_(order + 1) {}
  explicit PowerSeries(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.resize(1);
  }

  static PowerSeries variable(std::size_t order = kDefaultSeriesOrder) {
    PowerSeries z(order);
    if (order >= 1) z.c_[1] = 1.0;
    return z;
  }

  static PowerSeries constant(cplx value, std::size_t order = 0) {
    PowerSeries s(order);
    s.c_[0] = value;
    return s;
  }

  std::size_t order() const { return c_.size() - 1; }
  const std::vector<cplx>& coeffs() const { return c_; }
  cplx operator[](std::size_t k) const { return k < c_.size() ? c_[k] : cplx{}; }
  cplx& at(std::size_t k) { return c_[k]; }

  PowerSeries truncated(std::size_t order) const {
    PowerSeries out(order);
    const std::size_t n = std::min(order, this->order());
    std::copy(c_.begin(), c_.begin() + n + 1, out.c_.begin());
    return out;
  }

  cplx evaluate(cplx z) const {
    cplx acc = 0.0;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * z + c_[k];
    return acc;
  }

  PowerSeries derivative() const {
    if (c_.size() == 1) return PowerSeries(0);
    PowerSeries out(c_.size() - 2);
    for (std::size_t k = 1; k < c_.size(); ++k) out.c_[k - 1] = double(k) * c_[k];
    return out;
  }

 private:
  std::vector<cplx> c_;
};

inline PowerSeries add(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::max(a.order(), b.order());
  PowerSeries out(n);
  for (std::size_t k = 0; k <= n; ++k) out.at(k) = a[k] + b[k];
  return out;
}

inline PowerSeries mul(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::max(a.order(), b.order());
  PowerSeries out(n);
  for (std::size_t k = 0; k <= n; ++k) {
    cplx s = 0.0;
    for (std::size_t j = 0; j <= k; ++j) s += a[j] * b[k - j];
    out.at(k) = s;
  }
  return out;
}

// Forward substitution against b; requires |b_0| > 1e-14.
inline PowerSeries div(const PowerSeries& a, const PowerSeries& b) {
  if (std::abs(b[0]) <= kUnitTermTolerance)
    throw DivisionByNonUnit("series division: constant term magnitude <= 1e-14");
  const std::size_t n = std::max(a.order(), b.order());
  PowerSeries q(n);
  for (std::size_t k = 0; k <= n; ++k) {
    cplx s = a[k];
    for (std::size_t j = 1; j <= k; ++j) s -= b[j] * q[k - j];
    q.at(k) = s / b[0];
  }
  return q;
}

inline PowerSeries hadamard(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::max(a.order(), b.order());
  PowerSeries out(n);
  for (std::size_t k = 0; k <= n; ++k) out.at(k) = a[k] * b[k];
  return out;
}

// E = exp(a) via the recurrence k E_k = sum_{j<=k} j a_j E_{k-j}, which is
// well-posed only when a_0 = 0 exactly.
inline PowerSeries exp_series(const PowerSeries& a) {
  if (a[0] != cplx{})
    throw NonzeroConstantTerm("exp_series: nonzero constant term");
  const std::size_t n = a.order();
  PowerSeries e(n);
  e.at(0) = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    cplx s = 0.0;
    for (std::size_t j = 1; j <= k; ++j) s += double(j) * a[j] * e[k - j];
    e.at(k) = s / double(k);
  }
  return e;
}

// int_0^z q(t)/t dt: coefficient k of the result is q_k / k.
inline PowerSeries integrate_over_t(const PowerSeries& q) {
  if (q[0] != cplx{})
    throw NonzeroConstantTerm("integrate_over_t: nonzero constant term");
  PowerSeries out(q.order());
  for (std::size_t k = 1; k <= q.order(); ++k) out.at(k) = q[k] / double(k);
  return out;
}

inline PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) { return add(a, b); }
inline PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) { return mul(a, b); }

}  // namespace gft
