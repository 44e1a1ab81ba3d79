#ifndef ETA_SERIES_HPP
#define ETA_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eta/rational.hpp"

namespace eta {

struct SeriesError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Formal power series a_0 + a_1 z + ... + a_N z^N known exactly up to z^N.
///
/// `order()` is the highest retained power. Binary operations return the
/// minimum of the operand orders; nothing is ever zero-padded past what was
/// actually computed.
template <typename Scalar>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, Scalar(0)) {}

  /// `coeffs` must be non-empty; its size fixes the order.
  explicit TruncatedSeries(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw SeriesError("series needs at least one coefficient");
  }

  static TruncatedSeries constant(const Scalar& c, std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  /// The series c*z.
  static TruncatedSeries variable(std::size_t order, const Scalar& c = Scalar(1)) {
    TruncatedSeries s(order);
    if (order >= 1) s.coeffs_[1] = c;
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  const Scalar& operator[](std::size_t k) const { return coeffs_[k]; }
  Scalar& operator[](std::size_t k) { return coeffs_[k]; }

  /// Range-checked access.
  const Scalar& at(std::size_t k) const {
    if (k > order())
      throw std::out_of_range("coefficient " + std::to_string(k) + " beyond order " +
                              std::to_string(order()));
    return coeffs_[k];
  }

  /// Index of the first nonzero coefficient; empty if all retained ones vanish.
  std::optional<std::size_t> valuation() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (coeffs_[k] != Scalar(0)) return k;
    return std::nullopt;
  }

  TruncatedSeries truncated(std::size_t order) const {
    if (order > this->order()) throw SeriesError("cannot raise the order of a truncated series");
    return TruncatedSeries(std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  TruncatedSeries& operator*=(const Scalar& c) {
    for (auto& a : coeffs_) a *= c;
    return *this;
  }

  TruncatedSeries operator-() const {
    TruncatedSeries r = *this;
    for (auto& a : r.coeffs_) a = -a;
    return r;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Scalar> coeffs_;
};

using Series = TruncatedSeries<Rational>;

template <typename S>
TruncatedSeries<S> operator+(TruncatedSeries<S> f, const TruncatedSeries<S>& g) { return f += g; }
template <typename S>
TruncatedSeries<S> operator-(TruncatedSeries<S> f, const TruncatedSeries<S>& g) { return f -= g; }
template <typename S>
TruncatedSeries<S> operator*(TruncatedSeries<S> f, const S& c) { return f *= c; }
template <typename S>
TruncatedSeries<S> operator*(const S& c, TruncatedSeries<S> f) { return f *= c; }

/// Cauchy product truncated to the smaller order.
template <typename S>
TruncatedSeries<S> operator*(const TruncatedSeries<S>& f, const TruncatedSeries<S>& g) {
  const std::size_t n = std::min(f.order(), g.order());
  TruncatedSeries<S> h(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (f[i] == S(0)) continue;
    for (std::size_t j = 0; i + j <= n; ++j) h[i + j] += f[i] * g[j];
  }
  return h;
}

/// f^k for k >= 0 by repeated squaring.
template <typename S>
TruncatedSeries<S> pow(TruncatedSeries<S> f, unsigned k) {
  auto r = TruncatedSeries<S>::constant(S(1), f.order());
  while (k > 0) {
    if (k & 1u) r = r * f;
    k >>= 1;
    if (k > 0) f = f * f;
  }
  return r;
}

/// h with f = g*h.
///
/// When g(0) = 0, a common factor z^v with v = valuation(g) is cancelled
/// first, which costs v orders of precision. Throws SeriesError if g
/// vanishes identically or valuation(f) < valuation(g).
template <typename S>
TruncatedSeries<S> operator/(const TruncatedSeries<S>& f, const TruncatedSeries<S>& g) {
  const auto vg = g.valuation();
  if (!vg) throw SeriesError("division by a series that vanishes to retained order");
  const std::size_t v = *vg;
  const std::size_t common = std::min(f.order(), g.order());
  if (v > common) throw SeriesError("divisor valuation exceeds retained order");
  for (std::size_t k = 0; k < v; ++k)
    if (f[k] != S(0)) throw SeriesError("dividend valuation below divisor valuation");

  const std::size_t n = common - v;
  TruncatedSeries<S> h(n);
  const S lead = g[v];
  for (std::size_t k = 0; k <= n; ++k) {
    S acc = f[k + v];
    for (std::size_t j = 1; j <= k; ++j) acc -= g[j + v] * h[k - j];
    h[k] = acc / lead;
  }
  return h;
}

/// d/dz; the order drops by one. Throws SeriesError on an order-0 series.
template <typename S>
TruncatedSeries<S> derivative(const TruncatedSeries<S>& f) {
  if (f.order() == 0) throw SeriesError("derivative of an order-0 series is not determined");
  TruncatedSeries<S> d(f.order() - 1);
  for (std::size_t k = 0; k < f.order(); ++k) d[k] = S(static_cast<long>(k + 1)) * f[k + 1];
  return d;
}

/// z f'(z) / f(z).
///
/// Writing f = z^v u with u(0) != 0, this is v + z u'/u, so the result has
/// constant term exactly v and order order(f) - v. Throws SeriesError if f
/// vanishes to retained order.
template <typename S>
TruncatedSeries<S> log_derivative(const TruncatedSeries<S>& f) {
  const auto vf = f.valuation();
  if (!vf) throw SeriesError("logarithmic derivative of a vanishing series");
  const std::size_t v = *vf;
  const std::size_t n = f.order() - v;

  TruncatedSeries<S> u(n);
  for (std::size_t k = 0; k <= n; ++k) u[k] = f[k + v];
  // z u' keeps the order of u: its constant term is exactly zero.
  TruncatedSeries<S> zu(n);
  for (std::size_t k = 1; k <= n; ++k) zu[k] = S(static_cast<long>(k)) * u[k];

  TruncatedSeries<S> r = zu / u;
  r[0] += S(static_cast<long>(v));
  return r;
}

/// f(g(z)) by Horner accumulation. Throws SeriesError when g(0) != 0.
template <typename S>
TruncatedSeries<S> compose(const TruncatedSeries<S>& f, const TruncatedSeries<S>& g) {
  if (g[0] != S(0)) throw SeriesError("composition requires an inner series with zero constant term");
  const std::size_t n = std::min(f.order(), g.order());
  const auto inner = g.truncated(n);
  auto r = TruncatedSeries<S>::constant(f[n], n);
  for (std::size_t k = n; k-- > 0;) {
    r = r * inner;
    r[0] += f[k];
  }
  return r;
}

/// f(c z): coefficient k scaled by c^k.
template <typename S>
TruncatedSeries<S> dilate(TruncatedSeries<S> f, const S& c) {
  S p(1);
  for (std::size_t k = 0; k <= f.order(); ++k) {
    f[k] *= p;
    p *= c;
  }
  return f;
}

template <typename S>
TruncatedSeries<S> exp_series(std::size_t order) {
  TruncatedSeries<S> e(order);
  S a(1);
  for (std::size_t k = 0; k <= order; ++k) {
    if (k > 0) a /= S(static_cast<long>(k));
    e[k] = a;
  }
  return e;
}

template <typename S>
TruncatedSeries<S> sinh_series(std::size_t order) {
  auto e = exp_series<S>(order);
  for (std::size_t k = 0; k <= order; k += 2) e[k] = S(0);
  return e;
}

template <typename S>
TruncatedSeries<S> cosh_series(std::size_t order) {
  auto e = exp_series<S>(order);
  for (std::size_t k = 1; k <= order; k += 2) e[k] = S(0);
  return e;
}

/// Inverse hyperbolic sine,
///   sum_k (-1)^k (2k)! / (4^k (k!)^2 (2k+1)) u^(2k+1).
template <typename S>
TruncatedSeries<S> arcsinh_series(std::size_t order) {
  TruncatedSeries<S> a(order);
  S central(1);  // (-1)^k (2k)! / (4^k (k!)^2)
  for (std::size_t k = 0; 2 * k + 1 <= order; ++k) {
    if (k > 0) central *= S(-static_cast<long>(2 * k - 1)) / S(static_cast<long>(2 * k));
    a[2 * k + 1] = central / S(static_cast<long>(2 * k + 1));
  }
  return a;
}

/// log(1 + u).
template <typename S>
TruncatedSeries<S> log1p_series(std::size_t order) {
  TruncatedSeries<S> l(order);
  for (std::size_t k = 1; k <= order; ++k) {
    const S inv = S(1) / S(static_cast<long>(k));
    l[k] = (k % 2 == 1) ? inv : -inv;
  }
  return l;
}

/// Range-checked coefficient of z^k.
template <typename S>
const S& coefficient(const TruncatedSeries<S>& f, std::size_t k) {
  return f.at(k);
}

}  // namespace eta

#endif  // ETA_SERIES_HPP
