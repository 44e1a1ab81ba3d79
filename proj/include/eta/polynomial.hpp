#ifndef ETA_POLYNOMIAL_HPP
#define ETA_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "eta/rational.hpp"

namespace eta {

/// Dense univariate polynomial, coefficients from degree 0 upward.
///
/// Trailing zeros are always stripped, so the zero polynomial is the empty
/// coefficient list and `degree()` is -1 for it.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(std::size_t degree, const Scalar& c = Scalar(1)) {
    std::vector<Scalar> v(degree + 1, Scalar(0));
    v[degree] = c;
    return Polynomial(std::move(v));
  }

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  /// Coefficient of x^k, zero past the degree.
  Scalar operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(0); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<Scalar> r(std::max(p.coeffs_.size(), q.coeffs_.size()), Scalar(0));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = p[k] + q[k];
    return Polynomial(std::move(r));
  }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Scalar> r(p.coeffs_.size() + q.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j) r[i + j] += p.coeffs_[i] * q.coeffs_[j];
    return Polynomial(std::move(r));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using RatPolynomial = Polynomial<Rational>;

/// Horner evaluation.
template <typename S>
S eval_poly(const Polynomial<S>& p, const S& x) {
  S acc(0);
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

/// l-fold formal derivative.
template <typename S>
Polynomial<S> poly_derivative(const Polynomial<S>& p, std::size_t l = 1) {
  const auto& c = p.coefficients();
  if (l >= c.size()) return {};
  std::vector<S> r(c.size() - l, S(0));
  for (std::size_t k = 0; k < r.size(); ++k) {
    // (k+l)! / k!
    S falling(1);
    for (std::size_t i = k + 1; i <= k + l; ++i) falling *= S(static_cast<long>(i));
    r[k] = falling * c[k + l];
  }
  return Polynomial<S>(std::move(r));
}

}  // namespace eta

#endif  // ETA_POLYNOMIAL_HPP
