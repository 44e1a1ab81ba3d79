#ifndef ETA_RATIONAL_HPP
#define ETA_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace eta {

using BigInt = mpz_class;

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ArithmeticError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Exact fraction in lowest terms with a positive denominator. Zero is 0/1.
///
/// The canonical form is established by every constructor and preserved by
/// every operation, so equality is structural.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : value_(static_cast<long>(v)) {}
  Rational(long v) : value_(v) {}
  Rational(long long v) : value_(BigInt(std::to_string(v))) {}
  explicit Rational(const BigInt& v) : value_(v) {}

  /// Throws InvalidInput when den == 0.
  Rational(const BigInt& num, const BigInt& den);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }

  /// Canonical "p/q"; the denominator is always printed.
  std::string str() const;

  /// Accepts "p/q" or "p" with optional leading sign; throws InvalidInput.
  static Rational parse(std::string_view text);

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Display only; never used in a comparison.
  double to_double() const { return value_.get_d(); }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Canonical p/q. Throws InvalidInput for q == 0.
Rational rat(std::int64_t p, std::int64_t q);
Rational rat(const BigInt& p, const BigInt& q);

BigInt factorial(unsigned m);

/// C(m, k); zero when k < 0 or k > m.
BigInt binomial(unsigned m, long k);

/// a^k for signed k. Throws ArithmeticError for 0 raised to a negative power.
Rational pow_int(const Rational& a, long k);

}  // namespace eta

#endif  // ETA_RATIONAL_HPP
