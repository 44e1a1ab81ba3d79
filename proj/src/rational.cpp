#include "eta/rational.hpp"

#include <cctype>
#include <ostream>

namespace eta {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt to_bigint(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!valid_integer(num, true)) throw InvalidInput("malformed rational: '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(to_bigint(num));
  const auto den = text.substr(slash + 1);
  if (!valid_integer(den, true)) throw InvalidInput("malformed rational: '" + std::string(text) + "'");
  return Rational(to_bigint(num), to_bigint(den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational rat(std::int64_t p, std::int64_t q) {
  return Rational(BigInt(std::to_string(p)), BigInt(std::to_string(q)));
}

Rational rat(const BigInt& p, const BigInt& q) { return Rational(p, q); }

BigInt factorial(unsigned m) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), m);
  return r;
}

BigInt binomial(unsigned m, long k) {
  if (k < 0 || k > static_cast<long>(m)) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), m, static_cast<unsigned long>(k));
  return r;
}

Rational pow_int(const Rational& a, long k) {
  if (k < 0) {
    if (a.is_zero()) throw ArithmeticError("zero raised to a negative power");
    return pow_int(Rational(1) / a, -k);
  }
  BigInt num, den;
  const unsigned long e = static_cast<unsigned long>(k);
  mpz_pow_ui(num.get_mpz_t(), a.numerator().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), a.denominator().get_mpz_t(), e);
  return Rational(num, den);
}

}  // namespace eta
