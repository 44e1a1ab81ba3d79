#include <doctest.h>

#include <sstream>

#include "eta/rational.hpp"
#include "oracles.hpp"

using eta::BigInt;
using eta::Rational;
using eta::rat;

TEST_CASE("rat canonicalizes sign and gcd") {
  CHECK(rat(2, -4).str() == "-1/2");
  CHECK(rat(0, 7).str() == "0/1");
  CHECK(rat(0, -7) == Rational(0));
  CHECK(rat(-36740617, -2241727488000).str() == "36740617/2241727488000");
  CHECK(rat(6, 3).str() == "2/1");
  CHECK(rat(6, 3).is_integer());
}

TEST_CASE("rat rejects a zero denominator") {
  CHECK_THROWS_AS(rat(1, 0), eta::InvalidInput);
  CHECK_THROWS_AS(Rational(BigInt(3), BigInt(0)), eta::InvalidInput);
}

TEST_CASE("field operations") {
  CHECK(rat(1, 6) + rat(-1, 6) == Rational(0));
  CHECK((rat(1, 6) + rat(-1, 6)).str() == "0/1");
  CHECK((rat(11, 360) * Rational(4)).str() == "11/90");
  CHECK((rat(1, 6) / Rational(2)).str() == "1/12");
  CHECK((rat(1, 2) - rat(1, 3)).str() == "1/6");
  CHECK((-rat(3, 4)).str() == "-3/4");
  CHECK_THROWS_AS(rat(1, 6) / Rational(0), eta::ArithmeticError);
}

TEST_CASE("ordering") {
  CHECK(rat(-1, 2) < rat(-1, 3));
  CHECK(rat(-3, 7) > Rational(-1));
  CHECK(rat(2, 4) == rat(1, 2));
}

TEST_CASE("factorial") {
  CHECK(eta::factorial(0) == 1);
  CHECK(eta::factorial(5) == 120);
  CHECK(eta::factorial(14) == BigInt("87178291200"));
  for (unsigned m = 0; m <= 40; ++m) CHECK(eta::factorial(m) == oracle::product_factorial(m));
}

TEST_CASE("binomial") {
  CHECK(eta::binomial(4, 2) == 6);
  CHECK(eta::binomial(7, 0) == 1);
  CHECK(eta::binomial(10, 11) == 0);
  CHECK(eta::binomial(10, -1) == 0);
  for (unsigned m = 0; m <= 30; ++m)
    for (unsigned k = 0; k <= m; ++k) CHECK(eta::binomial(m, k) == oracle::pascal_binomial(m, k));
}

TEST_CASE("pow_int") {
  CHECK(eta::pow_int(Rational(2), 3).str() == "8/1");
  CHECK(eta::pow_int(Rational(-1), 4).str() == "1/1");
  CHECK(eta::pow_int(rat(1, 2), -2).str() == "4/1");
  CHECK(eta::pow_int(rat(-3, 7), 3).str() == "-27/343");
  CHECK(eta::pow_int(Rational(0), 0) == Rational(1));
  CHECK_THROWS_AS(eta::pow_int(Rational(0), -1), eta::ArithmeticError);
}

TEST_CASE("parse and print") {
  CHECK(Rational::parse("-1/6") == rat(-1, 6));
  CHECK(Rational::parse("4/-8") == rat(-1, 2));
  CHECK(Rational::parse("+3") == Rational(3));
  CHECK(Rational::parse("92427157/1307674368000") == rat(92427157, 1307674368000));
  CHECK_THROWS_AS(Rational::parse(""), eta::InvalidInput);
  CHECK_THROWS_AS(Rational::parse("1/"), eta::InvalidInput);
  CHECK_THROWS_AS(Rational::parse("1.5"), eta::InvalidInput);
  CHECK_THROWS_AS(Rational::parse("a/b"), eta::InvalidInput);
  CHECK_THROWS_AS(Rational::parse("1/0"), eta::InvalidInput);

  std::ostringstream os;
  os << rat(3, -9);
  CHECK(os.str() == "-1/3");
}

TEST_CASE("field axioms on random small rationals") {
  oracle::RationalGen gen(0x5eed);
  for (int i = 0; i < 500; ++i) {
    const auto a = gen(), b = gen(), c = gen();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("canonical form is idempotent") {
  oracle::RationalGen gen(7);
  for (int i = 0; i < 200; ++i) {
    const auto a = gen(50, 50);
    const auto again = rat(a.numerator(), a.denominator());
    CHECK(again.str() == a.str());
    CHECK(Rational::parse(a.str()) == a);
    CHECK(a.denominator() > 0);
    CHECK(gcd(a.numerator(), a.denominator()) == 1);
  }
}
