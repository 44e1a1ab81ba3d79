#include <doctest.h>

#include "eta/bernoulli.hpp"
#include "eta/eta_engine.hpp"
#include "eta/serialize.hpp"

using eta::rat;
using eta::Rational;

TEST_CASE("generating-function route") {
  CHECK(eta::c_weingart(2) == rat(-1, 6));
  CHECK(eta::c_weingart(4) == rat(11, 360));
  CHECK(eta::c_weingart(3) == Rational(0));
  CHECK(eta::c_weingart(1) == Rational(0));
  CHECK(eta::c_weingart(4, 0) == rat(11, 360));
  CHECK(eta::c_weingart(16) == rat(61430943169, 16005934264320000));
  CHECK(eta::c_weingart(20) == Rational::parse("16399688681447/76289642156851200000"));
  CHECK(eta::c_habel(22) == Rational::parse("-3098811853954483/60433285883107737600000"));
}

TEST_CASE("finite-sum route") {
  // n = 2: only l = 1 survives, (B_2(0)/2!) Phi'(0) = 1/12.
  CHECK(eta::c_habel(2) == rat(-1, 6));
  // n = 4: l = 1 gives -1/12 and l = 3 gives -1/120.
  CHECK(eta::c_habel(4) == Rational(-2) / Rational(6) * (rat(-1, 12) + rat(-1, 120)));
  CHECK(eta::c_habel(4) == rat(11, 360));
  CHECK(eta::c_habel(6) == rat(-191, 30240));
  CHECK(eta::c_habel(5) == Rational(0));
  CHECK_THROWS_AS(eta::c_habel(1), eta::InvalidInput);
}

TEST_CASE("generalised Bernoulli route") {
  CHECK(eta::c_bernoulli(2) == rat(-1, 6));
  CHECK(eta::c_bernoulli(4) == rat(11, 360));
  CHECK(eta::c_bernoulli(5) == Rational(0));
  CHECK(eta::kBernoulliPrefactor == 2);
  CHECK(eta::c_bernoulli_with_prefactor(2, Rational(4)) == rat(-1, 3));
}

TEST_CASE("D-number route") {
  CHECK(eta::c_dnumber(2) == rat(-2, 3) / Rational(4));
  CHECK(eta::c_dnumber(2) == rat(-1, 6));
  CHECK(eta::c_dnumber(4) == rat(88, 15) / Rational(8 * 24));
  CHECK(eta::c_dnumber(4) == rat(11, 360));
  CHECK(eta::c_dnumber(3) == Rational(0));
}

TEST_CASE("reciprocal reading of sinh^-1 is rejected by the table") {
  const auto g = eta::weingart_series(Rational(1), 6, eta::SinhInverseReading::reciprocal);
  CHECK(g[0] == Rational(-1));
  CHECK(Rational(2) * g[4] != rat(11, 360));
  const auto good = eta::weingart_series(Rational(1), 6);
  CHECK(good[0] == Rational(1));
}

TEST_CASE("squashing parameter domain") {
  CHECK_NOTHROW(eta::SquashingParameter(Rational(-1)));
  CHECK_NOTHROW(eta::SquashingParameter(Rational(0)));
  CHECK_THROWS_AS(eta::SquashingParameter(rat(-3, 2)), eta::InvalidInput);
}

TEST_CASE("eta_invariant") {
  CHECK(eta::eta_invariant(3, eta::SquashingParameter(Rational(1))) == rat(-1, 6));
  CHECK(eta::eta_invariant(3, eta::SquashingParameter(Rational(-1))) == rat(-1, 6));
  CHECK(eta::eta_invariant(3, eta::SquashingParameter(rat(1, 2))) == rat(-1, 24));
  CHECK(eta::eta_invariant(7, eta::SquashingParameter(Rational(2))) == rat(11 * 16, 360));
  CHECK(eta::eta_invariant(3, eta::SquashingParameter(Rational(0))) == Rational(0));
  for (const auto& rho : {Rational(1), rat(-1, 3), Rational(5)})
    CHECK(eta::eta_invariant(5, eta::SquashingParameter(rho)) == Rational(0));
  CHECK_THROWS_AS(eta::eta_invariant(4, eta::SquashingParameter(Rational(1))), eta::InvalidInput);
  CHECK_THROWS_AS(eta::eta_invariant(1, eta::SquashingParameter(Rational(1))), eta::InvalidInput);
}

TEST_CASE("conformal_anomaly") {
  CHECK(eta::conformal_anomaly(4) == rat(11, 90));
  CHECK(eta::conformal_anomaly(6) == rat(-191, 3780));
  CHECK(eta::conformal_anomaly(14) == rat(-36740617, 17513496000));
  CHECK_THROWS_AS(eta::conformal_anomaly(5), eta::InvalidInput);
  CHECK_THROWS_AS(eta::conformal_anomaly(2), eta::InvalidInput);
}

TEST_CASE("reference tables are self-consistent") {
  const auto& t = eta::reference_tables();
  CHECK(t.c.size() == 7);
  CHECK(t.zeta.size() == 6);
  CHECK(t.c.at(8) == rat(2497, 1814400));
  CHECK(t.zeta.at(8) == rat(2497, 113400));
  for (const auto& [n, z] : t.zeta) CHECK(z == eta::pow_int(Rational(2), n / 2) * t.c.at(n));
}

TEST_CASE("eta_coefficient record") {
  const auto e = eta::eta_coefficient(4);
  CHECK(e.dim == 7);
  CHECK(e.agreed);
  REQUIRE(e.anomaly);
  CHECK(*e.anomaly == rat(11, 90));
  CHECK_FALSE(eta::eta_coefficient(2).anomaly);
  CHECK_FALSE(eta::eta_coefficient(5).anomaly);
  CHECK_THROWS_AS(eta::eta_coefficient(1), eta::InvalidInput);

  const auto j = eta::to_json(e);
  CHECK(j["c_habel"] == "11/360");
  CHECK(j["anomaly"] == "11/90");
  CHECK(eta::to_json(eta::eta_coefficient(2))["anomaly"].is_null());
}

TEST_CASE("verify_all on the published range") {
  const auto r = eta::verify_all(14, {Rational(1)});
  CHECK(r.ok());
  CHECK(r.routes_agree);
  CHECK(r.golden_c_ok);
  CHECK(r.golden_zeta_ok);
  CHECK(r.golden_c_checked == 7);
  CHECK(r.golden_zeta_checked == 6);
  CHECK(r.coefficients.size() == 13);
  CHECK_FALSE(r.first_failure);
}

TEST_CASE("verify_all reports a corrupted reference entry") {
  auto tables = eta::reference_tables();
  tables.c[4] = rat(11, 361);
  const auto r = eta::verify_all(4, {Rational(1)}, tables);
  CHECK_FALSE(r.golden_c_ok);
  CHECK(r.golden_zeta_ok);
  CHECK(r.routes_agree);
  CHECK_FALSE(r.ok());
  REQUIRE(r.first_failure);
  CHECK(r.first_failure->find("c_4") != std::string::npos);
}

TEST_CASE("verify_all beyond the table") {
  const auto r = eta::verify_all(40, {Rational(1), rat(-3, 7), Rational(0)});
  CHECK(r.ok());
  CHECK(r.golden_c_checked == 7);
  CHECK(r.coefficients.back().n == 40);
  CHECK_THROWS_AS(eta::verify_all(1, {}), eta::InvalidInput);
  CHECK_THROWS_AS(eta::verify_all(4, {Rational(-2)}), eta::InvalidInput);
}

TEST_CASE("reference tables round-trip through JSON") {
  const auto doc = eta::to_json(eta::reference_tables());
  const auto back = eta::reference_tables_from_json(doc);
  CHECK(back.c == eta::reference_tables().c);
  CHECK(back.zeta == eta::reference_tables().zeta);
  CHECK_THROWS_AS(eta::reference_tables_from_json(eta::Json::parse(R"({"c": {}})")), eta::InvalidInput);
  CHECK_THROWS_AS(eta::reference_tables_from_json(eta::Json::parse(R"({"c": {"x": "1/2"}, "zeta": {}})")),
                  eta::InvalidInput);
  CHECK_THROWS_AS(eta::reference_tables_from_json(eta::Json::parse(R"({"c": {"2": 0.5}, "zeta": {}})")),
                  eta::InvalidInput);
}
