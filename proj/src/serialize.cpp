#include "eta/serialize.hpp"

#include <string>

namespace eta {

namespace {

Json optional_rational(const std::optional<Rational>& r) { return r ? Json(r->str()) : Json(nullptr); }

Json table_to_json(const std::map<int, Rational>& table) {
  Json out = Json::object();
  for (const auto& [n, v] : table) out[std::to_string(n)] = v.str();
  return out;
}

std::map<int, Rational> table_from_json(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_object())
    throw InvalidInput(std::string("reference document lacks object '") + key + "'");
  std::map<int, Rational> out;
  for (const auto& [k, v] : doc[key].items()) {
    if (!v.is_string()) throw InvalidInput("reference value for n=" + k + " is not a \"p/q\" string");
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(k, &used);
      if (used != k.size()) throw std::invalid_argument(k);
    } catch (const std::logic_error&) {
      throw InvalidInput("reference key '" + k + "' is not an integer");
    }
    out[n] = Rational::parse(v.get<std::string>());
  }
  return out;
}

}  // namespace

Json to_json(const EtaCoefficient& e) {
  Json j;
  j["n"] = e.n;
  j["dim"] = e.dim;
  j["c_weingart"] = e.c_weingart.str();
  j["c_habel"] = e.c_habel.str();
  j["c_bernoulli"] = e.c_bernoulli.str();
  j["c_dnumber"] = e.c_dnumber.str();
  j["agreed"] = e.agreed;
  j["anomaly"] = optional_rational(e.anomaly);
  return j;
}

Json to_json(const VerificationReport& r, bool include_coefficients) {
  Json j;
  j["max_n"] = r.max_n;
  Json rhos = Json::array();
  for (const auto& rho : r.rho_samples) rhos.push_back(rho.str());
  j["rho_samples"] = rhos;
  j["routes_agree"] = r.routes_agree;
  j["golden_c_ok"] = r.golden_c_ok;
  j["golden_c_matched"] = r.golden_c_matched;
  j["golden_c_checked"] = r.golden_c_checked;
  j["golden_zeta_ok"] = r.golden_zeta_ok;
  j["golden_zeta_matched"] = r.golden_zeta_matched;
  j["golden_zeta_checked"] = r.golden_zeta_checked;
  j["homogeneity_ok"] = r.homogeneity_ok;
  j["first_failure"] = r.first_failure ? Json(*r.first_failure) : Json(nullptr);
  if (include_coefficients) {
    Json coeffs = Json::array();
    for (const auto& e : r.coefficients) coeffs.push_back(to_json(e));
    j["coefficients"] = coeffs;
  }
  return j;
}

Json to_json(const ReferenceTables& t) {
  Json j;
  j["c"] = table_to_json(t.c);
  j["zeta"] = table_to_json(t.zeta);
  return j;
}

ReferenceTables reference_tables_from_json(const Json& doc) {
  if (!doc.is_object()) throw InvalidInput("reference document must be a JSON object");
  return ReferenceTables{table_from_json(doc, "c"), table_from_json(doc, "zeta")};
}

}  // namespace eta
