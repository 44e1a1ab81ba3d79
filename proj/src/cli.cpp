#include "eta/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "eta/bernoulli.hpp"
#include "eta/serialize.hpp"

namespace eta::cli {

namespace {

std::string cell(const std::optional<Rational>& r) { return r ? r->str() : std::string(); }

Json json_cell(const std::optional<Rational>& r) { return r ? Json(r->str()) : Json(nullptr); }

Json verification_summary(const VerificationReport& r) { return to_json(r, false); }

}  // namespace

std::vector<TableRow> table_rows(const VerificationReport& report, const CliConfig& config) {
  std::vector<TableRow> rows;
  for (const auto& e : report.coefficients) {
    if (e.n % 2 != 0 && !config.include_odd) continue;
    rows.push_back({e.dim, e.n, e.value(), e.value() * pow_int(config.rho, e.n), e.anomaly});
  }
  return rows;
}

std::string render_table(const VerificationReport& report, const CliConfig& config) {
  const auto rows = table_rows(report, config);
  std::ostringstream os;
  switch (config.format) {
    case OutputFormat::markdown:
      os << "| dim | n | c | eta | zeta |\n";
      os << "|----:|--:|--:|----:|-----:|\n";
      for (const auto& r : rows)
        os << "| " << r.dim << " | " << r.n << " | " << r.c << " | " << r.eta << " | " << cell(r.zeta) << " |\n";
      break;
    case OutputFormat::csv:
      os << "dim,n,c,eta,zeta\n";
      for (const auto& r : rows) os << r.dim << ',' << r.n << ',' << r.c << ',' << r.eta << ',' << cell(r.zeta) << '\n';
      break;
    case OutputFormat::json: {
      Json j;
      j["max_n"] = config.max_n;
      j["rho"] = config.rho.str();
      Json arr = Json::array();
      for (const auto& r : rows) {
        Json row;
        row["dim"] = r.dim;
        row["n"] = r.n;
        row["c"] = r.c.str();
        row["eta"] = r.eta.str();
        row["zeta"] = json_cell(r.zeta);
        arr.push_back(row);
      }
      j["rows"] = arr;
      j["verification"] = verification_summary(report);
      os << j.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

std::string render_anomaly(const VerificationReport& report, const CliConfig& config) {
  std::vector<std::pair<int, Rational>> rows;
  for (const auto& e : report.coefficients)
    if (e.anomaly) rows.emplace_back(e.n, *e.anomaly);

  std::ostringstream os;
  switch (config.format) {
    case OutputFormat::markdown:
      os << "| n | zeta |\n";
      os << "|--:|-----:|\n";
      for (const auto& [n, z] : rows) os << "| " << n << " | " << z << " |\n";
      break;
    case OutputFormat::csv:
      os << "n,zeta\n";
      for (const auto& [n, z] : rows) os << n << ',' << z << '\n';
      break;
    case OutputFormat::json: {
      Json j;
      j["max_n"] = config.max_n;
      Json arr = Json::array();
      for (const auto& [n, z] : rows) {
        Json row;
        row["n"] = n;
        row["zeta"] = z.str();
        arr.push_back(row);
      }
      j["rows"] = arr;
      j["verification"] = verification_summary(report);
      os << j.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

std::string render_verify(const VerificationReport& report, const CliConfig& config) {
  std::ostringstream os;
  switch (config.format) {
    case OutputFormat::json:
      os << to_json(report, true).dump(2) << '\n';
      return os.str();
    case OutputFormat::csv:
      os << "n,dim,c_weingart,c_habel,c_bernoulli,c_dnumber,agreed\n";
      for (const auto& e : report.coefficients)
        os << e.n << ',' << e.dim << ',' << e.c_weingart << ',' << e.c_habel << ',' << e.c_bernoulli << ','
           << e.c_dnumber << ',' << (e.agreed ? "true" : "false") << '\n';
      return os.str();
    case OutputFormat::markdown:
      break;
  }

  for (const auto& e : report.coefficients)
    os << "n=" << e.n << " dim=" << e.dim << " c=" << e.value() << ' ' << (e.agreed ? "agree" : "DISAGREE")
       << '\n';
  if (report.routes_agree)
    os << "routes agree for all n ≤ " << report.max_n << '\n';
  else
    os << "routes DISAGREE\n";
  os << report.golden_c_matched << '/' << report.golden_c_checked << " golden c-values match, "
     << report.golden_zeta_matched << '/' << report.golden_zeta_checked << " zeta values match\n";
  for (const auto& rho : report.rho_samples)
    os << "homogeneity at rho=" << rho << ": " << (report.homogeneity_ok ? "ok" : "FAILED") << '\n';
  if (report.first_failure) os << "first failure: " << *report.first_failure << '\n';
  os << (report.ok() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::string render_series(const Series& g, const Rational& rho, OutputFormat format) {
  std::ostringstream os;
  const auto& c = g.coefficients();
  switch (format) {
    case OutputFormat::markdown:
      for (std::size_t k = 0; k < c.size(); ++k) os << (k ? ", " : "") << c[k];
      os << '\n';
      break;
    case OutputFormat::csv:
      os << "k,coefficient\n";
      for (std::size_t k = 0; k < c.size(); ++k) os << k << ',' << c[k] << '\n';
      break;
    case OutputFormat::json: {
      Json j;
      j["order"] = g.order();
      j["rho"] = rho.str();
      Json arr = Json::array();
      for (const auto& v : c) arr.push_back(v.str());
      j["coefficients"] = arr;
      os << j.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_rho(const std::string& text) {
  Rational rho;
  try {
    rho = Rational::parse(text);
  } catch (const InvalidInput& e) {
    throw UsageError(std::string("--rho: ") + e.what());
  }
  if (rho < Rational(-1)) throw UsageError("--rho must be >= -1/1, got " + rho.str());
  return rho;
}

void check_max_n(int max_n) {
  if (max_n < 2 || max_n % 2 != 0)
    throw UsageError("--max-n must be an even integer >= 2, got " + std::to_string(max_n));
}

ReferenceTables load_reference(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open reference file '" + path + "'");
  try {
    return reference_tables_from_json(Json::parse(in));
  } catch (const Json::exception& e) {
    throw UsageError("reference file '" + path + "': " + e.what());
  } catch (const InvalidInput& e) {
    throw UsageError("reference file '" + path + "': " + e.what());
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const ReferenceTables* reference) {
  CLI::App app{"Exact eta-invariant coefficients on Berger spheres", "berger_eta"};
  app.require_subcommand(1);

  CliConfig config;
  std::string rho_text = "1/1";
  std::string format_text = "md";
  std::string reference_path;

  const std::map<std::string, OutputFormat> formats{
      {"md", OutputFormat::markdown}, {"csv", OutputFormat::csv}, {"json", OutputFormat::json}};

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "Output format: md, csv or json")
        ->check(CLI::IsMember({"md", "csv", "json"}));
  };
  auto add_table_flags = [&](CLI::App* sub) {
    sub->add_option("--max-n", config.max_n, "Largest n (even)");
    sub->add_option("--rho", rho_text, "Squashing parameter as p/q");
    sub->add_flag("--include-odd", config.include_odd, "Also list odd n (c_n = 0)");
    sub->add_option("--reference", reference_path, "JSON file replacing the embedded reference tables");
    add_format(sub);
  };

  auto* table = app.add_subcommand("table", "Tabulate c_n, eta_n(rho) and zeta(0)");
  add_table_flags(table);
  auto* anomaly = app.add_subcommand("anomaly", "Tabulate the Dirac zeta(0) on round even spheres");
  add_table_flags(anomaly);
  auto* verify = app.add_subcommand("verify", "Cross-check all routes and the reference tables");
  add_table_flags(verify);

  int series_order = 0;
  auto* series = app.add_subcommand("series", "Coefficients of z d/dz log(2 arcsinh(rho z/2))");
  series->add_option("order", series_order, "Highest power of z")->required();
  series->add_option("--rho", rho_text, "Squashing parameter as p/q");
  add_format(series);

  int bern_n = 0, bern_nu = 0;
  std::string bern_x;
  auto* bernoulli = app.add_subcommand("bernoulli", "Generalised Bernoulli value B^(n)_nu(x)");
  bernoulli->add_option("n", bern_n, "Order n >= 1")->required();
  bernoulli->add_option("nu", bern_nu, "Index nu >= 0")->required();
  bernoulli->add_option("x", bern_x, "Argument as p/q")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    config.format = formats.at(format_text);

    if (*series) {
      if (series_order < 2) throw UsageError("series order must be >= 2, got " + std::to_string(series_order));
      const Rational rho = parse_rho(rho_text);
      if (rho.is_zero()) throw UsageError("series needs rho != 0");
      out << render_series(weingart_series(rho, static_cast<std::size_t>(series_order)), rho, config.format);
      return kSuccess;
    }

    if (*bernoulli) {
      if (bern_n < 1) throw UsageError("bernoulli: n must be >= 1");
      if (bern_nu < 0) throw UsageError("bernoulli: nu must be >= 0");
      Rational x;
      try {
        x = Rational::parse(bern_x);
      } catch (const InvalidInput& e) {
        throw UsageError(std::string("bernoulli: ") + e.what());
      }
      out << norlund_bernoulli(static_cast<std::size_t>(bern_n), static_cast<std::size_t>(bern_nu), x) << '\n';
      return kSuccess;
    }

    check_max_n(config.max_n);
    config.rho = parse_rho(rho_text);
    ReferenceTables loaded;
    if (!reference_path.empty()) {
      loaded = load_reference(reference_path);
      reference = &loaded;
    }
    const auto report = verify_all(config.max_n, {config.rho}, reference ? *reference : reference_tables());

    if (*table) {
      out << render_table(report, config);
      return kSuccess;
    }
    if (*anomaly) {
      out << render_anomaly(report, config);
      return kSuccess;
    }
    out << render_verify(report, config);
    return report.ok() ? kSuccess : kVerificationFailed;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace eta::cli
