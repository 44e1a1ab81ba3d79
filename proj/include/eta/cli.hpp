#ifndef ETA_CLI_HPP
#define ETA_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eta/eta_engine.hpp"
#include "eta/rational.hpp"

namespace eta::cli {

enum class OutputFormat { markdown, csv, json };

struct CliConfig {
  int max_n = 40;
  OutputFormat format = OutputFormat::markdown;
  Rational rho{1};
  bool include_odd = false;
};

/// Exit statuses shared by every subcommand.
enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

/// One row of the sphere table. zeta is absent for n = 2 and for odd n.
struct TableRow {
  int dim = 0;
  int n = 0;
  Rational c;
  Rational eta;
  std::optional<Rational> zeta;
};

std::vector<TableRow> table_rows(const VerificationReport& report, const CliConfig& config);

std::string render_table(const VerificationReport& report, const CliConfig& config);
std::string render_anomaly(const VerificationReport& report, const CliConfig& config);
std::string render_verify(const VerificationReport& report, const CliConfig& config);
std::string render_series(const Series& g, const Rational& rho, OutputFormat format);

/// Parses argv and runs one subcommand. `reference` replaces the embedded
/// tables when set (used by tests; the binary also accepts --reference FILE).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const ReferenceTables* reference = nullptr);

}  // namespace eta::cli

#endif  // ETA_CLI_HPP
