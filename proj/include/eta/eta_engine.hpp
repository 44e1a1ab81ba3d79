#ifndef ETA_ETA_ENGINE_HPP
#define ETA_ETA_ENGINE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eta/rational.hpp"
#include "eta/series.hpp"

namespace eta {

/// Raised when the independent routes to c_n disagree.
struct IntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Berger sphere squashing, l_3^2 = 1 + rho. rho = -1 is the extreme oblate limit.
class SquashingParameter {
 public:
  /// Throws InvalidInput for rho < -1.
  explicit SquashingParameter(Rational rho);
  const Rational& value() const { return rho_; }

 private:
  Rational rho_;
};

/// How the "sinh^-1" in the extrinsic generating function is read.
enum class SinhInverseReading {
  inverse_function,  // arcsinh
  reciprocal,        // 1 / sinh
};

/// z d/dz log(2 sinh^-1(rho z / 2)) through z^order.
///
/// With the arcsinh reading the constant term is 1 and coefficient n is
/// eta_n / 2. Throws SeriesError for rho = 0.
Series weingart_series(const Rational& rho, std::size_t order,
                       SinhInverseReading reading = SinhInverseReading::inverse_function);

/// Extra series orders carried past z^n.
inline constexpr std::size_t kSeriesMargin = 2;

/// Overall constant in front of B^(n)_n(n/2) / n!. Calibrated against the
/// tabulated c_2 and c_4; the alternative 4 is off by exactly a factor 2.
inline constexpr long kBernoulliPrefactor = 2;

/// Generating-function route: 2 [z^n] of weingart_series at rho = 1.
Rational c_weingart(std::size_t n, std::size_t order_margin = kSeriesMargin);

/// Conjectured finite sum
///   -2/(n-1)! sum_{l=0}^{n-1} B_{l+1}(n/2 - 1)/(l+1)! Phi^(l)(1 - n/2)
/// with Phi(x) = x (x+1) ... (x+n-2). Throws InvalidInput for n < 2.
Rational c_habel(std::size_t n);

/// kappa / n! * B^(n)_n(n/2).
Rational c_bernoulli_with_prefactor(std::size_t n, const Rational& kappa);
Rational c_bernoulli(std::size_t n);

/// D^(n)_n / (2^(n-1) n!).
Rational c_dnumber(std::size_t n);

struct EtaCoefficient {
  int n = 0;
  int dim = 0;  // 2n - 1
  Rational c_weingart;
  Rational c_habel;
  Rational c_bernoulli;
  Rational c_dnumber;
  bool agreed = false;
  /// 2^(n/2) c_n, present for even n >= 4.
  std::optional<Rational> anomaly;

  const Rational& value() const { return c_weingart; }
};

/// All four routes for one n. Throws InvalidInput for n < 2.
EtaCoefficient eta_coefficient(int n);

/// c_n rho^n on the Berger sphere of dimension dim = 2n - 1.
///
/// Throws InvalidInput for even dim or dim < 3, IntegrityError if the
/// routes disagree.
Rational eta_invariant(int dim, const SquashingParameter& rho);

/// Dirac zeta(0) on the round S^n, 2^(n/2) c_n. Throws InvalidInput unless
/// n is even and n >= 4.
Rational conformal_anomaly(int n);

/// Tabulated reference values keyed by n.
struct ReferenceTables {
  std::map<int, Rational> c;     // n = 2, 4, ..., 14
  std::map<int, Rational> zeta;  // n = 4, 6, ..., 14
};

/// The embedded published values.
const ReferenceTables& reference_tables();

struct VerificationReport {
  int max_n = 0;
  std::vector<Rational> rho_samples;
  std::vector<EtaCoefficient> coefficients;  // n = 2 ... max_n

  bool routes_agree = false;
  int golden_c_checked = 0;
  int golden_c_matched = 0;
  int golden_zeta_checked = 0;
  int golden_zeta_matched = 0;
  bool golden_c_ok = false;
  bool golden_zeta_ok = false;
  bool homogeneity_ok = false;
  std::optional<std::string> first_failure;

  bool ok() const { return routes_agree && golden_c_ok && golden_zeta_ok && homogeneity_ok; }
};

/// Runs every route for n = 2 ... max_n, compares against `tables`, and checks
/// rho-homogeneity at each sample against an independent rho-substituted
/// generating function. Failures are reported, never thrown; only a
/// max_n < 2 or a rho sample below -1 raises InvalidInput.
VerificationReport verify_all(int max_n, const std::vector<Rational>& rho_samples,
                              const ReferenceTables& tables = reference_tables());

}  // namespace eta

#endif  // ETA_ETA_ENGINE_HPP
