#include "eta/eta_engine.hpp"

#include <future>
#include <sstream>

#include "eta/bernoulli.hpp"
#include "eta/polynomial.hpp"

namespace eta {

SquashingParameter::SquashingParameter(Rational rho) : rho_(std::move(rho)) {
  if (rho_ < Rational(-1)) throw InvalidInput("squashing parameter must satisfy rho >= -1, got " + rho_.str());
}

Series weingart_series(const Rational& rho, std::size_t order, SinhInverseReading reading) {
  // The argument has valuation 1, so one extra order survives log_derivative.
  const std::size_t work = order + 1;
  const auto arg = Series::variable(work, rho / Rational(2));
  if (reading == SinhInverseReading::inverse_function) {
    const auto f = Rational(2) * compose(arcsinh_series<Rational>(work), arg);
    return log_derivative(f).truncated(order);
  }
  // log(2 / sinh u) = log 2 - log sinh u
  const auto s = Rational(2) * compose(sinh_series<Rational>(work), arg);
  return (-log_derivative(s)).truncated(order);
}

Rational c_weingart(std::size_t n, std::size_t order_margin) {
  if (n < 1) throw InvalidInput("c_weingart needs n >= 1");
  const auto g = weingart_series(Rational(1), n + order_margin);
  if (g[0] != Rational(1))
    throw IntegrityError("generating function constant term is " + g[0].str() + ", expected 1/1");
  return Rational(2) * g[n];
}

Rational c_habel(std::size_t n) {
  if (n < 2) throw InvalidInput("c_habel needs n >= 2");
  const Rational half_n = rat(static_cast<std::int64_t>(n), 2);
  const Rational b_arg = half_n - Rational(1);
  const Rational phi_arg = Rational(1) - half_n;
  const auto phi = pochhammer_poly(n);

  Rational sum;
  auto phi_l = phi;
  for (std::size_t l = 0; l < n; ++l) {
    if (l > 0) phi_l = poly_derivative(phi_l);
    const Rational dphi = eval_poly(phi_l, phi_arg);
    if (dphi.is_zero()) continue;
    const Rational b = eval_poly(bernoulli_polynomial(l + 1), b_arg);
    sum += b / Rational(factorial(static_cast<unsigned>(l + 1))) * dphi;
  }
  return Rational(-2) / Rational(factorial(static_cast<unsigned>(n - 1))) * sum;
}

Rational c_bernoulli_with_prefactor(std::size_t n, const Rational& kappa) {
  if (n < 1) throw InvalidInput("c_bernoulli needs n >= 1");
  const Rational x = rat(static_cast<std::int64_t>(n), 2);
  return kappa / Rational(factorial(static_cast<unsigned>(n))) * norlund_bernoulli(n, n, x);
}

Rational c_bernoulli(std::size_t n) { return c_bernoulli_with_prefactor(n, Rational(kBernoulliPrefactor)); }

Rational c_dnumber(std::size_t n) {
  if (n < 1) throw InvalidInput("c_dnumber needs n >= 1");
  const Rational scale = pow_int(Rational(2), static_cast<long>(n) - 1) *
                         Rational(factorial(static_cast<unsigned>(n)));
  return d_number(n, n) / scale;
}

EtaCoefficient eta_coefficient(int n) {
  if (n < 2) throw InvalidInput("eta coefficient needs n >= 2, got " + std::to_string(n));
  const auto un = static_cast<std::size_t>(n);
  EtaCoefficient e;
  e.n = n;
  e.dim = 2 * n - 1;
  e.c_weingart = c_weingart(un);
  e.c_habel = c_habel(un);
  e.c_bernoulli = c_bernoulli(un);
  e.c_dnumber = c_dnumber(un);
  e.agreed = e.c_weingart == e.c_habel && e.c_weingart == e.c_bernoulli && e.c_weingart == e.c_dnumber;
  if (n % 2 == 0 && n >= 4) e.anomaly = pow_int(Rational(2), n / 2) * e.c_weingart;
  return e;
}

namespace {

std::string disagreement(const EtaCoefficient& e) {
  std::ostringstream os;
  os << "routes disagree at n=" << e.n << ": weingart=" << e.c_weingart << " habel=" << e.c_habel
     << " bernoulli=" << e.c_bernoulli << " dnumber=" << e.c_dnumber;
  return os.str();
}

}  // namespace

Rational eta_invariant(int dim, const SquashingParameter& rho) {
  if (dim < 3 || dim % 2 == 0)
    throw InvalidInput("sphere dimension must be odd and >= 3, got " + std::to_string(dim));
  const int n = (dim + 1) / 2;
  const auto e = eta_coefficient(n);
  if (!e.agreed) throw IntegrityError(disagreement(e));
  return e.value() * pow_int(rho.value(), n);
}

Rational conformal_anomaly(int n) {
  if (n < 4 || n % 2 != 0)
    throw InvalidInput("conformal anomaly needs even n >= 4, got " + std::to_string(n));
  return pow_int(Rational(2), n / 2) * c_weingart(static_cast<std::size_t>(n));
}

const ReferenceTables& reference_tables() {
  static const ReferenceTables tables{
      {
          {2, rat(-1, 6)},
          {4, rat(11, 360)},
          {6, rat(-191, 30240)},
          {8, rat(2497, 1814400)},
          {10, rat(-14797, 47900160)},
          {12, rat(92427157, 1307674368000)},
          {14, rat(-36740617, 2241727488000)},
      },
      {
          {4, rat(11, 90)},
          {6, rat(-191, 3780)},
          {8, rat(2497, 113400)},
          {10, rat(-14797, 1496880)},
          {12, rat(92427157, 20432412000)},
          {14, rat(-36740617, 17513496000)},
      },
  };
  return tables;
}

VerificationReport verify_all(int max_n, const std::vector<Rational>& rho_samples,
                              const ReferenceTables& tables) {
  if (max_n < 2) throw InvalidInput("verify_all needs max_n >= 2, got " + std::to_string(max_n));
  for (const auto& rho : rho_samples) static_cast<void>(SquashingParameter(rho));

  VerificationReport report;
  report.max_n = max_n;
  report.rho_samples = rho_samples;

  // Warm the shared cache before fanning out so workers only read it.
  shared_bernoulli(static_cast<std::size_t>(max_n) + 1);

  std::vector<std::future<EtaCoefficient>> jobs;
  for (int n = 2; n <= max_n; ++n) jobs.push_back(std::async(std::launch::async, eta_coefficient, n));
  for (auto& j : jobs) report.coefficients.push_back(j.get());

  auto fail = [&](std::string what) {
    if (!report.first_failure) report.first_failure = std::move(what);
  };

  report.routes_agree = true;
  for (const auto& e : report.coefficients) {
    if (!e.agreed) {
      report.routes_agree = false;
      fail(disagreement(e));
    }
  }

  auto lookup = [&](int n) -> const EtaCoefficient& { return report.coefficients[static_cast<std::size_t>(n - 2)]; };

  report.golden_c_ok = true;
  for (const auto& [n, expected] : tables.c) {
    if (n < 2 || n > max_n) continue;
    ++report.golden_c_checked;
    const auto& got = lookup(n).value();
    if (got == expected) {
      ++report.golden_c_matched;
    } else {
      report.golden_c_ok = false;
      fail("c_" + std::to_string(n) + " = " + got.str() + " but reference table has " + expected.str());
    }
  }

  report.golden_zeta_ok = true;
  for (const auto& [n, expected] : tables.zeta) {
    if (n < 2 || n > max_n) continue;
    ++report.golden_zeta_checked;
    const auto& e = lookup(n);
    const Rational got = e.anomaly ? *e.anomaly : pow_int(Rational(2), n / 2) * e.value();
    if (got == expected) {
      ++report.golden_zeta_matched;
    } else {
      report.golden_zeta_ok = false;
      fail("zeta(0) on S^" + std::to_string(n) + " = " + got.str() + " but reference table has " +
           expected.str());
    }
  }

  report.homogeneity_ok = true;
  for (const auto& rho : rho_samples) {
    if (rho.is_zero()) continue;  // eta vanishes identically; no series to expand
    const auto g = weingart_series(rho, static_cast<std::size_t>(max_n));
    if (g[0] != Rational(1)) {
      report.homogeneity_ok = false;
      fail("rho=" + rho.str() + ": generating function constant term " + g[0].str());
    }
    for (const auto& e : report.coefficients) {
      const Rational direct = Rational(2) * g[static_cast<std::size_t>(e.n)];
      const Rational scaled = e.value() * pow_int(rho, e.n);
      if (direct != scaled) {
        report.homogeneity_ok = false;
        fail("rho=" + rho.str() + ", n=" + std::to_string(e.n) + ": series gives " + direct.str() +
             " but c_n rho^n = " + scaled.str());
      }
    }
  }

  return report;
}

}  // namespace eta
