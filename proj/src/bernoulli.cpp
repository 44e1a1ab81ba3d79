#include "eta/bernoulli.hpp"

#include <mutex>

namespace eta {

BernoulliCache bernoulli_numbers(std::size_t maxM) {
  BernoulliCache cache;
  cache.numbers.reserve(maxM + 1);
  cache.numbers.emplace_back(1);
  for (std::size_t m = 1; m <= maxM; ++m) {
    const auto m1 = static_cast<unsigned>(m + 1);
    Rational acc;
    for (std::size_t k = 0; k < m; ++k) {
      if (cache.numbers[k].is_zero()) continue;
      acc += Rational(binomial(m1, static_cast<long>(k))) * cache.numbers[k];
    }
    cache.numbers.push_back(-acc / Rational(static_cast<long>(m1)));
  }
  return cache;
}

std::shared_ptr<const BernoulliCache> shared_bernoulli(std::size_t maxM) {
  static std::mutex mutex;
  static std::shared_ptr<const BernoulliCache> cache;
  std::lock_guard lock(mutex);
  if (!cache || cache->max_index() < maxM)
    cache = std::make_shared<const BernoulliCache>(bernoulli_numbers(maxM));
  return cache;
}

RatPolynomial bernoulli_polynomial(std::size_t m) {
  const auto b = shared_bernoulli(m);
  std::vector<Rational> c(m + 1);
  for (std::size_t k = 0; k <= m; ++k)
    c[m - k] = Rational(binomial(static_cast<unsigned>(m), static_cast<long>(k))) * (*b)[k];
  return RatPolynomial(std::move(c));
}

RatPolynomial pochhammer_poly(std::size_t n) {
  if (n < 2) throw InvalidInput("pochhammer_poly needs n >= 2");
  RatPolynomial p = RatPolynomial::monomial(0);
  for (std::size_t i = 0; i + 2 <= n; ++i)
    p = p * RatPolynomial({Rational(static_cast<long>(i)), Rational(1)});
  return p;
}

namespace {

// t / (e^t - 1) by long division, so this path does not reuse the
// recurrence behind bernoulli_numbers.
Series bernoulli_egf(std::size_t order) {
  auto denom = exp_series<Rational>(order + 1);
  denom[0] = Rational(0);
  return Series::variable(order + 1) / denom;
}

Series sinh_kernel(std::size_t order) {
  return Series::variable(order + 1) / sinh_series<Rational>(order + 1);
}

}  // namespace

Series norlund_generating_function(std::size_t n, const Rational& x, std::size_t order) {
  const auto shift = compose(exp_series<Rational>(order), Series::variable(order, x));
  return pow(bernoulli_egf(order), static_cast<unsigned>(n)) * shift;
}

Rational norlund_bernoulli(std::size_t n, std::size_t nu, const Rational& x) {
  if (n < 1) throw InvalidInput("norlund_bernoulli needs n >= 1");
  const auto g = norlund_generating_function(n, x, nu);
  return Rational(factorial(static_cast<unsigned>(nu))) * g[nu];
}

Rational d_number(std::size_t n, std::size_t nu) {
  if (n < 1) throw InvalidInput("d_number needs n >= 1");
  const auto g = pow(sinh_kernel(nu), static_cast<unsigned>(n));
  return Rational(factorial(static_cast<unsigned>(nu))) * g[nu];
}

}  // namespace eta
