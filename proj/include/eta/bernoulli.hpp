#ifndef ETA_BERNOULLI_HPP
#define ETA_BERNOULLI_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include "eta/polynomial.hpp"
#include "eta/rational.hpp"
#include "eta/series.hpp"

namespace eta {

/// B_0 ... B_M under the t/(e^t - 1) convention, so B_1 = -1/2.
struct BernoulliCache {
  std::vector<Rational> numbers;

  std::size_t max_index() const { return numbers.size() - 1; }
  const Rational& operator[](std::size_t m) const { return numbers.at(m); }
};

/// Solves sum_{k=0}^{m} C(m+1, k) B_k = 0 for m = 1 ... maxM, seeded B_0 = 1.
BernoulliCache bernoulli_numbers(std::size_t maxM);

/// Process-wide cache holding at least B_0 ... B_maxM.
///
/// The returned snapshot is immutable and may be shared across threads.
/// Growing the cache swaps in a new snapshot under a lock; earlier snapshots
/// stay valid.
std::shared_ptr<const BernoulliCache> shared_bernoulli(std::size_t maxM);

/// B_m(x) = sum_k C(m, k) B_k x^(m-k).
RatPolynomial bernoulli_polynomial(std::size_t m);

/// x (x+1) ... (x+n-2), expanded. Throws InvalidInput for n < 2.
RatPolynomial pochhammer_poly(std::size_t n);

/// (t / (e^t - 1))^n e^(x t) to t^order.
Series norlund_generating_function(std::size_t n, const Rational& x, std::size_t order);

/// Generalised Bernoulli value B^(n)_nu(x) = nu! [t^nu] (t/(e^t-1))^n e^(xt).
Rational norlund_bernoulli(std::size_t n, std::size_t nu, const Rational& x);

/// D^(n)_nu = nu! [t^nu] (t / sinh t)^n.
Rational d_number(std::size_t n, std::size_t nu);

}  // namespace eta

#endif  // ETA_BERNOULLI_HPP
