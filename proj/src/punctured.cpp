#include "rm3/punctured.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rm3 {

mpq_class ContinuedFraction::value() const {
  mpq_class v = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (it == digits.rbegin()) {
      v = *it;
    } else {
      v = mpq_class(*it) + 1 / v;
    }
    v.canonicalize();
  }
  return negative ? -v : v;
}

Integer ContinuedFraction::max_digit() const {
  Integer m = 0;
  for (const auto& d : digits) m = std::max(m, d);
  return m;
}

ContinuedFraction continued_fraction(const Integer& a, const Integer& b) {
  if (b == 0) throw std::invalid_argument("continued_fraction: zero denominator");
  ContinuedFraction cf;
  cf.numerator = b < 0 ? Integer(-a) : a;
  cf.denominator = abs(b);
  const Integer g = gcd(cf.numerator, cf.denominator);
  cf.numerator /= g;
  cf.denominator /= g;
  cf.negative = cf.numerator < 0;
  Integer x = abs(cf.numerator), y = cf.denominator, q, r;
  while (y != 0) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    cf.digits.push_back(q);
    x = y;
    y = r;
  }
  return cf;
}

mpq_class minsky_bound_proxy(const IntMatrix& m) {
  if (m.dim() != 2) throw std::invalid_argument("minsky_bound_proxy: matrix must be 2x2");
  if (det(m) != 1) throw std::invalid_argument("minsky_bound_proxy: det must be 1");
  if (m(0, 1) == 0) throw std::domain_error("minsky_bound_proxy: b = 0, bound undefined");
  const Integer top = continued_fraction(m(0, 0), m(0, 1)).max_digit();
  if (top == 0) throw std::domain_error("minsky_bound_proxy: a = 0, bound undefined");
  return mpq_class(1, top * top);
}

std::size_t longest_run(std::span<const Letter> letters, Letter letter) {
  std::size_t best = 0, cur = 0;
  for (Letter l : letters) {
    cur = (l == letter) ? cur + 1 : 0;
    best = std::max(best, cur);
  }
  return best;
}

RunScalingResult run_scaling_experiment(std::size_t alphabet_size,
                                        std::span<const std::size_t> lengths,
                                        std::size_t samples, std::uint64_t seed) {
  if (alphabet_size < 2) throw std::invalid_argument("run_scaling_experiment: alphabet must be >= 2");
  if (samples == 0) throw std::invalid_argument("run_scaling_experiment: samples must be >= 1");
  if (lengths.empty()) throw std::invalid_argument("run_scaling_experiment: no lengths");
  const std::size_t total = lengths.size() * samples;
  std::vector<double> runs(total);
  auto failure = detail::parallel_for(total, thread_count(), [&](std::size_t task) {
    const std::size_t len = lengths[task / samples];
    const auto letters = sample_letters(alphabet_size, len, sample_seed(seed, len, task % samples));
    runs[task] = static_cast<double>(longest_run(letters, 0));
  });
  if (failure) std::rethrow_exception(failure->second);

  RunScalingResult res;
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    const std::span<const double> block(runs.data() + i * samples, samples);
    const double mean = pairwise_sum(block) / static_cast<double>(samples);
    res.rows.push_back({lengths[i], mean});
    xs.push_back(std::log(static_cast<double>(lengths[i])));
    ys.push_back(mean);
  }
  if (lengths.size() >= 2) res.fit = linear_fit(xs, ys);
  return res;
}

}  // namespace rm3
