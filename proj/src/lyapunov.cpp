#include "rm3/lyapunov.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "rm3/rng.hpp"
#include "rm3/stats.hpp"
#include "rm3/walker.hpp"

namespace rm3 {

double LyapunovEstimate::positive_sum() const {
  double s = 0;
  for (double e : exponents) s += std::max(e, 0.0);
  return s;
}

double LyapunovEstimate::total_sum() const {
  double s = 0;
  for (double e : exponents) s += e;
  return s;
}

namespace {

// Frame stored column-major: column i is vector i.
struct Frame {
  std::size_t dim;
  std::vector<double> v;

  double* col(std::size_t i) { return v.data() + i * dim; }
};

void apply(const std::vector<double>& g, Frame& f, std::vector<double>& scratch) {
  const std::size_t n = f.dim;
  for (std::size_t c = 0; c < n; ++c) {
    double* x = f.col(c);
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += g[i * n + k] * x[k];
      scratch[i] = acc;
    }
    std::copy(scratch.begin(), scratch.begin() + static_cast<long>(n), x);
  }
}

// Modified Gram-Schmidt; adds log norms into acc when accumulate is set.
void orthonormalize(Frame& f, std::vector<double>& acc, bool accumulate) {
  const std::size_t n = f.dim;
  for (std::size_t i = 0; i < n; ++i) {
    double* xi = f.col(i);
    for (std::size_t j = 0; j < i; ++j) {
      const double* xj = f.col(j);
      double dot = 0;
      for (std::size_t k = 0; k < n; ++k) dot += xj[k] * xi[k];
      for (std::size_t k = 0; k < n; ++k) xi[k] -= dot * xj[k];
    }
    double norm = 0;
    for (std::size_t k = 0; k < n; ++k) norm += xi[k] * xi[k];
    norm = std::sqrt(norm);
    if (!(norm > 1e-300) || !std::isfinite(norm))
      throw std::runtime_error(
          "estimate_exponents: frame collapsed between renormalizations; "
          "renormalization period too long");
    if (accumulate) acc[i] += std::log(norm);
    for (std::size_t k = 0; k < n; ++k) xi[k] /= norm;
  }
}

}  // namespace

LyapunovEstimate estimate_exponents(const GeneratorFamily& family, std::size_t steps,
                                    std::size_t trials, std::uint64_t seed,
                                    const LyapunovOptions& options) {
  if (steps < 100) throw std::invalid_argument("estimate_exponents: steps must be >= 100");
  if (trials == 0) throw std::invalid_argument("estimate_exponents: trials must be >= 1");
  if (options.renormalize_every == 0)
    throw std::invalid_argument("estimate_exponents: renormalization period must be >= 1");
  const std::size_t n = family.dim();
  std::vector<std::vector<double>> gens;
  for (const auto& m : family.matrices()) {
    std::vector<double> g(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g[i * n + j] = m(i, j).get_d();
    gens.push_back(std::move(g));
  }

  std::vector<std::vector<double>> per_trial(trials);
  auto failure = detail::parallel_for(trials, thread_count(), [&](std::size_t t) {
    CounterRng rng(hash_combine(seed, t));
    Frame f{n, std::vector<double>(n * n, 0.0)};
    for (std::size_t i = 0; i < n; ++i) f.col(i)[i] = 1.0;
    std::vector<double> acc(n, 0.0), scratch(n);
    const std::size_t total = options.burn_in + steps;
    for (std::size_t s = 1; s <= total; ++s) {
      apply(gens[rng.uniform_below(gens.size())], f, scratch);
      const bool boundary = s % options.renormalize_every == 0 || s == options.burn_in || s == total;
      if (boundary) orthonormalize(f, acc, s > options.burn_in);
    }
    for (auto& a : acc) a /= static_cast<double>(steps);
    per_trial[t] = std::move(acc);
  });
  if (failure) std::rethrow_exception(failure->second);

  LyapunovEstimate est;
  est.trials = trials;
  est.steps_per_trial = steps;
  est.exponents.assign(n, 0.0);
  est.standard_error.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> xs(trials);
    for (std::size_t t = 0; t < trials; ++t) xs[t] = per_trial[t][i];
    est.exponents[i] = pairwise_sum(xs) / static_cast<double>(trials);
    if (trials > 1) {
      for (auto& x : xs) x = (x - est.exponents[i]) * (x - est.exponents[i]);
      const double var = pairwise_sum(xs) / static_cast<double>(trials - 1);
      est.standard_error[i] = std::sqrt(var / static_cast<double>(trials));
    }
  }
  // MGS order already yields descending exponents in the limit; enforce it for finite samples.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return est.exponents[a] > est.exponents[b]; });
  LyapunovEstimate sorted = est;
  for (std::size_t i = 0; i < n; ++i) {
    sorted.exponents[i] = est.exponents[order[i]];
    sorted.standard_error[i] = est.standard_error[order[i]];
  }
  return sorted;
}

CltDiagnostics clt_diagnostics(std::span<const double> samples) {
  const std::size_t n = samples.size();
  if (n < 30) throw std::invalid_argument("clt_diagnostics: need at least 30 samples");
  CltDiagnostics d;
  d.mean = pairwise_sum(samples) / static_cast<double>(n);
  std::vector<double> c2(n), c3(n), c4(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double c = samples[i] - d.mean;
    c2[i] = c * c;
    c3[i] = c2[i] * c;
    c4[i] = c2[i] * c2[i];
  }
  const double m2 = pairwise_sum(c2) / static_cast<double>(n);
  if (!(m2 > 0)) throw std::invalid_argument("clt_diagnostics: zero variance");
  const double m3 = pairwise_sum(c3) / static_cast<double>(n);
  const double m4 = pairwise_sum(c4) / static_cast<double>(n);
  d.variance = m2 * static_cast<double>(n) / static_cast<double>(n - 1);
  d.skewness = m3 / std::pow(m2, 1.5);
  d.excess_kurtosis = m4 / (m2 * m2) - 3.0;

  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double sd = std::sqrt(d.variance);
  double ks = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double cdf = normal_cdf((sorted[i] - d.mean) / sd);
    const double lo = static_cast<double>(i) / static_cast<double>(n);
    const double hi = static_cast<double>(i + 1) / static_cast<double>(n);
    ks = std::max({ks, hi - cdf, cdf - lo});
  }
  d.ks_statistic = ks;
  return d;
}

}  // namespace rm3
