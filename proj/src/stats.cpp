#include "rm3/stats.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

#include "rm3/exact_matrix.hpp"

namespace rm3 {

double pairwise_sum(std::span<const double> xs) {
  if (xs.size() <= 8) {
    double s = 0;
    for (double x : xs) s += x;
    return s;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

double nearest_rank_quantile(std::span<const double> sorted, double q) {
  const std::size_t n = sorted.size();
  auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(n) - 1e-12));
  rank = std::clamp<std::size_t>(rank, 1, n);
  return sorted[rank - 1];
}

StatSummary summarize(std::span<const double> samples) {
  if (samples.empty()) throw std::invalid_argument("summarize: empty input");
  StatSummary s;
  s.count = samples.size();
  s.mean = pairwise_sum(samples) / static_cast<double>(s.count);
  if (s.count > 1) {
    std::vector<double> sq(s.count);
    for (std::size_t i = 0; i < s.count; ++i) sq[i] = (samples[i] - s.mean) * (samples[i] - s.mean);
    s.variance = pairwise_sum(sq) / static_cast<double>(s.count - 1);
  }
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  s.min = sorted.front();
  s.max = sorted.back();
  for (double q : StatSummary::kQuantileLevels) s.quantiles.push_back(nearest_rank_quantile(sorted, q));
  return s;
}

LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("linear_fit: length mismatch");
  if (x.size() < 2) throw std::invalid_argument("linear_fit: need at least two points");
  const double n = static_cast<double>(x.size());
  const double mx = pairwise_sum(x) / n;
  const double my = pairwise_sum(y) / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0) throw std::invalid_argument("linear_fit: x is constant");
  LinearFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  if (syy == 0) {
    f.r_squared = 1.0;
  } else {
    f.r_squared = std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0);
  }
  return f;
}

std::vector<HistogramBin> histogram(std::span<const double> samples, std::size_t bin_count) {
  if (samples.empty()) throw std::invalid_argument("histogram: empty input");
  if (bin_count == 0) throw std::invalid_argument("histogram: bin_count must be >= 1");
  const auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
  const double lo = *lo_it, hi = *hi_it;
  std::vector<HistogramBin> bins(bin_count);
  const double width = (hi - lo) / static_cast<double>(bin_count);
  for (std::size_t b = 0; b < bin_count; ++b) bins[b].lower = lo + width * static_cast<double>(b);
  for (double v : samples) {
    std::size_t b = 0;
    if (width > 0) {
      b = static_cast<std::size_t>(std::floor((v - lo) / width));
      if (b >= bin_count) b = bin_count - 1;
    }
    ++bins[b].count;
  }
  return bins;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double normal_quantile(double p) {
  if (!(p > 0 && p < 1)) throw std::domain_error("normal_quantile: p must lie in (0, 1)");
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double plow = 0.02425;
  double x;
  if (p < plow) {
    const double q = std::sqrt(-2 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
  } else if (p <= 1 - plow) {
    const double q = p - 0.5, r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
  } else {
    const double q = std::sqrt(-2 * std::log(1 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
  }
  // Halley step against the exact CDF.
  const double e = normal_cdf(x) - p;
  const double u = e * std::sqrt(2 * std::numbers::pi) * std::exp(x * x / 2);
  return x - u / (1 + x * u / 2);
}

std::vector<std::pair<double, double>> qq_points(std::span<const double> samples) {
  const std::size_t n = samples.size();
  if (n < 2) throw std::invalid_argument("qq_points: need at least two samples");
  const StatSummary s = summarize(samples);
  if (!(s.variance > 0)) throw std::invalid_argument("qq_points: zero variance");
  const double sd = std::sqrt(s.variance);
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::pair<double, double>> pts(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double level = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    pts[i] = {normal_quantile(level), (sorted[i] - s.mean) / sd};
  }
  return pts;
}

std::uint64_t symplectic_group_order(std::uint64_t p, std::size_t genus) {
  unsigned __int128 order = 1;
  constexpr unsigned __int128 cap = static_cast<unsigned __int128>(1) << 100;
  for (std::size_t i = 0; i < genus * genus; ++i) {
    order *= p;
    if (order > cap) return 0;
  }
  unsigned __int128 ppow = 1;
  for (std::size_t i = 1; i <= genus; ++i) {
    ppow *= static_cast<unsigned __int128>(p) * p;
    if (ppow > cap) return 0;
    order *= (ppow - 1);
    if (order > cap) return 0;
  }
  if (order > UINT64_MAX) return 0;
  return static_cast<std::uint64_t>(order);
}

SymplecticOracle exhaustive_sp2_oracle(std::uint64_t p, std::size_t genus) {
  if (!is_prime(p)) throw std::invalid_argument("exhaustive_sp2_oracle: p is not prime");
  if (genus == 0) throw std::invalid_argument("exhaustive_sp2_oracle: genus must be >= 1");
  const std::uint64_t order = symplectic_group_order(p, genus);
  if (order == 0 || order > 1'000'000)
    throw std::domain_error("exhaustive_sp2_oracle: group too large");
  const std::size_t n = 2 * genus;
  std::uint64_t vectors = 1;
  for (std::size_t k = 0; k < n; ++k) vectors *= p;
  if (static_cast<double>(order) * static_cast<double>(vectors) > 4294967296.0)
    throw std::domain_error("exhaustive_sp2_oracle: group too large");

  // Columns are chosen one at a time; column a must pair with every earlier
  // column b exactly as the basis vectors e_a, e_b do under the form.
  std::vector<std::vector<std::uint64_t>> pool(vectors, std::vector<std::uint64_t>(n));
  for (std::uint64_t code = 0; code < vectors; ++code) {
    std::uint64_t c = code;
    for (std::size_t k = 0; k < n; ++k) {
      pool[code][k] = c % p;
      c /= p;
    }
  }
  auto pairing = [&](const std::vector<std::uint64_t>& u, const std::vector<std::uint64_t>& v) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < genus; ++i) {
      s = (s + mul_mod(u[i], v[genus + i], p)) % p;
      s = (s + mul_mod(p - u[genus + i], v[i], p)) % p;
    }
    return s;
  };
  auto form_entry = [&](std::size_t a, std::size_t b) -> std::uint64_t {
    if (b == a + genus) return 1;
    if (a == b + genus) return p - 1;
    return 0;
  };

  std::map<std::size_t, std::uint64_t> counts;
  std::uint64_t found = 0;
  std::vector<std::uint64_t> chosen(n);
  ModMatrix m(n, p);
  std::function<void(std::size_t)> extend = [&](std::size_t a) {
    if (a == n) {
      for (std::size_t col = 0; col < n; ++col)
        for (std::size_t row = 0; row < n; ++row) m(row, col) = pool[chosen[col]][row];
      ++found;
      ++counts[1 + n - mod_rank(mod_minus_identity(m))];
      return;
    }
    for (std::uint64_t code = 1; code < vectors; ++code) {
      bool ok = true;
      for (std::size_t b = 0; b < a && ok; ++b)
        ok = pairing(pool[chosen[b]], pool[code]) == form_entry(b, a);
      if (!ok) continue;
      chosen[a] = code;
      extend(a + 1);
    }
  };
  extend(0);
  if (found != order) throw std::logic_error("exhaustive_sp2_oracle: enumeration size mismatch");
  SymplecticOracle o;
  o.p = p;
  o.genus = genus;
  o.group_order = order;
  for (const auto& [rank, count] : counts) {
    const std::uint64_t g = std::gcd(count, order);
    o.distribution[rank] = Probability{count / g, order / g};
  }
  return o;
}

double RankTable::total_variation() const {
  std::set<std::size_t> keys;
  for (const auto& [k, v] : frequencies) keys.insert(k);
  for (const auto& [k, v] : predicted) keys.insert(k);
  double tv = 0;
  for (std::size_t k : keys) {
    const double a = frequencies.count(k) ? frequencies.at(k) : 0.0;
    const double b = predicted.count(k) ? predicted.at(k) : 0.0;
    tv += std::fabs(a - b);
  }
  return tv / 2;
}

RankTable make_rank_table(std::uint64_t p, std::span<const std::size_t> ranks,
                          const SymplecticOracle* oracle) {
  RankTable t;
  t.p = p;
  std::map<std::size_t, std::size_t> counts;
  for (std::size_t r : ranks) ++counts[r];
  for (const auto& [r, c] : counts)
    t.frequencies[r] = static_cast<double>(c) / static_cast<double>(ranks.size());
  if (oracle)
    for (const auto& [r, prob] : oracle->distribution) t.predicted[r] = prob.value();
  return t;
}

}  // namespace rm3
