#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace rm3 {

/// Pairwise (cascade) summation.
double pairwise_sum(std::span<const double> xs);

struct StatSummary {
  std::size_t count = 0;
  double mean = 0;
  double variance = 0;  // unbiased; 0 for a single sample
  double min = 0;
  double max = 0;
  /// Nearest-rank quantiles at the levels of kQuantileLevels.
  std::vector<double> quantiles;

  static constexpr double kQuantileLevels[] = {0.01, 0.05, 0.25, 0.50, 0.75, 0.95, 0.99};
  double median() const { return quantiles[3]; }
};

/// Two-pass mean/variance and nearest-rank quantiles; throws on empty input.
StatSummary summarize(std::span<const double> samples);

/// Value of rank ceil(q n) (1-based) in the sorted sample.
double nearest_rank_quantile(std::span<const double> sorted, double q);

struct LinearFit {
  double slope = 0;
  double intercept = 0;
  double r_squared = 0;
};

/// Ordinary least squares. Throws std::invalid_argument on length mismatch,
/// fewer than two points or constant x.
LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

struct HistogramBin {
  double lower = 0;
  std::size_t count = 0;
};

/// Equal-width bins over [min, max], each bin [lo, hi) except the last which is closed.
std::vector<HistogramBin> histogram(std::span<const double> samples, std::size_t bin_count);

double normal_cdf(double z);
/// Inverse standard normal CDF (Acklam's rational approximation, one Halley refinement).
double normal_quantile(double p);

/// (Phi^{-1}((i - 0.5) / n), standardized i-th order statistic) for i = 1..n.
std::vector<std::pair<double, double>> qq_points(std::span<const double> samples);

/// Exact probability num/den (reduced).
struct Probability {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;

  double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
  friend bool operator==(const Probability&, const Probability&) = default;
};

struct SymplecticOracle {
  std::uint64_t p = 0;
  std::size_t genus = 0;
  std::uint64_t group_order = 0;
  /// fp_rank value (1 + dim ker(M - I)) -> exact probability over Sp(2g, F_p).
  std::map<std::size_t, Probability> distribution;
};

/// |Sp(2g, F_p)| = p^{g^2} prod_{i=1..g} (p^{2i} - 1); 0 on overflow.
std::uint64_t symplectic_group_order(std::uint64_t p, std::size_t genus);

/// Brute-force enumeration of Sp(2g, F_p). Throws std::invalid_argument if p is
/// not prime, and std::domain_error if the group order exceeds 10^6 or the
/// search space p^{4g^2} exceeds 2^26.
SymplecticOracle exhaustive_sp2_oracle(std::uint64_t p, std::size_t genus);

struct RankTable {
  std::uint64_t p = 0;
  std::map<std::size_t, double> frequencies;  // empirical
  std::map<std::size_t, double> predicted;    // oracle, empty when unavailable

  /// Half the L1 distance between the two distributions.
  double total_variation() const;
};

RankTable make_rank_table(std::uint64_t p, std::span<const std::size_t> ranks,
                          const SymplecticOracle* oracle);

}  // namespace rm3
