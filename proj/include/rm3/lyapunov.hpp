#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rm3/generators.hpp"

namespace rm3 {

struct LyapunovEstimate {
  std::vector<double> exponents;  // descending, nats per step
  std::vector<double> standard_error;
  std::size_t trials = 0;
  std::size_t steps_per_trial = 0;

  /// Sum of max(exponent, 0).
  double positive_sum() const;
  double total_sum() const;
};

struct LyapunovOptions {
  std::size_t renormalize_every = 10;
  std::size_t burn_in = 100;
};

/// Floating-point frame evolution with modified Gram-Schmidt renormalization.
/// Throws std::invalid_argument for steps < 100 or trials == 0, and
/// std::runtime_error if a frame vector collapses below 1e-300.
LyapunovEstimate estimate_exponents(const GeneratorFamily& family, std::size_t steps,
                                    std::size_t trials, std::uint64_t seed,
                                    const LyapunovOptions& options = {});

struct CltDiagnostics {
  double mean = 0;
  double variance = 0;  // unbiased
  double skewness = 0;  // population moment ratio m3 / m2^1.5
  double excess_kurtosis = 0;  // m4 / m2^2 - 3
  double ks_statistic = 0;  // sup |F_n - Phi| against the normal with matched mean/variance
};

/// Throws std::invalid_argument for fewer than 30 samples or zero variance.
CltDiagnostics clt_diagnostics(std::span<const double> samples);

}  // namespace rm3
