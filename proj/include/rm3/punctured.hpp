#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rm3/exact_matrix.hpp"
#include "rm3/stats.hpp"
#include "rm3/walker.hpp"

namespace rm3 {

/// Canonical regular continued fraction of a/b (b > 0 after normalization).
/// Digits describe |a|/b; negative values carry the sign separately.
struct ContinuedFraction {
  Integer numerator;    // a, sign-normalized so that denominator > 0
  Integer denominator;  // b > 0
  bool negative = false;
  std::vector<Integer> digits;

  /// Folds the digits back into a fraction (with sign); equals numerator / denominator.
  mpq_class value() const;
  Integer max_digit() const;
};

/// Euclid on |a| / |b|; throws std::invalid_argument when b == 0.
ContinuedFraction continued_fraction(const Integer& a, const Integer& b);

/// 1 / (max continued-fraction digit of a/b)^2 for M = [[a, b], [c, d]].
/// The systole constant is fixed to 1, so this orders monodromies but is not a length.
/// Throws std::invalid_argument unless M is 2x2 with det 1, and std::domain_error
/// when b == 0 or the maximal digit is 0.
mpq_class minsky_bound_proxy(const IntMatrix& m);

/// Longest block of consecutive `letter`s.
std::size_t longest_run(std::span<const Letter> letters, Letter letter);
inline std::size_t longest_run(const Word& word, Letter letter) {
  return longest_run(word.letters, letter);
}

struct RunScalingRow {
  std::size_t length = 0;
  double mean_longest_run = 0;
};

struct RunScalingResult {
  std::vector<RunScalingRow> rows;
  /// mean longest run ~ intercept + slope * ln(length); absent for a single length.
  std::optional<LinearFit> fit;
};

/// Monte Carlo mean of the longest run of letter 0 in uniform words over
/// `alphabet_size` letters; sample j of length l uses seed hash(seed, l, j).
RunScalingResult run_scaling_experiment(std::size_t alphabet_size,
                                        std::span<const std::size_t> lengths,
                                        std::size_t samples, std::uint64_t seed);

}  // namespace rm3
