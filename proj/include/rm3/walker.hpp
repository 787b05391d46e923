#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "rm3/exact_matrix.hpp"
#include "rm3/generators.hpp"

namespace rm3 {

using Letter = std::uint32_t;

/// A (non-reduced) word in the generators of a family.
struct Word {
  std::shared_ptr<const GeneratorFamily> family;
  std::vector<Letter> letters;

  std::size_t length() const { return letters.size(); }
};

struct WalkSample {
  std::size_t length_index = 0;
  std::size_t length = 0;
  std::size_t sample_index = 0;
  std::uint64_t seed = 0;
  Word word;
  IntMatrix product;
};

/// Inclusive arithmetic progression start, start+step, ..., <= end.
struct LengthProgression {
  std::size_t start = 1;
  std::size_t end = 1;
  std::size_t step = 1;

  std::vector<std::size_t> values() const;
  /// Parses "start:end:step" (or a single "n").
  static LengthProgression parse(const std::string& text);
  std::string to_string() const;
};

struct FamilySpec {
  FamilyName name = FamilyName::humphries;
  /// genus for humphries, n for hua-reiner / stanek; unused for custom.
  std::size_t parameter = 2;
  std::vector<IntMatrix> custom;
};

struct BatchConfig {
  FamilySpec family;
  LengthProgression lengths;
  std::size_t samples_per_length = 1;
  std::uint64_t master_seed = 0;
  SamplingMode mode = SamplingMode::positive_only;
  /// Adjoin the identity to the generator list (aperiodic walk).
  bool lazy = false;

  void validate() const;
};

GeneratorFamily make_family(const FamilySpec& spec);
/// make_family plus the config's mode and laziness.
std::shared_ptr<const GeneratorFamily> prepare_family(const BatchConfig& config);

/// n letters drawn i.i.d. uniformly from [0, alphabet_size), a pure function of the seed.
std::vector<Letter> sample_letters(std::size_t alphabet_size, std::size_t n, std::uint64_t seed);

/// Throws std::invalid_argument for n == 0 or an empty family.
Word sample_word(std::shared_ptr<const GeneratorFamily> family, std::size_t n, std::uint64_t seed);

/// Exact left-to-right product g[l_1] g[l_2] ... g[l_n].
IntMatrix word_product(const Word& word);

/// seed for sample j of length l: hash(master, l, j).
std::uint64_t sample_seed(std::uint64_t master_seed, std::size_t length, std::size_t index);

/// THREADS env var if set and positive, else hardware concurrency (at least 1).
std::size_t thread_count();

class BatchError : public std::runtime_error {
 public:
  BatchError(std::size_t length, std::size_t index, const std::string& what)
      : std::runtime_error("sample (" + std::to_string(length) + ", " + std::to_string(index) +
                           ") failed: " + what),
        length_(length),
        index_(index) {}

  std::size_t length() const { return length_; }
  std::size_t index() const { return index_; }

 private:
  std::size_t length_;
  std::size_t index_;
};

namespace detail {

/// Runs task(i) for i in [0, count) on up to `threads` workers. Exceptions are
/// captured per index; the lowest failing index is returned.
template <class Task>
std::optional<std::pair<std::size_t, std::exception_ptr>> parallel_for(std::size_t count,
                                                                        std::size_t threads,
                                                                        Task&& task) {
  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::optional<std::pair<std::size_t, std::exception_ptr>> failure;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      {
        std::lock_guard lock(failure_mutex);
        if (failure && failure->first < i) return;
      }
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure || i < failure->first) failure.emplace(i, std::current_exception());
      }
    }
  };
  threads = std::max<std::size_t>(1, std::min(threads, count));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return failure;
}

}  // namespace detail

/// Generates every (length, index) sample of the config, applies per_sample and
/// returns the records in (length, index) order independent of parallelism.
template <class Fn>
auto run_batch(const BatchConfig& config, Fn&& per_sample, std::size_t threads = thread_count())
    -> std::vector<std::invoke_result_t<Fn&, const WalkSample&>> {
  using Record = std::invoke_result_t<Fn&, const WalkSample&>;
  config.validate();
  const auto family = prepare_family(config);
  const auto lengths = config.lengths.values();
  const std::size_t per = config.samples_per_length;
  const std::size_t total = lengths.size() * per;

  std::vector<std::optional<Record>> slots(total);
  auto failure = detail::parallel_for(total, threads, [&](std::size_t task) {
    WalkSample s;
    s.length_index = task / per;
    s.length = lengths[s.length_index];
    s.sample_index = task % per;
    s.seed = sample_seed(config.master_seed, s.length, s.sample_index);
    s.word = sample_word(family, s.length, s.seed);
    s.product = word_product(s.word);
    slots[task].emplace(per_sample(static_cast<const WalkSample&>(s)));
  });
  if (failure) {
    const std::size_t task = failure->first;
    std::string what = "unknown error";
    try {
      std::rethrow_exception(failure->second);
    } catch (const std::exception& e) {
      what = e.what();
    } catch (...) {
    }
    throw BatchError(lengths[task / per], task % per, what);
  }
  std::vector<Record> out;
  out.reserve(total);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace rm3
