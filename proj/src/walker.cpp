#include "rm3/walker.hpp"

#include <charconv>
#include <cstdlib>

#include "rm3/rng.hpp"

namespace rm3 {

std::vector<std::size_t> LengthProgression::values() const {
  std::vector<std::size_t> v;
  for (std::size_t l = start; l <= end; l += step) v.push_back(l);
  return v;
}

namespace {

std::size_t parse_size(std::string_view s) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("not a nonnegative integer: '" + std::string(s) + "'");
  return v;
}

}  // namespace

LengthProgression LengthProgression::parse(const std::string& text) {
  std::vector<std::string_view> parts;
  std::string_view rest(text);
  for (;;) {
    const auto colon = rest.find(':');
    parts.push_back(rest.substr(0, colon));
    if (colon == std::string_view::npos) break;
    rest.remove_prefix(colon + 1);
  }
  LengthProgression p;
  if (parts.size() == 1) {
    p.start = p.end = parse_size(parts[0]);
  } else if (parts.size() == 3) {
    p.start = parse_size(parts[0]);
    p.end = parse_size(parts[1]);
    p.step = parse_size(parts[2]);
  } else {
    throw std::invalid_argument("lengths must be 'start:end:step' or a single length");
  }
  if (p.start < 1 || p.step < 1 || p.end < p.start)
    throw std::invalid_argument("lengths need start >= 1, step >= 1 and end >= start");
  return p;
}

std::string LengthProgression::to_string() const {
  return std::to_string(start) + ":" + std::to_string(end) + ":" + std::to_string(step);
}

void BatchConfig::validate() const {
  if (lengths.start < 1) throw std::invalid_argument("lengths: start must be >= 1");
  if (lengths.step < 1) throw std::invalid_argument("lengths: step must be >= 1");
  if (lengths.end < lengths.start) throw std::invalid_argument("lengths: end < start");
  if (samples_per_length < 1) throw std::invalid_argument("samples must be >= 1");
}

GeneratorFamily make_family(const FamilySpec& spec) {
  switch (spec.name) {
    case FamilyName::humphries: return humphries_symplectic(spec.parameter);
    case FamilyName::hua_reiner: return hua_reiner(spec.parameter);
    case FamilyName::stanek: return stanek(spec.parameter);
    case FamilyName::custom: return GeneratorFamily(FamilyName::custom, spec.custom);
  }
  throw std::invalid_argument("make_family: unknown family");
}

std::shared_ptr<const GeneratorFamily> prepare_family(const BatchConfig& config) {
  GeneratorFamily f = make_family(config.family);
  if (config.mode == SamplingMode::symmetric) f = symmetric_closure(f);
  if (config.lazy) f = adjoin_identity(f);
  return std::make_shared<const GeneratorFamily>(std::move(f));
}

std::vector<Letter> sample_letters(std::size_t alphabet_size, std::size_t n, std::uint64_t seed) {
  if (alphabet_size == 0) throw std::invalid_argument("sample_letters: empty alphabet");
  std::vector<Letter> letters(n);
  CounterRng rng(seed);
  for (auto& l : letters) l = static_cast<Letter>(rng.uniform_below(alphabet_size));
  return letters;
}

Word sample_word(std::shared_ptr<const GeneratorFamily> family, std::size_t n, std::uint64_t seed) {
  if (!family || family->size() == 0) throw std::invalid_argument("sample_word: empty family");
  if (n == 0) throw std::invalid_argument("sample_word: length must be >= 1");
  Word w;
  w.letters = sample_letters(family->size(), n, seed);
  w.family = std::move(family);
  return w;
}

IntMatrix word_product(const Word& word) {
  const auto& f = *word.family;
  IntMatrix p = IntMatrix::identity(f.dim());
  for (Letter l : word.letters) p = mat_mul(p, f[l]);
  return p;
}

std::uint64_t sample_seed(std::uint64_t master_seed, std::size_t length, std::size_t index) {
  return hash_combine(hash_combine(master_seed, length), index);
}

std::size_t thread_count() {
  if (const char* env = std::getenv("THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace rm3
