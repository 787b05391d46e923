#include "rm3/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace rm3 {

std::string GroupTag::to_string() const {
  if (kind == GroupKind::symplectic) return "Sp(" + std::to_string(2 * parameter) + ")";
  return "SL(" + std::to_string(parameter) + ")";
}

namespace {

std::vector<IntMatrix> dedup(std::vector<IntMatrix> in) {
  std::vector<IntMatrix> out;
  out.reserve(in.size());
  for (auto& m : in)
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
  return out;
}

PreservedForm discover_form(const std::vector<IntMatrix>& ms) {
  const std::size_t d = ms.front().dim();
  if (d % 2 != 0) return PreservedForm::none;
  const IntMatrix j = SymplecticForm{d / 2}.matrix();
  const IntMatrix neg_j = j.negated();
  bool all_standard = true;
  bool all_negated = true;
  for (const auto& m : ms) {
    const IntMatrix q = mat_mul(mat_mul(m.transpose(), j), m);
    all_standard = all_standard && q == j;
    all_negated = all_negated && q == neg_j;
  }
  if (all_standard) return PreservedForm::standard;
  if (all_negated) return PreservedForm::negated;
  return PreservedForm::none;
}

GroupTag infer_group(const std::vector<IntMatrix>& ms, PreservedForm form) {
  const std::size_t d = ms.front().dim();
  if (form == PreservedForm::standard) return {GroupKind::symplectic, d / 2};
  return {GroupKind::special_linear, d};
}

// 1-based (row, col) -> 0-based element access, matching the listing notation.
Integer& at1(IntMatrix& m, std::size_t row, std::size_t col) { return m(row - 1, col - 1); }

}  // namespace

GeneratorFamily::GeneratorFamily(FamilyName name, std::vector<IntMatrix> matrices,
                                 SamplingMode mode)
    : name_(name), mode_(mode), matrices_(dedup(std::move(matrices))) {
  if (matrices_.empty()) throw std::invalid_argument("GeneratorFamily: empty generator list");
  const std::size_t d = matrices_.front().dim();
  if (d == 0) throw std::invalid_argument("GeneratorFamily: zero-dimensional matrices");
  for (const auto& m : matrices_) {
    if (m.dim() != d) throw std::invalid_argument("GeneratorFamily: mixed dimensions");
    if (det(m) != 1) throw std::invalid_argument("GeneratorFamily: generator with det != 1");
  }
  form_ = discover_form(matrices_);
  group_ = infer_group(matrices_, form_);
}

GeneratorFamily::GeneratorFamily(FamilyName name, std::vector<IntMatrix> matrices,
                                 SamplingMode mode, GroupTag group)
    : GeneratorFamily(name, std::move(matrices), mode) {
  if (group.dim() != dim()) throw std::invalid_argument("GeneratorFamily: group tag mismatch");
  group_ = group;
}

IntMatrix birman_y(std::size_t g, std::size_t i) {
  IntMatrix m = IntMatrix::identity(2 * g);
  at1(m, i, g + i) = -1;
  return m;
}

IntMatrix birman_u(std::size_t g, std::size_t i) {
  IntMatrix m = IntMatrix::identity(2 * g);
  at1(m, g + i, i) = 1;
  return m;
}

IntMatrix birman_z(std::size_t g, std::size_t i) {
  IntMatrix m = IntMatrix::identity(2 * g);
  at1(m, i, g + i) = -1;
  at1(m, i + 1, g + i + 1) = -1;
  at1(m, i, g + i + 1) = 1;
  at1(m, i + 1, g + i) = 1;
  return m;
}

GeneratorFamily humphries_symplectic(std::size_t genus) {
  // The listing uses BirmanY[g, 2] unconditionally, which needs g >= 2.
  if (genus < 2) throw std::invalid_argument("humphries_symplectic: genus must be >= 2");
  std::vector<IntMatrix> ms;
  for (std::size_t i = 1; i <= genus; ++i) ms.push_back(birman_u(genus, i));
  for (std::size_t i = 1; i < genus; ++i) ms.push_back(birman_z(genus, i));
  ms.push_back(birman_y(genus, 1));
  ms.push_back(birman_y(genus, 2));
  return GeneratorFamily(FamilyName::humphries, std::move(ms));
}

IntMatrix hua_reiner_u2(std::size_t n) {
  IntMatrix m = IntMatrix::identity(n);
  at1(m, 1, 2) = 1;
  return m;
}

IntMatrix hua_reiner_u5(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 2; i <= n; ++i) at1(m, i, i - 1) = 1;
  at1(m, 1, n) = (n % 2 == 1) ? 1 : -1;  // (-1)^(n-1)
  return m;
}

GeneratorFamily hua_reiner(std::size_t n) {
  if (n < 2) throw std::invalid_argument("hua_reiner: n must be >= 2");
  return GeneratorFamily(FamilyName::hua_reiner, {hua_reiner_u2(n), hua_reiner_u5(n)},
                         SamplingMode::positive_only, GroupTag{GroupKind::special_linear, n});
}

IntMatrix stanek_r21(std::size_t n) {
  IntMatrix m = IntMatrix::identity(2 * n);
  at1(m, 2, 1) = 1;
  at1(m, n + 1, n + 2) = -1;
  return m;
}

IntMatrix stanek_t(std::size_t n, std::size_t k) {
  IntMatrix m = IntMatrix::identity(2 * n);
  at1(m, n + k, k) = 1;
  return m;
}

IntMatrix stanek_d(std::size_t n) {
  IntMatrix m(2 * n);
  for (std::size_t i = 1; i < 2 * n; ++i)
    if (i < n || i >= n + 1) at1(m, i, i + 1) = 1;
  at1(m, n, n + 1) = -1;
  at1(m, 2 * n, 1) = 1;
  return m;
}

GeneratorFamily stanek(std::size_t n) {
  if (n < 1) throw std::invalid_argument("stanek: n must be >= 1");
  if (n == 1) {
    auto hr = hua_reiner(2);
    return GeneratorFamily(FamilyName::stanek, hr.matrices(), SamplingMode::positive_only,
                           GroupTag{GroupKind::symplectic, 1});
  }
  std::vector<IntMatrix> ms;
  if (n == 2 || n == 3) {
    ms = {stanek_r21(n), stanek_t(n, 1), stanek_d(n)};
  } else {
    ms = {mat_mul(stanek_r21(n), stanek_t(n, 1)), stanek_d(n)};
  }
  return GeneratorFamily(FamilyName::stanek, std::move(ms));
}

GeneratorFamily symmetric_closure(const GeneratorFamily& family) {
  std::vector<IntMatrix> ms = family.matrices();
  for (const auto& m : family.matrices()) ms.push_back(unimodular_inverse(m));
  return GeneratorFamily(family.name(), std::move(ms), SamplingMode::symmetric, family.group());
}

GeneratorFamily adjoin_identity(const GeneratorFamily& family) {
  std::vector<IntMatrix> ms = family.matrices();
  ms.push_back(IntMatrix::identity(family.dim()));
  return GeneratorFamily(family.name(), std::move(ms), family.mode(), family.group());
}

std::string to_string(FamilyName name) {
  switch (name) {
    case FamilyName::humphries: return "humphries";
    case FamilyName::hua_reiner: return "hua-reiner";
    case FamilyName::stanek: return "stanek";
    case FamilyName::custom: return "custom";
  }
  return "custom";
}

FamilyName family_name_from_string(const std::string& s) {
  if (s == "humphries") return FamilyName::humphries;
  if (s == "hua-reiner") return FamilyName::hua_reiner;
  if (s == "stanek") return FamilyName::stanek;
  if (s == "custom") return FamilyName::custom;
  throw std::invalid_argument("unknown family '" + s + "'");
}

std::string to_string(SamplingMode mode) {
  return mode == SamplingMode::symmetric ? "symmetric" : "positive";
}

SamplingMode sampling_mode_from_string(const std::string& s) {
  if (s == "positive" || s == "positive-only") return SamplingMode::positive_only;
  if (s == "symmetric") return SamplingMode::symmetric;
  throw std::invalid_argument("unknown sampling mode '" + s + "'");
}

std::string to_string(PreservedForm form) {
  switch (form) {
    case PreservedForm::standard: return "standard";
    case PreservedForm::negated: return "negated";
    case PreservedForm::none: return "none";
  }
  return "none";
}

}  // namespace rm3
