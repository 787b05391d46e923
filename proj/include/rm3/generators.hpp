#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rm3/exact_matrix.hpp"

namespace rm3 {

enum class FamilyName { humphries, hua_reiner, stanek, custom };
enum class SamplingMode { positive_only, symmetric };
enum class GroupKind { special_linear, symplectic };

/// Bilinear form preserved by every member, discovered at construction by testing M^T J M = +-J.
enum class PreservedForm { none, standard, negated };

struct GroupTag {
  GroupKind kind = GroupKind::special_linear;
  std::size_t parameter = 0;  // n for SL(n), g for Sp(2g)

  std::size_t dim() const { return kind == GroupKind::symplectic ? 2 * parameter : parameter; }
  std::string to_string() const;
  friend bool operator==(const GroupTag&, const GroupTag&) = default;
};

/// An immutable list of det-1 generators sharing one dimension.
class GeneratorFamily {
 public:
  /// Validates the shared dimension and det = 1; deduplicates preserving first occurrence.
  GeneratorFamily(FamilyName name, std::vector<IntMatrix> matrices,
                  SamplingMode mode = SamplingMode::positive_only);

  FamilyName name() const { return name_; }
  const GroupTag& group() const { return group_; }
  SamplingMode mode() const { return mode_; }
  PreservedForm preserved_form() const { return form_; }
  const std::vector<IntMatrix>& matrices() const { return matrices_; }
  std::size_t size() const { return matrices_.size(); }
  std::size_t dim() const { return matrices_.front().dim(); }
  const IntMatrix& operator[](std::size_t i) const { return matrices_[i]; }

  /// True iff the family preserves the standard form J exactly.
  bool is_symplectic() const { return form_ == PreservedForm::standard; }

 private:
  friend GeneratorFamily symmetric_closure(const GeneratorFamily& family);
  friend GeneratorFamily adjoin_identity(const GeneratorFamily& family);
  friend GeneratorFamily hua_reiner(std::size_t n);
  friend GeneratorFamily stanek(std::size_t n);
  GeneratorFamily(FamilyName name, std::vector<IntMatrix> matrices, SamplingMode mode,
                  GroupTag group);

  FamilyName name_;
  GroupTag group_;
  SamplingMode mode_;
  PreservedForm form_ = PreservedForm::none;
  std::vector<IntMatrix> matrices_;
};

// Homology images of the Humphries generators (Birman's matrices). Indices are 1-based,
// as in the listings: U_i = I + E(g+i, i), Y_i = I - E(i, g+i), Z_i as documented below.
IntMatrix birman_u(std::size_t genus, std::size_t i);
IntMatrix birman_y(std::size_t genus, std::size_t i);
/// I with -1 at (i,g+i), (i+1,g+i+1) and +1 at (i,g+i+1), (i+1,g+i).
IntMatrix birman_z(std::size_t genus, std::size_t i);

/// {U_1..U_g} u {Z_1..Z_{g-1}} u {Y_1, Y_2}; requires g >= 2.
GeneratorFamily humphries_symplectic(std::size_t genus);

IntMatrix hua_reiner_u2(std::size_t n);
IntMatrix hua_reiner_u5(std::size_t n);
/// The Hua-Reiner pair {U2, U5} generating SL(n, Z); requires n >= 2.
GeneratorFamily hua_reiner(std::size_t n);

IntMatrix stanek_r21(std::size_t n);
IntMatrix stanek_t(std::size_t n, std::size_t k);
IntMatrix stanek_d(std::size_t n);
/// Stanek generators of Sp(2n, Z); n = 1 dispatches to hua_reiner(2).
GeneratorFamily stanek(std::size_t n);

/// Adds exact inverses (deduplicated) and marks the family symmetric.
GeneratorFamily symmetric_closure(const GeneratorFamily& family);

/// Adds the identity, making walks aperiodic (lazy walk).
GeneratorFamily adjoin_identity(const GeneratorFamily& family);

std::string to_string(FamilyName name);
FamilyName family_name_from_string(const std::string& s);
std::string to_string(SamplingMode mode);
SamplingMode sampling_mode_from_string(const std::string& s);
std::string to_string(PreservedForm form);

}  // namespace rm3
