#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace rm3 {

using Integer = mpz_class;

/// Dense square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }

  Integer& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const Integer& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  std::span<const Integer> row(std::size_t r) const {
    return {entries_.data() + r * dim_, dim_};
  }
  std::span<const Integer> entries() const { return entries_; }

  IntMatrix transpose() const;
  IntMatrix negated() const;
  /// this - I
  IntMatrix minus_identity() const;
  bool is_identity() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

/// Exact product; throws std::invalid_argument on dimension mismatch.
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant by Bareiss fraction-free elimination.
Integer det(const IntMatrix& m);

/// Rank over Q, computed fraction-free.
std::size_t rational_rank(const IntMatrix& m);

/// Exact inverse of a unimodular matrix (det = +-1); throws std::domain_error otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Block matrix [[0, I_g], [-I_g, 0]].
struct SymplecticForm {
  std::size_t genus = 0;

  IntMatrix matrix() const;
};

/// M^T J M == J exactly. Throws std::invalid_argument unless m.dim() == 2 * form.genus.
bool is_symplectic(const IntMatrix& m, const SymplecticForm& form);
/// Convenience overload for the standard form of genus m.dim() / 2; false for odd dim.
bool is_symplectic(const IntMatrix& m);

/// Deterministic primality for 64-bit values (trial division up to sqrt(p)).
bool is_prime(std::uint64_t p);

/// Matrix over F_p with machine-word residues.
class ModMatrix {
 public:
  ModMatrix(std::size_t dim, std::uint64_t p);

  static ModMatrix identity(std::size_t dim, std::uint64_t p);

  std::size_t dim() const { return dim_; }
  std::uint64_t modulus() const { return p_; }

  std::uint64_t& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  std::uint64_t operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }

  std::span<const std::uint64_t> entries() const { return entries_; }

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

 private:
  std::size_t dim_;
  std::uint64_t p_;
  std::vector<std::uint64_t> entries_;
};

/// Entrywise residues in [0, p). Throws std::invalid_argument if p is not prime.
ModMatrix mod_p(const IntMatrix& m, std::uint64_t p);

ModMatrix mod_mul(const ModMatrix& a, const ModMatrix& b);
ModMatrix mod_minus_identity(const ModMatrix& m);
std::size_t mod_rank(ModMatrix m);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

}  // namespace rm3
