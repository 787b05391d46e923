#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "rm3/exact_matrix.hpp"

namespace rm3 {

/// Integer polynomial, constant term first. Trailing zeros are trimmed, so the
/// zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  const std::vector<Integer>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Integer& leading() const { return c_.back(); }
  const Integer& operator[](std::size_t k) const { return c_[k]; }

  Integer evaluate(const Integer& x) const;
  IntPolynomial derivative() const;
  /// gcd of the coefficients (positive), 0 for the zero polynomial.
  Integer content() const;
  IntPolynomial primitive_part() const;
  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<Integer> c_;
};

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

/// det(xI - M) by Berkowitz's division-free algorithm.
IntPolynomial char_poly(const IntMatrix& m);

/// det(M - I) == 0.
bool has_eigenvalue_one(const IntMatrix& m);

struct Irreducible {
  std::uint64_t witness_prime;
};
struct Reducible {
  /// A nontrivial factor over Q (primitive); a rational root a/b is reported as b x - a.
  IntPolynomial factor;
  std::string reason;
};
struct Undetermined {};

using IrreducibilityCertificate = std::variant<Irreducible, Reducible, Undetermined>;

/// Irreducible iff f stays irreducible mod one of the first prime_budget primes
/// not dividing the leading coefficient. Reducible when f is not square-free,
/// has a rational root, or (degree <= 4) has a verified quadratic factor.
/// Throws std::invalid_argument for the zero or a constant polynomial.
IrreducibilityCertificate irreducibility_certificate(const IntPolynomial& f,
                                                     std::size_t prime_budget = 25);

/// f''(1) = sum_{k>=2} k (k-1) c_k.
Integer alexander_second_derivative(const IntPolynomial& f);

/// Exact quotient and remainder over Z when the divisor is monic up to sign,
/// or when the division is exact; returns false if a non-integral step occurs.
bool divide_exact(const IntPolynomial& num, const IntPolynomial& den, IntPolynomial& quotient);

/// Polynomial over F_p, constant term first, trimmed.
using ModPoly = std::vector<std::uint64_t>;
bool is_irreducible_mod_p(const IntPolynomial& f, std::uint64_t p);

}  // namespace rm3
