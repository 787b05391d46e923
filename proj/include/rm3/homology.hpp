#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rm3/exact_matrix.hpp"

namespace rm3 {

/// Elementary divisors d_1 | d_2 | ... | d_r; zeros (free factors) come last.
struct DivisorChain {
  std::vector<Integer> divisors;

  std::size_t rank() const { return divisors.size(); }
  std::size_t zero_count() const;
  /// Checks the divisibility-chain invariant.
  bool is_valid() const;
  /// Product of the nonzero divisors.
  Integer nonzero_product() const;
  std::string to_string() const;

  friend bool operator==(const DivisorChain&, const DivisorChain&) = default;
};

/// Betti number plus torsion invariants of a finitely generated abelian group.
struct HomologyDescriptor {
  std::size_t betti = 0;
  std::vector<Integer> torsion;  // entries > 1, divisibility order
  Integer torsion_order = 1;

  static HomologyDescriptor from_cokernel(const DivisorChain& chain, std::size_t extra_free);
  std::string to_string() const;
};

/// Smith normal form over Z.
///
/// Pivot: the nonzero entry of minimal absolute value in the working
/// submatrix, ties broken by lowest (row, col). Each pass clears the pivot row
/// and column by Euclidean division; when the pivot fails to divide some
/// remaining entry, that entry's row is added to the pivot row and the pass
/// repeats. Terminates because every repeat strictly lowers |pivot|.
DivisorChain smith_normal_form(const IntMatrix& m);

/// H_1 of the mapping torus: coker(M - I) + Z.
HomologyDescriptor mapping_torus_homology(const IntMatrix& m);

struct TorsionOrder {
  Integer value;
  /// det(M - I) = 0; value is then the product of the nonzero SNF divisors.
  bool singular = false;
};

TorsionOrder torsion_order(const IntMatrix& m);

/// 1 + dim_{F_p} ker(M - I). Throws std::invalid_argument if p is not prime.
std::size_t fp_rank(const IntMatrix& m, std::uint64_t p);

/// Top-right g x g block B of a 2g x 2g gluing matrix, with coordinates
/// 1..g spanning the meridian Lagrangian and g+1..2g its complement.
IntMatrix heegaard_block(const IntMatrix& m);

/// H_1 of the Heegaard splitting glued by M: coker(B).
HomologyDescriptor heegaard_homology(const IntMatrix& m, std::size_t genus);

/// log_5 of the torsion order (0 for trivial torsion).
double complexity_lower_bound(const HomologyDescriptor& h);

/// Natural log of a positive integer, accurate for arbitrarily large values.
double log_integer(const Integer& v);

}  // namespace rm3
