#pragma once

#include "rm3/exact_matrix.hpp"
#include "rm3/homology.hpp"

namespace rm3 {

/// [[1 - r(1 + rs), r], [-r(1 + s + rs), 1 + r]]: det 1, SNF(block - I) = (r, rs).
/// Throws std::invalid_argument unless r, s >= 1.
IntMatrix sl2_block(const Integer& r, const Integer& s);

/// Symplectic M (standard form, genus n) whose M - I has elementary divisors
/// equal to the given chain of length 2n. Consecutive entries (a_{2i-1}, a_{2i})
/// feed block i, which acts on coordinates (i, n + i).
///
/// Throws std::invalid_argument for odd length, a zero entry, or a broken
/// divisibility chain.
IntMatrix prescribe_symplectic(const DivisorChain& chain);

/// is_symplectic(M) and SNF(M - I) == chain. Throws std::invalid_argument when
/// the chain length differs from the matrix dimension.
bool verify_prescription(const IntMatrix& m, const DivisorChain& chain);

/// Parses "a,b,c" into a chain (whitespace tolerated).
DivisorChain parse_chain(const std::string& text);

}  // namespace rm3
