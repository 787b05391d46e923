#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rm3/generators.hpp"
#include "rm3/homology.hpp"
#include "rm3/prescribe.hpp"
#include "rm3/walker.hpp"

using namespace rm3;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) m(a.dim() + i, a.dim() + j) = b(i, j);
  return m;
}

std::vector<IntMatrix> humphries_products(std::size_t genus, std::size_t count, std::size_t length) {
  auto f = std::make_shared<const GeneratorFamily>(humphries_symplectic(genus));
  std::vector<IntMatrix> out;
  for (std::size_t s = 0; s < count; ++s) out.push_back(word_product(sample_word(f, length, 500 + s)));
  return out;
}

}  // namespace

TEST_CASE("smith normal form examples") {
  CHECK(smith_normal_form(IntMatrix::identity(2)).divisors == ints({1, 1}));
  CHECK(smith_normal_form(IntMatrix{{2, 4}, {6, 8}}).divisors == ints({2, 4}));
  CHECK(smith_normal_form(IntMatrix{{-14, 2}, {-20, 2}}).divisors == ints({2, 6}));
  CHECK(smith_normal_form(IntMatrix(3)).divisors == ints({0, 0, 0}));
  CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).divisors == ints({1, 6}));
  CHECK(smith_normal_form(IntMatrix{{0, 0}, {0, -5}}).divisors == ints({5, 0}));
}

TEST_CASE("divisor chain validity") {
  CHECK(DivisorChain{ints({1, 2, 4, 0})}.is_valid());
  CHECK_FALSE(DivisorChain{ints({2, 3})}.is_valid());
  CHECK_FALSE(DivisorChain{ints({0, 2})}.is_valid());
  CHECK(DivisorChain{ints({2, 6, 0})}.nonzero_product() == 12);
  CHECK(DivisorChain{ints({2, 6, 0})}.zero_count() == 1);
}

TEST_CASE("SNF matches determinantal divisors up to dim 4") {
  CounterRng rng(21);
  for (std::size_t n = 1; n <= 4; ++n)
    for (int t = 0; t < 150; ++t) {
      const IntMatrix m = oracle::random_matrix(rng, n, -4, 4);
      CHECK(smith_normal_form(m).divisors == oracle::determinantal_divisors(m));
    }
}

TEST_CASE("SNF matches the textbook reduction on random 6x6") {
  CounterRng rng(22);
  for (int t = 0; t < 300; ++t) {
    const IntMatrix m = oracle::random_matrix(rng, 6, -9, 9);
    const DivisorChain c = smith_normal_form(m);
    CHECK(c.is_valid());
    CHECK(c.divisors == oracle::naive_snf(m));
    const Integer d = det(m);
    if (d != 0) CHECK(c.nonzero_product() == abs(d));
  }
}

TEST_CASE("SNF on low-rank matrices") {
  CounterRng rng(23);
  for (int t = 0; t < 100; ++t) {
    IntMatrix a = oracle::random_matrix(rng, 5, -3, 3);
    // force rank deficiency: last two rows are combinations of the first
    for (std::size_t j = 0; j < 5; ++j) {
      a(3, j) = 2 * a(0, j) - a(1, j);
      a(4, j) = 3 * a(2, j);
    }
    const DivisorChain c = smith_normal_form(a);
    CHECK(c.is_valid());
    CHECK(c.zero_count() >= 2);
    CHECK(c.divisors == oracle::naive_snf(a));
  }
}

TEST_CASE("SNF is invariant under unimodular transforms") {
  CounterRng rng(24);
  for (int t = 0; t < 100; ++t) {
    const IntMatrix m = oracle::random_matrix(rng, 5, -6, 6);
    const IntMatrix u = oracle::random_unimodular(rng, 5, 20);
    const IntMatrix v = oracle::random_unimodular(rng, 5, 20);
    REQUIRE(abs(det(u)) == 1);
    CHECK(smith_normal_form(mat_mul(mat_mul(u, m), v)) == smith_normal_form(m));
  }
}

TEST_CASE("SNF on long symplectic products") {
  for (const auto& m : humphries_products(3, 5, 300)) {
    const IntMatrix a = m.minus_identity();
    const DivisorChain c = smith_normal_form(a);
    CHECK(c.is_valid());
    CHECK(c.divisors == oracle::naive_snf(a));
  }
}

TEST_CASE("mapping torus homology examples") {
  const auto h0 = mapping_torus_homology(IntMatrix::identity(2));
  CHECK(h0.betti == 3);
  CHECK(h0.torsion.empty());
  CHECK(h0.torsion_order == 1);

  const auto h1 = mapping_torus_homology(IntMatrix{{2, 1}, {1, 1}});
  CHECK(h1.betti == 1);
  CHECK(h1.torsion.empty());

  const auto h2 = mapping_torus_homology(sl2_block(2, 3));
  CHECK(h2.betti == 1);
  CHECK(h2.torsion == ints({2, 6}));
  CHECK(h2.torsion_order == 12);
}

TEST_CASE("torsion order examples") {
  const auto a = torsion_order(IntMatrix::identity(4));
  CHECK(a.singular);
  CHECK(a.value == 1);
  const auto b = torsion_order(IntMatrix{{-13, 2}, {-20, 3}});
  CHECK_FALSE(b.singular);
  CHECK(b.value == 12);
  CHECK(torsion_order(IntMatrix{{2, 1}, {1, 1}}).value == 1);
}

TEST_CASE("betti number matches the rational kernel") {
  CounterRng rng(25);
  std::vector<IntMatrix> ms = humphries_products(2, 20, 30);
  // block-diagonal with identity pieces to guarantee eigenvalue 1
  ms.push_back(block_diag(IntMatrix::identity(2), IntMatrix{{2, 1}, {1, 1}}));
  ms.push_back(block_diag(IntMatrix{{1, 1}, {0, 1}}, IntMatrix{{1, 0}, {3, 1}}));
  for (const auto& m : ms) {
    const auto h = mapping_torus_homology(m);
    const std::size_t kernel = m.dim() - oracle::rational_rank(m.minus_identity());
    CHECK(h.betti == 1 + kernel);
    const auto t = torsion_order(m);
    CHECK(t.value == h.torsion_order);
    CHECK(t.singular == (kernel > 0));
  }
}

TEST_CASE("fp_rank examples") {
  for (std::size_t g = 1; g <= 3; ++g)
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) CHECK(fp_rank(IntMatrix::identity(2 * g), p) == 1 + 2 * g);
  CHECK(fp_rank(IntMatrix{{2, 1}, {1, 1}}, 2) == 1);
  CHECK(fp_rank(sl2_block(2, 3), 2) == 3);
  CHECK_THROWS_AS(fp_rank(IntMatrix::identity(2), 4), std::invalid_argument);
}

TEST_CASE("fp_rank detects primes dividing det(M - I)") {
  for (const auto& m : humphries_products(2, 30, 40)) {
    const Integer d = det(m.minus_identity());
    if (d == 0) continue;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL}) {
      const bool divides = mpz_divisible_ui_p(d.get_mpz_t(), p) != 0;
      CHECK((fp_rank(m, p) > 1) == divides);
      CHECK(fp_rank(m, p) == 1 + m.dim() - oracle::rank_mod(m.minus_identity(), static_cast<long>(p)));
    }
  }
}

TEST_CASE("heegaard homology examples") {
  for (std::size_t g = 1; g <= 3; ++g) {
    const auto h = heegaard_homology(IntMatrix::identity(2 * g), g);
    CHECK(h.betti == g);
    CHECK(h.torsion.empty());
  }
  const auto s3 = heegaard_homology(SymplecticForm{1}.matrix(), 1);
  CHECK(s3.betti == 0);
  CHECK(s3.torsion.empty());
  const auto l = heegaard_homology(IntMatrix{{1, 2}, {0, 1}}, 1);
  CHECK(l.betti == 0);
  CHECK(l.torsion == ints({2}));
  CHECK(l.torsion_order == 2);
  CHECK_THROWS(heegaard_homology(IntMatrix::identity(3), 1));
  CHECK_THROWS(heegaard_homology(IntMatrix::identity(4), 1));
}

TEST_CASE("heegaard block is the upper-right quadrant") {
  IntMatrix m(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = static_cast<long>(10 * i + j);
  CHECK(heegaard_block(m) == IntMatrix{{2, 3}, {12, 13}});
}

TEST_CASE("complexity lower bound") {
  HomologyDescriptor h;
  CHECK(complexity_lower_bound(h) == 0.0);
  h.torsion = ints({5});
  h.torsion_order = 5;
  CHECK(complexity_lower_bound(h) == doctest::Approx(1.0));
  h.torsion = ints({2, 6});
  h.torsion_order = 12;
  CHECK(complexity_lower_bound(h) == doctest::Approx(1.5440).epsilon(1e-4));
}

TEST_CASE("log of large integers") {
  CHECK(log_integer(Integer(1)) == 0.0);
  CHECK(log_integer(Integer(12)) == doctest::Approx(std::log(12.0)));
  Integer big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 400);
  CHECK(log_integer(big) == doctest::Approx(400 * std::log(10.0)));
}
