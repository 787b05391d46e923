#include <doctest.h>

#include "rm3/exact_matrix.hpp"
#include "rm3/generators.hpp"
#include "rm3/walker.hpp"

using namespace rm3;

namespace {

IntMatrix with_entries(std::size_t n, std::initializer_list<std::tuple<int, int, long>> cells) {
  IntMatrix m = IntMatrix::identity(n);
  for (auto [r, c, v] : cells) m(r - 1, c - 1) = v;
  return m;
}

bool contains(const GeneratorFamily& f, const IntMatrix& m) {
  for (const auto& x : f.matrices())
    if (x == m) return true;
  return false;
}

}  // namespace

TEST_CASE("Birman matrices at genus 2") {
  CHECK(birman_u(2, 1) == with_entries(4, {{3, 1, 1}}));
  CHECK(birman_y(2, 1) == with_entries(4, {{1, 3, -1}}));
  CHECK(birman_z(2, 1) == with_entries(4, {{1, 3, -1}, {2, 4, -1}, {1, 4, 1}, {2, 3, 1}}));
}

TEST_CASE("Humphries family") {
  const auto f = humphries_symplectic(2);
  CHECK(f.size() == 5);
  CHECK(f.group() == GroupTag{GroupKind::symplectic, 2});
  CHECK(f.is_symplectic());
  CHECK(contains(f, birman_u(2, 1)));
  CHECK(contains(f, birman_y(2, 2)));
  CHECK_THROWS_AS(humphries_symplectic(1), std::invalid_argument);
  CHECK_THROWS_AS(humphries_symplectic(0), std::invalid_argument);
}

TEST_CASE("Humphries cardinality and symplecticity across genera") {
  for (std::size_t g = 2; g <= 14; ++g) {
    const auto f = humphries_symplectic(g);
    CHECK(f.size() == 2 * g + 1);
    CHECK(f.dim() == 2 * g);
    for (const auto& m : f.matrices()) {
      CHECK(is_symplectic(m, SymplecticForm{g}));
      CHECK(det(m) == 1);
    }
  }
}

TEST_CASE("Hua-Reiner matrices") {
  CHECK(hua_reiner_u5(2) == IntMatrix{{0, -1}, {1, 0}});
  CHECK(hua_reiner_u5(3) == IntMatrix{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  CHECK(hua_reiner_u2(3) == with_entries(3, {{1, 2, 1}}));
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto f = hua_reiner(n);
    CHECK(f.size() == 2);
    CHECK(f.group() == GroupTag{GroupKind::special_linear, n});
    for (const auto& m : f.matrices()) CHECK(det(m) == 1);
  }
  CHECK_THROWS_AS(hua_reiner(1), std::invalid_argument);
}

TEST_CASE("Stanek matrices") {
  CHECK(stanek_d(2) == IntMatrix{{0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}});
  CHECK(stanek_t(2, 1) == with_entries(4, {{3, 1, 1}}));
  CHECK(stanek_r21(3) == with_entries(6, {{2, 1, 1}, {4, 5, -1}}));
  const auto one = stanek(1);
  const auto hr = hua_reiner(2);
  CHECK(one.matrices() == hr.matrices());
  CHECK(one.group() == GroupTag{GroupKind::symplectic, 1});
  CHECK(stanek(2).size() == 3);
  CHECK(stanek(3).size() == 3);
  CHECK(stanek(4).size() == 2);
  CHECK(stanek(4)[0] == mat_mul(stanek_r21(4), stanek_t(4, 1)));
  CHECK_THROWS_AS(stanek(0), std::invalid_argument);
}

TEST_CASE("Stanek generators preserve the standard form") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto f = stanek(n);
    CHECK(f.preserved_form() == PreservedForm::standard);
    for (const auto& m : f.matrices()) CHECK(det(m) == 1);
  }
}

TEST_CASE("symmetric closure") {
  const GeneratorFamily id(FamilyName::custom, {IntMatrix::identity(2)});
  CHECK(symmetric_closure(id).size() == 1);

  const GeneratorFamily t(FamilyName::custom, {IntMatrix{{1, 1}, {0, 1}}});
  const auto ts = symmetric_closure(t);
  REQUIRE(ts.size() == 2);
  CHECK(ts[0] == IntMatrix{{1, 1}, {0, 1}});
  CHECK(ts[1] == IntMatrix{{1, -1}, {0, 1}});
  CHECK(ts.mode() == SamplingMode::symmetric);

  const auto hs = symmetric_closure(hua_reiner(2));
  CHECK(hs.size() == 4);
  CHECK(contains(hs, hua_reiner_u5(2).negated()));
  for (const auto& m : hs.matrices()) CHECK(contains(hs, unimodular_inverse(m)));
}

TEST_CASE("family validation") {
  CHECK_THROWS_AS(GeneratorFamily(FamilyName::custom, {}), std::invalid_argument);
  CHECK_THROWS_AS(GeneratorFamily(FamilyName::custom, {IntMatrix{{2, 0}, {0, 1}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(GeneratorFamily(FamilyName::custom, {IntMatrix::identity(2), IntMatrix::identity(3)}),
                  std::invalid_argument);
  // det -1 is unimodular but not in SL
  CHECK_THROWS_AS(GeneratorFamily(FamilyName::custom, {IntMatrix{{0, 1}, {1, 0}}}),
                  std::invalid_argument);
  const GeneratorFamily dup(FamilyName::custom, {IntMatrix::identity(2), IntMatrix::identity(2)});
  CHECK(dup.size() == 1);
}

TEST_CASE("custom family infers its group") {
  const GeneratorFamily sp(FamilyName::custom, {IntMatrix{{1, 1}, {0, 1}}});
  CHECK(sp.group() == GroupTag{GroupKind::symplectic, 1});
  const GeneratorFamily sl(FamilyName::custom, {hua_reiner_u5(3)});
  CHECK(sl.group() == GroupTag{GroupKind::special_linear, 3});
  CHECK_FALSE(sl.is_symplectic());
}

TEST_CASE("Hua-Reiner walks stay in SL(n)") {
  for (std::size_t n : {2u, 3u, 5u}) {
    auto f = std::make_shared<const GeneratorFamily>(hua_reiner(n));
    const Word w = sample_word(f, 10000, 99 + n);
    CHECK(det(word_product(w)) == 1);
  }
}

TEST_CASE("name round trips") {
  for (auto n : {FamilyName::humphries, FamilyName::hua_reiner, FamilyName::stanek, FamilyName::custom})
    CHECK(family_name_from_string(to_string(n)) == n);
  CHECK(sampling_mode_from_string("positive") == SamplingMode::positive_only);
  CHECK(sampling_mode_from_string("symmetric") == SamplingMode::symmetric);
  CHECK_THROWS(family_name_from_string("nope"));
  CHECK_THROWS(sampling_mode_from_string("both"));
}
