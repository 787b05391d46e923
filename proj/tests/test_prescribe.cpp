#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "rm3/homology.hpp"
#include "rm3/prescribe.hpp"

using namespace rm3;

namespace {

DivisorChain chain(std::initializer_list<long> xs) { return DivisorChain{{xs.begin(), xs.end()}}; }

}  // namespace

TEST_CASE("sl2 blocks") {
  CHECK(sl2_block(1, 1) == IntMatrix{{-1, 1}, {-3, 2}});
  CHECK(sl2_block(2, 3) == IntMatrix{{-13, 2}, {-20, 3}});
  CHECK(sl2_block(2, 2) == IntMatrix{{-9, 2}, {-14, 3}});
  CHECK(smith_normal_form(sl2_block(1, 1).minus_identity()) == chain({1, 1}));
  CHECK(smith_normal_form(sl2_block(2, 3).minus_identity()) == chain({2, 6}));
  CHECK(smith_normal_form(sl2_block(2, 2).minus_identity()) == chain({2, 4}));
}

TEST_CASE("sl2 blocks have det 1 and the right divisors") {
  for (long r = 1; r <= 50; ++r)
    for (long s = 1; s <= 50; ++s) {
      const IntMatrix b = sl2_block(r, s);
      CHECK(det(b) == 1);
      if (r <= 10 && s <= 10) CHECK(smith_normal_form(b.minus_identity()) == chain({r, r * s}));
    }
}

TEST_CASE("prescribe examples") {
  const IntMatrix a = prescribe_symplectic(chain({1, 1}));
  CHECK(smith_normal_form(a.minus_identity()) == chain({1, 1}));
  CHECK(is_symplectic(a));

  const IntMatrix b = prescribe_symplectic(chain({1, 1, 2, 4}));
  CHECK(b.dim() == 4);
  CHECK(is_symplectic(b));
  CHECK(smith_normal_form(b.minus_identity()) == chain({1, 1, 2, 4}));

  CHECK(prescribe_symplectic(chain({2, 6})) == IntMatrix{{-13, 2}, {-20, 3}});
}

TEST_CASE("prescribe errors") {
  CHECK_THROWS_AS(prescribe_symplectic(chain({1, 2, 4})), std::invalid_argument);
  CHECK_THROWS_AS(prescribe_symplectic(chain({2, 3})), std::invalid_argument);
  CHECK_THROWS_AS(prescribe_symplectic(chain({0, 0})), std::invalid_argument);
  CHECK_THROWS_AS(prescribe_symplectic(chain({})), std::invalid_argument);
}

TEST_CASE("verify prescription") {
  CHECK(verify_prescription(sl2_block(2, 3), chain({2, 6})));
  CHECK_FALSE(verify_prescription(IntMatrix::identity(2), chain({2, 6})));
  CHECK_FALSE(verify_prescription(IntMatrix{{2, 0}, {0, 1}}, chain({1, 1})));
  CHECK_FALSE(verify_prescription(IntMatrix{{2, 0}, {0, 1}}, chain({1, 2})));
  CHECK_THROWS(verify_prescription(IntMatrix::identity(2), chain({1, 1, 1, 1})));
}

TEST_CASE("prescription round trip") {
  CounterRng rng(61);
  int made = 0;
  while (made < 200) {
    const std::size_t len = 2 * (1 + rng.uniform_below(4));
    std::vector<Integer> d;
    Integer a = 1 + rng.uniform_below(5);
    d.push_back(a);
    while (d.size() < len) {
      a *= 1 + rng.uniform_below(5);
      d.push_back(a);
    }
    if (d.back() > 100) continue;
    ++made;
    const DivisorChain c{d};
    const IntMatrix m = prescribe_symplectic(c);
    CHECK(verify_prescription(m, c));
    CHECK(oracle::naive_snf(m.minus_identity()) == d);
  }
}

TEST_CASE("block-diagonal divisors merge by divisibility") {
  // Each block contributes (r, r s); the union sorted by divisibility is the chain.
  const DivisorChain c = chain({1, 3, 3, 6, 12, 24});
  const IntMatrix m = prescribe_symplectic(c);
  std::vector<Integer> merged;
  for (std::size_t i = 0; i < c.rank(); i += 2) {
    const auto b = smith_normal_form(sl2_block(c.divisors[i], c.divisors[i + 1] / c.divisors[i]).minus_identity());
    merged.insert(merged.end(), b.divisors.begin(), b.divisors.end());
  }
  std::sort(merged.begin(), merged.end());
  CHECK(smith_normal_form(m.minus_identity()).divisors == merged);
}

TEST_CASE("parse chain") {
  CHECK(parse_chain("1,1,2,4") == chain({1, 1, 2, 4}));
  CHECK(parse_chain(" 2 , 6 ") == chain({2, 6}));
  CHECK_THROWS(parse_chain(""));
  CHECK_THROWS(parse_chain("1,,2"));
  CHECK_THROWS(parse_chain("1,x"));
}
