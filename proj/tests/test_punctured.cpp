#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "oracles.hpp"
#include "rm3/punctured.hpp"
#include "rm3/walker.hpp"

using namespace rm3;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("continued fraction examples") {
  CHECK(continued_fraction(7, 5).digits == ints({1, 2, 2}));
  CHECK(continued_fraction(3, 1).digits == ints({3}));
  CHECK(continued_fraction(1, 3).digits == ints({0, 3}));
  CHECK(continued_fraction(2, 4).digits == ints({0, 2}));
  const auto neg = continued_fraction(-7, 5);
  CHECK(neg.negative);
  CHECK(neg.digits == ints({1, 2, 2}));
  CHECK(neg.value() == mpq_class(-7, 5));
  const auto flip = continued_fraction(7, -5);
  CHECK(flip.negative);
  CHECK(flip.denominator == 5);
  CHECK_THROWS_AS(continued_fraction(1, 0), std::invalid_argument);
}

TEST_CASE("continued fraction reconstruction") {
  CounterRng rng(71);
  for (int t = 0; t < 10000; ++t) {
    const long b = 1 + static_cast<long>(rng.uniform_below(1000000));
    const long a = static_cast<long>(rng.uniform_below(2000001)) - 1000000;
    const auto cf = continued_fraction(a, b);
    mpq_class expect(a, b);
    expect.canonicalize();
    CHECK(cf.value() == expect);
    mpq_class folded = oracle::fold_digits(cf.digits);
    if (cf.negative) folded = -folded;
    CHECK(folded == expect);
    if (cf.digits.size() > 1) CHECK(cf.digits.back() >= 2);
    for (std::size_t k = 1; k < cf.digits.size(); ++k) CHECK(cf.digits[k] >= 1);
  }
}

TEST_CASE("minsky proxy examples") {
  // a/b = 7/5 in the first row
  CHECK(minsky_bound_proxy(IntMatrix{{7, 5}, {4, 3}}) == mpq_class(1, 4));
  CHECK(minsky_bound_proxy(IntMatrix{{10, 1}, {9, 1}}) == mpq_class(1, 100));
  CHECK(minsky_bound_proxy(IntMatrix{{1, 1}, {1, 2}}) == 1);
  CHECK_THROWS_AS(minsky_bound_proxy(IntMatrix{{1, 0}, {3, 1}}), std::domain_error);
  CHECK_THROWS_AS(minsky_bound_proxy(IntMatrix{{2, 1}, {1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(minsky_bound_proxy(IntMatrix::identity(4)), std::invalid_argument);
}

TEST_CASE("minsky proxy is antitone in the largest digit") {
  CounterRng rng(72);
  std::vector<std::pair<Integer, mpq_class>> seen;
  for (int t = 0; t < 300; ++t) {
    const long b = 1 + static_cast<long>(rng.uniform_below(500));
    long a = 1 + static_cast<long>(rng.uniform_below(500));
    while (std::gcd(a, b) != 1) ++a;
    // complete (a, b) to an SL(2) matrix [[a, b], [c, d]] with ad - bc = 1
    mpz_class g, s, u;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), mpz_class(a).get_mpz_t(),
               mpz_class(b).get_mpz_t());
    IntMatrix m(2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = -u;
    m(1, 1) = s;
    REQUIRE(det(m) == 1);
    seen.emplace_back(continued_fraction(a, b).max_digit(), minsky_bound_proxy(m));
  }
  for (const auto& [d1, p1] : seen)
    for (const auto& [d2, p2] : seen)
      if (d1 >= d2) CHECK(p1 <= p2);
}

TEST_CASE("longest run examples") {
  const std::vector<Letter> w{0, 0, 1, 0, 0, 0, 1};
  CHECK(longest_run(w, 0) == 3);
  CHECK(longest_run(w, 1) == 1);
  CHECK(longest_run(std::vector<Letter>{}, 0) == 0);
  CHECK(longest_run(std::vector<Letter>(17, 0), 0) == 17);
  CHECK(longest_run(std::vector<Letter>(17, 0), 1) == 0);
}

TEST_CASE("longest run matches a rescan") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto w = sample_letters(2 + s % 3, 1 + s * 7, s);
    for (Letter l = 0; l < 3; ++l) CHECK(longest_run(w, l) == oracle::longest_run(w, l));
  }
}

TEST_CASE("run scaling experiment") {
  const std::vector<std::size_t> one{1};
  const auto r = run_scaling_experiment(2, one, 50, 3);
  REQUIRE(r.rows.size() == 1);
  CHECK(r.rows[0].mean_longest_run >= 0.0);
  CHECK(r.rows[0].mean_longest_run <= 1.0);
  CHECK_FALSE(r.fit.has_value());

  const std::vector<std::size_t> lengths{256, 512, 1024, 2048};
  const auto a = run_scaling_experiment(2, lengths, 100, 9);
  const auto b = run_scaling_experiment(2, lengths, 100, 9);
  REQUIRE(a.fit.has_value());
  CHECK(a.fit->slope == b.fit->slope);
  for (std::size_t i = 0; i < lengths.size(); ++i)
    CHECK(a.rows[i].mean_longest_run == b.rows[i].mean_longest_run);
  CHECK(a.fit->slope > 0.8 / std::numbers::ln2);
  CHECK(a.fit->slope < 1.2 / std::numbers::ln2);
  CHECK_THROWS(run_scaling_experiment(1, lengths, 10, 0));
}
