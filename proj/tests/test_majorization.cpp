#include <doctest.h>

#include <random>

#include "degpow/families.hpp"
#include "degpow/majorization.hpp"

using namespace degpow;

TEST_CASE("weakly_majorizes") {
  CHECK(weakly_majorizes({3, 2, 1}, {2, 2, 2}));
  CHECK(weakly_majorizes({3, 2, 1}, {3, 2, 1}));
  CHECK_FALSE(weakly_majorizes({2, 2}, {3, 1}));
  CHECK_THROWS_AS(weakly_majorizes({1, 1}, {1}), std::invalid_argument);
}

TEST_CASE("majorizes") {
  CHECK(majorizes({3, 2, 1}, {2, 2, 2}));
  CHECK_FALSE(majorizes({3, 2, 2}, {2, 2, 2}));
  const IntTuple k23 = degree_sequence(complete_bipartite(2, 5));
  const IntTuple c5 = degree_sequence(cycle_graph(5));
  CHECK(k23 == IntTuple{3, 3, 2, 2, 2});
  CHECK_FALSE(majorizes(k23, c5));
  CHECK(weakly_majorizes(k23, c5));
  CHECK_THROWS_AS(majorizes({1, 1}, {1}), std::invalid_argument);
}

TEST_CASE("p_power_norm") {
  CHECK(p_power_norm({6, 2, 2, 2, 2, 2, 2}, 2) == 60);
  CHECK(p_power_norm({4, 4, 4, 3, 1, 1, 1}, 2) == 60);
  CHECK(p_power_norm({1, 1, 1}, 5) == 3);
  CHECK(p_power_norm({7, 5, 0}, 1) == 12);
  CHECK_THROWS_AS(p_power_norm({1}, 0), std::invalid_argument);
}

TEST_CASE("prop1_check") {
  const IntTuple c5{2, 2, 2, 2, 2}, k23{3, 3, 2, 2, 2};
  CHECK(prop1_check(c5, k23, 2) == Prop1Verdict::holds_strict);
  CHECK(prop1_check({4, 2, 2, 2, 2}, {4, 2, 2, 2, 2}, 3) == Prop1Verdict::holds_equal);
  // third prefix sums are 12 and 10, so the proposition does not apply even
  // though the norms compare strictly
  const IntTuple balanced{4, 4, 4, 3, 1, 1, 1}, fan{6, 2, 2, 2, 2, 2, 2};
  CHECK_FALSE(weakly_majorizes(fan, balanced));
  CHECK(prop1_check(balanced, fan, 3) == Prop1Verdict::inapplicable);
  CHECK(p_power_norm(balanced, 3) == 222);
  CHECK(p_power_norm(fan, 3) == 264);
  CHECK(prop1_check({3, 1}, {2, 2}, 2) == Prop1Verdict::inapplicable);
  CHECK(to_string(Prop1Verdict::violation) == "VIOLATION");
  CHECK_THROWS_AS(prop1_check({1}, {1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(prop1_check({1}, {1, 1}, 2), std::invalid_argument);
}

namespace {

IntTuple random_tuple(std::mt19937_64& rng, int length) {
  std::uniform_int_distribution<int> entry(0, 50);
  std::vector<int> v(length);
  for (int& x : v) x = entry(rng);
  return IntTuple(v);
}

// Moves mass down from y: lowers entries and transfers units from larger to
// smaller entries, which keeps the result weakly majorized by y.
IntTuple weakly_below(std::mt19937_64& rng, const IntTuple& y) {
  std::vector<int> v(y.begin(), y.end());
  const int n = static_cast<int>(v.size());
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_int_distribution<int> steps(0, 8);
  for (int s = steps(rng); s > 0; --s) {
    std::sort(v.rbegin(), v.rend());
    const int i = pick(rng), j = pick(rng);
    if (rng() % 3 == 0) {
      if (v[i] > 0) --v[i];
    } else if (i < j && v[i] - v[j] >= 2) {
      --v[i];
      ++v[j];
    }
  }
  return IntTuple(v);
}

}  // namespace

TEST_CASE("property: weak majorization is reflexive and transitive") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> length(1, 12);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = length(rng);
    const IntTuple z = random_tuple(rng, n);
    REQUIRE(weakly_majorizes(z, z));
    const IntTuple y = trial % 2 ? weakly_below(rng, z) : random_tuple(rng, n);
    const IntTuple x = trial % 2 ? weakly_below(rng, y) : random_tuple(rng, n);
    if (weakly_majorizes(z, y) && weakly_majorizes(y, x)) REQUIRE(weakly_majorizes(z, x));
  }
}

TEST_CASE("property: Proposition 1 has no violations over random pairs") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> length(1, 12);
  std::uniform_int_distribution<int> exponent(2, 6);
  int applicable = 0, equal = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const IntTuple y = random_tuple(rng, length(rng));
    const IntTuple x = weakly_below(rng, y);
    REQUIRE(weakly_majorizes(y, x));
    const auto verdict = prop1_check(x, y, exponent(rng));
    REQUIRE(verdict != Prop1Verdict::violation);
    REQUIRE(verdict != Prop1Verdict::inapplicable);
    REQUIRE((verdict == Prop1Verdict::holds_equal) == (x == y));
    ++applicable;
    equal += verdict == Prop1Verdict::holds_equal;
  }
  CHECK(applicable == 10000);
  CHECK(equal > 0);
  CHECK(equal < 10000);
}
