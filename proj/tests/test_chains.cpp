#include <algorithm>
#include <random>

#include "doctest.h"
#include "ipsat/chains.hpp"

using namespace ipsat;

namespace {

// Internal sets of two chains sharing endpoints must not meet at all.
bool internally_disjoint(const Chain& a, const Chain& b) {
  for (std::size_t i = 1; i + 1 < a.sets.size(); ++i)
    for (std::size_t j = 1; j + 1 < b.sets.size(); ++j)
      if (a.sets[i] == b.sets[j]) return false;
  return true;
}

}  // namespace

TEST_CASE("disjoint_chains cyclic construction, k = 2") {
  auto chains = disjoint_chains(SetWord{}, SetWord::of({1, 2}), {1, 2});
  REQUIRE(chains.size() == 2);
  CHECK(chains[0].sets ==
        std::vector<SetWord>{SetWord{}, SetWord::of({1}), SetWord::of({1, 2})});
  CHECK(chains[1].sets ==
        std::vector<SetWord>{SetWord{}, SetWord::of({2}), SetWord::of({1, 2})});
}

TEST_CASE("disjoint_chains degenerate and error cases") {
  auto same = disjoint_chains(SetWord::of({2}), SetWord::of({2}), {});
  REQUIRE(same.size() == 1);
  CHECK(same[0].sets == std::vector<SetWord>{SetWord::of({2})});

  CHECK_THROWS_AS(disjoint_chains(SetWord::of({1}), SetWord::of({2}), {2}),
                  usage_error);
  CHECK_THROWS_AS(
      disjoint_chains(SetWord{}, SetWord::of({1, 2}), {1, 1}), usage_error);
}

TEST_CASE("disjoint_chains internal intersections, k = 3") {
  auto chains =
      disjoint_chains(SetWord::of({1}), SetWord::of({1, 2, 3, 4}), {2, 3, 4});
  REQUIRE(chains.size() == 3);
  CHECK(chains[1].sets ==
        std::vector<SetWord>{SetWord::of({1}), SetWord::of({1, 3}),
                             SetWord::of({1, 3, 4}), SetWord::of({1, 2, 3, 4})});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      CHECK(internally_disjoint(chains[i], chains[j]));
}

TEST_CASE("complete chains property suite (100 random triples)") {
  std::mt19937 rng(90121);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 15);  // n <= 16
    std::uniform_int_distribution<std::uint64_t> dist(
        0, (std::uint64_t{1} << n) - 1);
    const SetWord b{dist(rng)};
    const SetWord a{b.bits & dist(rng)};

    std::vector<int> order = (b - a).elements();
    std::shuffle(order.begin(), order.end(), rng);

    auto chains = disjoint_chains(a, b, order);
    const int k = (b - a).cardinality();
    if (k == 0) {
      CHECK(chains.size() == 1);
      continue;
    }
    CHECK(static_cast<int>(chains.size()) == k);
    for (const Chain& c : chains) {
      CHECK(c.is_complete());
      CHECK(c.base() == a);
      CHECK(c.top() == b);
    }
    for (std::size_t i = 0; i < chains.size(); ++i)
      for (std::size_t j = i + 1; j < chains.size(); ++j)
        CHECK(internally_disjoint(chains[i], chains[j]));
  }
}

TEST_CASE("increment sets") {
  Chain single{{SetWord{}, SetWord::of({1}), SetWord::of({1, 2})}};
  auto inc = increment_sets({single});
  CHECK(inc.first == SetWord::of({1}));
  CHECK(inc.last == SetWord::of({2}));

  auto chains =
      disjoint_chains(SetWord::of({1}), SetWord::of({1, 2, 3, 4}), {2, 3, 4});
  auto pair = increment_sets({chains[1], chains[2]});
  CHECK(pair.first == SetWord::of({3, 4}));
  CHECK(pair.last == SetWord::of({2, 3}));

  // the full Prop-1 bundle has first = last = B\A
  auto all = increment_sets(chains);
  CHECK(all.first == SetWord::of({2, 3, 4}));
  CHECK(all.last == SetWord::of({2, 3, 4}));
}

TEST_CASE("upper lantern, s = t = 2, n = 7") {
  const Lantern l = upper_lantern(SetWord::of({1, 2}), 2, 2, 7);
  REQUIRE(l.chains.size() == 1);
  CHECK(l.chains[0].sets ==
        std::vector<SetWord>{SetWord::of({1, 2}), SetWord::of({1, 2, 6}),
                             SetWord::of({1, 2, 6, 7}),
                             SetWord::of({1, 2, 5, 6, 7})});
  CHECK(l.last_increment == SetWord::of({5}));  // [s+t+1, 2s+t-1] = [5,5]
  CHECK(l.member_count() == 4);
}

TEST_CASE("lantern trace invariant (Remark-style)") {
  // every member agrees with the base on [s+t-1]
  const SetWord prefix = SetWord::interval(1, 3);
  const Lantern up = upper_lantern(SetWord::of({1, 3}), 2, 2, 7);
  for (SetWord f : up.flatten()) CHECK((f & prefix) == SetWord::of({1, 3}));

  const Lantern low = lower_lantern(SetWord::of({1, 4}), 2, 2, 7);
  REQUIRE(low.chains.size() == 1);
  CHECK(low.chains[0].sets ==
        std::vector<SetWord>{SetWord::of({1, 4}), SetWord::of({1, 4, 5}),
                             SetWord::of({1, 4, 5, 6}),
                             SetWord::of({1, 4, 5, 6, 7})});
  CHECK(low.first_increment == SetWord::of({5}));
}

TEST_CASE("lantern increment constraints across parameters") {
  for (int s = 2; s <= 4; ++s)
    for (int t = 2; t <= s; ++t)
      for (int n = 2 * s + t - 1; n <= 2 * s + t + 3; ++n) {
        const SetWord base = SetWord::interval(1, t);
        const Lantern up = upper_lantern(base, s, t, n);
        CHECK(up.chains.size() == static_cast<std::size_t>(s - 1));
        CHECK(up.last_increment == SetWord::interval(s + t + 1, 2 * s + t - 1));
        CHECK(up.member_count() ==
              static_cast<std::size_t>((s - 1) * (n - s - t - 1) + 2));
        CHECK(up.flatten().size() == up.member_count());

        const Lantern low = lower_lantern(base, s, t, n);
        CHECK(low.chains.size() == static_cast<std::size_t>(t - 1));
        CHECK(low.first_increment ==
              SetWord::interval(s + t + 1, s + 2 * t - 1));
        CHECK(low.flatten().size() ==
              static_cast<std::size_t>((t - 1) * (n - s - t - 1) + 2));
      }
}

TEST_CASE("lower lantern at s=3, t=3, n=10") {
  const Lantern l = lower_lantern(SetWord::of({1, 2, 6}), 3, 3, 10);
  CHECK(l.chains.size() == 2);
  CHECK(l.first_increment == SetWord::of({7, 8}));  // [s+t+1, s+2t-1]
}

TEST_CASE("lantern feasibility errors") {
  CHECK_THROWS_AS(upper_lantern(SetWord::of({1, 2}), 2, 2, 4), infeasible_error);
  CHECK_THROWS_AS(upper_lantern(SetWord::of({1, 2}), 1, 1, 7), usage_error);
  CHECK_THROWS_AS(upper_lantern(SetWord::of({7}), 2, 2, 7), usage_error);
}
