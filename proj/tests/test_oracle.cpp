#include "doctest.h"
#include "ipsat/oracle.hpp"
#include "ipsat/poset.hpp"
#include "ipsat/verify.hpp"
#include "reference_oracles.hpp"

using namespace ipsat;

TEST_CASE("one-point poset: the empty family is already saturated") {
  const Poset point = Poset::from_covers(1, {});
  for (int n = 1; n <= 4; ++n) {
    const ExactResult r = exact_sat_star(n, point);
    CHECK(r.exact);
    CHECK(r.value == 0);
  }
}

TEST_CASE("two-element antichain: value n+1, witnessed by maximal chains") {
  const Poset anti2 = Poset::from_covers(2, {});
  for (int n = 2; n <= 4; ++n) {
    const ExactResult r = exact_sat_star(n, anti2);
    CAPTURE(n);
    CHECK(r.exact);
    CHECK(r.value == n + 1);
    REQUIRE_FALSE(r.witnesses.empty());
    for (const Family& fam : r.witnesses) {
      CHECK(fam.size() == static_cast<std::size_t>(n) + 1);
      CHECK(testing::naive_is_saturated(fam, anti2));
    }
  }
}

TEST_CASE("one lower under two uppers: value n+1") {
  const Poset k21 = complete_bipartite(2, 1);
  for (int n = 2; n <= 4; ++n) {
    const ExactResult r = exact_sat_star(n, k21);
    CAPTURE(n);
    CHECK(r.exact);
    CHECK(r.value == n + 1);
  }
}

TEST_CASE("two-chain: value 1") {
  const Poset k11 = complete_bipartite(1, 1);
  for (int n = 1; n <= 4; ++n) {
    const ExactResult r = exact_sat_star(n, k11);
    CHECK(r.exact);
    CHECK(r.value == 1);
  }
}

TEST_CASE("minimum witnesses agree with the definitional checker") {
  const Poset k22 = complete_bipartite(2, 2);
  const ExactResult r = exact_sat_star(3, k22);
  REQUIRE(r.exact);
  for (const Family& fam : r.witnesses) {
    const SaturationReport report = check_saturated(fam, 2, 2);
    CHECK(report.free);
    CHECK(report.saturated);
    CHECK(fam.size() == static_cast<std::size_t>(r.value));
  }
}

TEST_CASE("enumeration of all saturated families at tiny n") {
  const Poset anti2 = Poset::from_covers(2, {});
  // n = 2: only the two maximal chains {0,{1},[2]} and {0,{2},[2]}.
  const auto fams = enumerate_saturated(2, anti2, 3);
  REQUIRE(fams.size() == 2);
  for (const Family& fam : fams) {
    CHECK(fam.size() == 3);
    CHECK(fam.contains(SetWord{}));
    CHECK(fam.contains(SetWord::of({1, 2})));
    CHECK(testing::naive_is_saturated(fam, anti2));
  }
  // Cap below the minimum yields nothing.
  CHECK(enumerate_saturated(2, anti2, 2).empty());
}

TEST_CASE("enumeration matches a brute-force scan at n = 3") {
  const Poset anti2 = Poset::from_covers(2, {});
  const auto fams = enumerate_saturated(3, anti2, 8);
  std::size_t brute = 0;
  // All 256 families of subsets of [3].
  for (std::uint32_t code = 0; code < 256; ++code) {
    std::vector<SetWord> sets;
    for (int b = 0; b < 8; ++b)
      if (code & (1u << b)) sets.push_back(SetWord{static_cast<std::uint64_t>(b)});
    Family fam(GroundSet(3), std::move(sets));
    if (testing::naive_is_saturated(fam, anti2)) ++brute;
  }
  CHECK(fams.size() == brute);
}

TEST_CASE("budget exhaustion is reported, not silently wrong") {
  const Poset k22 = complete_bipartite(2, 2);
  const ExactResult r = exact_sat_star(4, k22, /*node_budget=*/10);
  CHECK_FALSE(r.exact);
  CHECK(r.value == -1);
}

TEST_CASE("ground sets beyond the supported window are rejected") {
  const Poset anti2 = Poset::from_covers(2, {});
  CHECK_THROWS_AS(exact_sat_star(6, anti2), usage_error);
  CHECK_THROWS_AS(enumerate_saturated(5, anti2, 10), usage_error);
}
