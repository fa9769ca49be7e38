#include <random>

#include "doctest.h"
#include "ipsat/construction.hpp"
#include "ipsat/poset.hpp"
#include "ipsat/verify.hpp"
#include "reference_oracles.hpp"

using namespace ipsat;

namespace {

Family make_family(int n, std::initializer_list<std::initializer_list<int>> ss) {
  std::vector<SetWord> words;
  for (auto s : ss) words.push_back(SetWord::of(s));
  return Family(GroundSet(n), std::move(words));
}

}  // namespace

TEST_CASE("valid_kst_copy invariants") {
  InducedKstCopy good{{SetWord::of({1, 2}), SetWord::of({1, 3})},
                      {SetWord::of({1})}};
  CHECK(valid_kst_copy(good, 2, 1));
  CHECK(good.contains(SetWord::of({1})));
  CHECK_FALSE(good.contains(SetWord::of({2})));

  // comparable uppers
  InducedKstCopy bad1{{SetWord::of({1}), SetWord::of({1, 2})},
                      {SetWord{}}};
  CHECK_FALSE(valid_kst_copy(bad1, 2, 1));
  // non-strict crossing
  InducedKstCopy bad2{{SetWord::of({1, 2})}, {SetWord::of({1, 2})}};
  CHECK_FALSE(valid_kst_copy(bad2, 1, 1));
  // wrong arity
  CHECK_FALSE(valid_kst_copy(good, 2, 2));
}

TEST_CASE("detector finds the butterfly-with-floor copy") {
  // {1},{2} below {1,2,3},{1,2,4} is an induced K_{2,2}.
  Family fam = make_family(
      4, {{1}, {2}, {1, 2, 3}, {1, 2, 4}});
  auto copy = find_induced_kst(fam, 2, 2);
  REQUIRE(copy.has_value());
  CHECK(valid_kst_copy(*copy, 2, 2));

  // Induced-ness constrains only the four chosen sets, so adding other
  // members cannot destroy the copy.
  Family larger = family_insert(fam, SetWord::of({1, 2}));
  CHECK(find_induced_kst(larger, 2, 2).has_value());

  // Removing one upper leaves only a single strict superset of {1} u {2}.
  Family reduced = make_family(4, {{1}, {2}, {1, 2, 3}});
  CHECK_FALSE(find_induced_kst(reduced, 2, 2).has_value());
}

TEST_CASE("detector respects the required member") {
  Family fam = make_family(4, {{1}, {2}, {1, 2, 3}, {1, 2, 4}, {3, 4}});
  auto through = find_induced_kst_containing(fam, SetWord::of({1}), 2, 2);
  REQUIRE(through.has_value());
  CHECK(through->contains(SetWord::of({1})));
  // {3,4} is incomparable to every other member, so no copy passes through.
  CHECK_FALSE(
      find_induced_kst_containing(fam, SetWord::of({3, 4}), 2, 2).has_value());
}

TEST_CASE("detector agrees with the generic poset embedder") {
  std::mt19937 rng(20260826);
  for (auto [s, t] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 2}}) {
    const Poset p = complete_bipartite(s, t);
    for (int trial = 0; trial < 120; ++trial) {
      const int n = 3 + static_cast<int>(rng() % 3);  // n in [3,5]
      Family fam = testing::random_family(rng, n, 9);
      const bool fast = find_induced_kst(fam, s, t).has_value();
      const bool naive = testing::naive_has_induced_copy(fam, p);
      CAPTURE(s);
      CAPTURE(t);
      CHECK(fast == naive);
    }
  }
}

TEST_CASE("the full power set is saturated for K_{2,2}") {
  std::vector<SetWord> all;
  for (std::uint64_t m = 0; m < 8; ++m) all.push_back(SetWord{m});
  Family fam(GroundSet(3), std::move(all));
  const SaturationReport report = check_saturated(fam, 2, 2);
  CHECK(report.free);
  CHECK(report.saturated);
  CHECK(report.unwitnessed.empty());
}

TEST_CASE("a free but unsaturated family is reported as such") {
  Family chain = make_family(3, {{}, {1}, {1, 2}, {1, 2, 3}});
  const SaturationReport report = check_saturated(chain, 2, 2);
  CHECK(report.free);
  CHECK_FALSE(report.saturated);
  CHECK_FALSE(report.unwitnessed.empty());

  Family copy = make_family(4, {{1}, {2}, {1, 2, 3}, {1, 2, 4}});
  const SaturationReport bad = check_saturated(copy, 2, 2);
  CHECK_FALSE(bad.free);
  REQUIRE(bad.internal_copy.has_value());
  CHECK(valid_kst_copy(*bad.internal_copy, 2, 2));
}

TEST_CASE("constructed families are saturated at desk scale") {
  for (auto [n, s, t] : {std::tuple{7, 2, 2}, {8, 2, 2}, {8, 3, 2}}) {
    const Construction con = build_saturated_family(n, s, t);
    const SaturationReport report = check_saturated(con.family, s, t);
    CAPTURE(n);
    CAPTURE(s);
    CAPTURE(t);
    CHECK(report.free);
    CHECK(report.saturated);
  }
}

TEST_CASE("constructive witnesses cover every missing set at (7,2,2)") {
  const Construction con = build_saturated_family(7, 2, 2);
  for_each_missing(con.family, [&](SetWord f) {
    const InducedKstCopy copy = witness_for_missing(f, con);
    CAPTURE(f.to_string());
    CHECK(valid_kst_copy(copy, con.s, con.t));
    CHECK(copy.contains(f));
    Family extended = family_insert(con.family, f);
    for (SetWord w : copy.uppers) CHECK(extended.contains(w));
    for (SetWord w : copy.lowers) CHECK(extended.contains(w));
  });
}

TEST_CASE("constructive witnesses cover every missing set at (8,3,2)") {
  const Construction con = build_saturated_family(8, 3, 2);
  for_each_missing(con.family, [&](SetWord f) {
    const InducedKstCopy copy = witness_for_missing(f, con);
    CHECK(valid_kst_copy(copy, con.s, con.t));
    CHECK(copy.contains(f));
    Family extended = family_insert(con.family, f);
    for (SetWord w : copy.uppers) CHECK(extended.contains(w));
    for (SetWord w : copy.lowers) CHECK(extended.contains(w));
  });
}

TEST_CASE("witnesses work through the complementation path (s < t)") {
  const Construction con = build_saturated_family(7, 2, 3);
  REQUIRE(con.complemented);
  int checked = 0;
  for_each_missing(con.family, [&](SetWord f) {
    if (++checked > 40) return;  // spot-check; full sweep runs above
    const InducedKstCopy copy = witness_for_missing(f, con);
    CHECK(valid_kst_copy(copy, con.s, con.t));
    CHECK(copy.contains(f));
  });
}

TEST_CASE("witness member of an empty-trace missing set") {
  // F = {6}: trace on [3] is empty, so the witness places F among the
  // lowers next to small singletons, with co-singleton uppers.
  const Construction con = build_saturated_family(7, 2, 2);
  const SetWord f = SetWord::of({6});
  REQUIRE_FALSE(con.family.contains(f));
  const InducedKstCopy copy = witness_for_missing(f, con);
  CHECK(valid_kst_copy(copy, 2, 2));
  bool in_lowers = false;
  for (SetWord w : copy.lowers) in_lowers |= (w == f);
  CHECK(in_lowers);
}

TEST_CASE("witness member of a full-trace missing set") {
  // F = {1,...,6}: trace on [3] is full, so F joins the uppers.
  const Construction con = build_saturated_family(7, 2, 2);
  const SetWord f = SetWord::interval(1, 6);
  REQUIRE_FALSE(con.family.contains(f));
  const InducedKstCopy copy = witness_for_missing(f, con);
  CHECK(valid_kst_copy(copy, 2, 2));
  bool in_uppers = false;
  for (SetWord w : copy.uppers) in_uppers |= (w == f);
  CHECK(in_uppers);
}

TEST_CASE("complementation duality of induced copies") {
  // fam has an induced K_{s,t} copy iff its complement family has an
  // induced K_{t,s} copy.
  std::mt19937 rng(97);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);  // n in [2,10]
    Family fam = testing::random_family(rng, n, 10);
    Family mirror = family_complement(fam);
    for (auto [s, t] : {std::pair{2, 2}, {3, 2}}) {
      const bool direct = find_induced_kst(fam, s, t).has_value();
      const bool dual = find_induced_kst(mirror, t, s).has_value();
      CAPTURE(n);
      CHECK(direct == dual);
    }
  }
}
