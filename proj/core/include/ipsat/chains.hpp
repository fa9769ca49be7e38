#pragma once

#include <vector>

#include "ipsat/sets.hpp"

namespace ipsat {

/// A chain from base to top: each set a strict subset of the next. Complete
/// when it hits every cardinality in between.
struct Chain {
  std::vector<SetWord> sets;

  SetWord base() const { return sets.front(); }
  SetWord top() const { return sets.back(); }
  bool is_complete() const;
};

/// The |B\A| pairwise internally disjoint complete chains from A to B.
/// Chain i adds order[i] first, then order[i+1], ... cyclically, ending with
/// order[i-1]. Any two of the returned chains intersect exactly in {A, B}.
/// For A == B returns the single degenerate one-set chain.
std::vector<Chain> disjoint_chains(SetWord a, SetWord b,
                                   const std::vector<int>& order);

struct IncrementSets {
  SetWord first;  // union of the size-|A|+1 members, minus A
  SetWord last;   // B minus the intersection of the size-|B|-1 members
};

/// Both increment sets of a bundle of complete chains sharing endpoints.
/// Each has cardinality equal to the number of chains.
IncrementSets increment_sets(const std::vector<Chain>& chains);

enum class LanternKind { upper, lower };

/// Bundle of internally disjoint complete chains from A to A u [s+t+1, n].
/// An upper lantern has s-1 chains and last increment set [s+t+1, 2s+t-1];
/// a lower lantern has t-1 chains and first increment set [s+t+1, s+2t-1].
/// Every member F satisfies F n [s+t-1] = A n [s+t-1].
struct Lantern {
  SetWord base;
  SetWord top;
  LanternKind kind = LanternKind::upper;
  std::vector<Chain> chains;
  SetWord first_increment;
  SetWord last_increment;

  /// All member sets, deduplicated (endpoints are shared across chains).
  std::vector<SetWord> flatten() const;

  /// (chains)·(n-s-t-1) internal sets plus the two endpoints.
  std::size_t member_count() const;
};

Lantern upper_lantern(SetWord a, int s, int t, int n);
Lantern lower_lantern(SetWord a, int s, int t, int n);

/// Same lanterns but with the elements of [s+t+1, n] taken in a caller-chosen
/// order, so tests can break the increment-set constraints deliberately.
Lantern upper_lantern_ordered(SetWord a, int s, int t, int n,
                              const std::vector<int>& order);
Lantern lower_lantern_ordered(SetWord a, int s, int t, int n,
                              const std::vector<int>& order);

}  // namespace ipsat
