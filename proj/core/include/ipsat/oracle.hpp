#pragma once

#include <cstdint>
#include <vector>

#include "ipsat/poset.hpp"
#include "ipsat/sets.hpp"

namespace ipsat {

/// Exact induced saturation number at desk scale, with the minimum-size
/// witnesses (truncated at witness_cap, recorded when so).
struct ExactResult {
  int n = 0;
  int value = 0;
  bool exact = false;  // false when the node budget ran out first
  std::uint64_t nodes_used = 0;
  std::vector<Family> witnesses;
  std::size_t witness_cap = 0;
  bool witnesses_truncated = false;
};

/// Smallest size of an induced-p-saturated family in 2^[n], by iterative
/// deepening on family size with freeness pruning. Families are extended in
/// canonical set order, so the search is deterministic. Hard cap n <= 5; the
/// search space is doubly exponential and this is fundamental, not a tuning
/// matter.
ExactResult exact_sat_star(int n, const Poset& p,
                           std::uint64_t node_budget = 50'000'000,
                           std::size_t witness_cap = 1000);

/// All induced-p-saturated families of size <= size_cap, canonically
/// ordered. Hard cap n <= 4.
std::vector<Family> enumerate_saturated(int n, const Poset& p,
                                        std::size_t size_cap);

}  // namespace ipsat
