#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ipsat/sets.hpp"

namespace ipsat {

/// Finite abstract poset on elements 0..size-1, stored as a full relation
/// matrix (one bitmask row per element). Sizes stay tiny, so the matrix form
/// keeps the induced checks O(1) per pair.
class Poset {
 public:
  /// Builds the reflexive-transitive closure of a cover relation.
  /// Throws invalid_poset_error on cycles.
  static Poset from_covers(int size,
                           const std::vector<std::pair<int, int>>& covers);

  int size() const { return size_; }
  bool leq(int i, int j) const { return (rows_[i] >> j) & 1u; }
  bool strictly_less(int i, int j) const { return i != j && leq(i, j); }
  bool incomparable(int i, int j) const { return !leq(i, j) && !leq(j, i); }

  /// Recovers the cover pairs (lower, upper) from the relation matrix.
  std::vector<std::pair<int, int>> hasse_covers() const;

  bool operator==(const Poset&) const = default;

 private:
  Poset(int size, std::vector<std::uint64_t> rows)
      : size_(size), rows_(std::move(rows)) {}

  int size_ = 0;
  std::vector<std::uint64_t> rows_;  // rows_[i] bit j set iff i <= j
};

/// K_{s,t}: t pairwise incomparable lower elements (labels 0..t-1), s
/// pairwise incomparable upper elements (labels t..t+s-1), every lower below
/// every upper.
Poset complete_bipartite(int s, int t);

enum class LegsKind { no_legs, legs, legs_with_hip };

struct LegsProfile {
  LegsKind kind = LegsKind::no_legs;
  std::optional<std::pair<int, int>> legs;  // (a, b), a < b
  std::optional<int> hip;
};

/// Detects legs: two incomparable elements strictly below everything else.
/// A hip is an element above both legs and strictly below the rest. Ties are
/// broken toward the smallest labels (the legs pair is in fact unique).
LegsProfile classify_legs(const Poset& p);

/// Induced embedding of a poset into (fam, subset-of): poset element i maps
/// to fam.members()[map[i]], comparabilities matching in both directions.
struct Embedding {
  std::vector<int> map;
};

std::optional<Embedding> find_induced_copy(const Family& fam, const Poset& p);

/// Same search, with some poset elements pinned to fixed member indices
/// (entry -1 = unpinned). Used by the legs-certificate partner scan.
std::optional<Embedding> find_induced_copy(const Family& fam, const Poset& p,
                                           const std::vector<int>& pinned);

/// Hasse diagram in DOT, with rank hints layering elements by height.
std::string to_dot(const Poset& p);

}  // namespace ipsat
