#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "ipsat/errors.hpp"

namespace ipsat {

// One machine word of ground elements is plenty: the constructions here are
// only ever materialized for n up to a few dozen.
inline constexpr int kMaxGround = 64;

/// Ground set [n] = {1, ..., n}. Elements are 1-indexed externally and map to
/// bit positions 0..n-1 internally.
struct GroundSet {
  int n;

  explicit GroundSet(int n_) : n(n_) {
    if (n < 1 || n > kMaxGround)
      throw usage_error("ground set size must be in [1, " +
                        std::to_string(kMaxGround) + "], got " +
                        std::to_string(n));
  }

  std::uint64_t full_mask() const {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

  bool operator==(const GroundSet&) const = default;
};

/// A subset of [n] as a bitmask; element i occupies bit i-1.
struct SetWord {
  std::uint64_t bits = 0;

  constexpr SetWord() = default;
  constexpr explicit SetWord(std::uint64_t b) : bits(b) {}

  static SetWord of(std::initializer_list<int> elems) {
    SetWord w;
    for (int e : elems) w = w.with(e);
    return w;
  }

  // Closed interval [lo, hi]; empty when lo > hi.
  static SetWord interval(int lo, int hi) {
    SetWord w;
    for (int e = lo; e <= hi; ++e) w = w.with(e);
    return w;
  }

  int cardinality() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  bool contains(int e) const { return (bits >> (e - 1)) & 1u; }

  SetWord with(int e) const {
    if (e < 1 || e > kMaxGround) throw usage_error("element out of range");
    return SetWord{bits | (std::uint64_t{1} << (e - 1))};
  }
  SetWord without(int e) const {
    if (e < 1 || e > kMaxGround) throw usage_error("element out of range");
    return SetWord{bits & ~(std::uint64_t{1} << (e - 1))};
  }

  bool subset_of(SetWord o) const { return (bits & ~o.bits) == 0; }
  bool strict_subset_of(SetWord o) const {
    return bits != o.bits && subset_of(o);
  }

  SetWord operator|(SetWord o) const { return SetWord{bits | o.bits}; }
  SetWord operator&(SetWord o) const { return SetWord{bits & o.bits}; }
  SetWord operator-(SetWord o) const { return SetWord{bits & ~o.bits}; }
  bool operator==(const SetWord&) const = default;

  /// Elements in ascending order, 1-indexed.
  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint64_t b = bits; b != 0; b &= b - 1)
      out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  std::string to_string() const;
};

enum class Relation { equal, strict_subset, strict_superset, incomparable };

inline Relation relation(SetWord a, SetWord b) {
  if (a.bits == b.bits) return Relation::equal;
  if (a.subset_of(b)) return Relation::strict_subset;
  if (b.subset_of(a)) return Relation::strict_superset;
  return Relation::incomparable;
}

inline bool comparable(SetWord a, SetWord b) {
  return a.subset_of(b) || b.subset_of(a);
}

inline SetWord complement(SetWord a, GroundSet g) {
  if ((a.bits & ~g.full_mask()) != 0)
    throw usage_error("set has elements above the ground set");
  return SetWord{~a.bits & g.full_mask()};
}

// Canonical order on sets: cardinality first, colex to break ties. Colex on
// subsets of [n] coincides with numeric order of the masks.
inline bool canonical_less(SetWord a, SetWord b) {
  int ca = a.cardinality(), cb = b.cardinality();
  if (ca != cb) return ca < cb;
  return a.bits < b.bits;
}

inline bool colex_less(SetWord a, SetWord b) { return a.bits < b.bits; }

/// Deduplicated collection of SetWords over a fixed ground set, kept in
/// canonical (cardinality, colex) order. Immutable once built; insertion
/// returns a new Family.
class Family {
 public:
  explicit Family(GroundSet g) : ground_(g) {}
  Family(GroundSet g, std::vector<SetWord> members);

  const GroundSet& ground() const { return ground_; }
  const std::vector<SetWord>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(SetWord a) const;

  bool operator==(const Family&) const = default;

 private:
  GroundSet ground_;
  std::vector<SetWord> members_;  // sorted by canonical_less, distinct
};

/// Value-returning insert; idempotent on duplicates.
Family family_insert(const Family& fam, SetWord a);

Family family_merge(const Family& a, const Family& b);

/// Complement every member. Mirrors the sat*(n, K_{s,t}) = sat*(n, K_{t,s})
/// symmetry of the Boolean lattice.
Family family_complement(const Family& fam);

/// Calls fn for each set of 2^[n] absent from fam, in colex order.
/// Requires n small enough to enumerate (the CLI guards at ~20).
void for_each_missing(const Family& fam, const std::function<void(SetWord)>& fn);

std::vector<SetWord> missing_sets(const Family& fam);

}  // namespace ipsat
