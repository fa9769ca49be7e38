#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ipsat/construction.hpp"
#include "ipsat/sets.hpp"

namespace ipsat {

/// An induced copy of K_{s,t} in a family: s pairwise incomparable uppers,
/// t pairwise incomparable lowers, every lower a strict subset of every
/// upper.
struct InducedKstCopy {
  std::vector<SetWord> uppers;
  std::vector<SetWord> lowers;

  bool contains(SetWord w) const;
};

/// Checks all the copy invariants, including strictness of the layer-crossing
/// containments and distinctness of the s+t sets.
bool valid_kst_copy(const InducedKstCopy& copy, int s, int t);

/// Specialized detector: enumerates candidate lower antichains in canonical
/// order (hence by ascending cardinality), then looks for s pairwise
/// incomparable supersets of their union.
std::optional<InducedKstCopy> find_induced_kst(const Family& fam, int s, int t);

/// Same search restricted to copies through a given member. `required` must
/// be in fam.
std::optional<InducedKstCopy> find_induced_kst_containing(const Family& fam,
                                                          SetWord required,
                                                          int s, int t);

struct SaturationReport {
  bool free = false;
  bool saturated = false;
  /// A copy inside fam itself, when not free.
  std::optional<InducedKstCopy> internal_copy;
  /// Missing sets whose addition creates no induced copy.
  std::vector<SetWord> unwitnessed;
  /// Missing set -> copy through it, populated when requested.
  std::vector<std::pair<SetWord, InducedKstCopy>> witnesses;
};

/// Definitional saturation check: freeness on fam, then one detector run per
/// missing set, restricted to copies through it. Exhaustive over 2^[n].
SaturationReport check_saturated(const Family& fam, int s, int t,
                                 bool collect_witnesses = false);

/// The constructive witness for a missing set, following the case analysis
/// on |F n [s+t-1]| and |F|. Reads the construction's lantern structure, so
/// it only applies to families built by build_saturated_family. Throws
/// defect_error if a case that the analysis rules out is ever reached.
InducedKstCopy witness_for_missing(SetWord f, const Construction& con);

struct LayerBoundsReport {
  bool intersection_ok = false;  // every incomparable s-tuple meets [s+t-1] in < t
  bool union_ok = false;         // every incomparable t-tuple covers >= t of [s+t-1]
  std::vector<SetWord> counterexample;

  bool ok() const { return intersection_ok && union_ok; }
};

/// Brute-force scan of all pairwise incomparable s-tuples and t-tuples of
/// F1 u F2 u F3 u F4.
LayerBoundsReport check_layer_bounds(const Parts& parts, int s, int t);

}  // namespace ipsat
