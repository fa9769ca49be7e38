#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ipsat/chains.hpp"
#include "ipsat/sets.hpp"

namespace ipsat {

/// The four deterministic parts of the saturated family:
///   F1 = {[n]} and the co-singletons of [s+t-1],
///   F2 = upper lanterns over all t-subsets A of [s+t-1],
///   F3 = lower lanterns with base A u {s+t} over all (t-1)-subsets A,
///   F4 = {0} and the singletons of [s+t-1].
struct Parts {
  Family f1, f2, f3, f4;
  std::vector<Lantern> upper_lanterns;
  std::vector<Lantern> lower_lanterns;

  Family merged() const;
};

Parts build_parts(int n, int s, int t);

/// C(s+t-1,t)(s-1) + C(s+t-1,t-1)(t-1), the linear coefficient of the size
/// bound.
long long size_bound_coefficient(int s, int t);

std::int64_t binomial(int n, int k);

/// Candidate pool for the fifth part: complements of small subsets of
/// [2s+t-1] and small subsets of [s+2t-1], in the fixed greedy order
/// (first pool before second; within each, defining subsets by cardinality,
/// then colex).
std::vector<SetWord> f5_candidates(int n, int s, int t);

/// Greedy maximal subset of the candidate pool keeping the union with the
/// four parts induced K_{s,t}-free. A seed shuffles the candidate order for
/// exploration; the default order is canonical and reproducible.
Family build_f5(const Parts& parts, int n, int s, int t,
                std::optional<unsigned> shuffle_seed = std::nullopt);

struct Construction {
  int n = 0, s = 0, t = 0;
  Parts parts;
  Family f5;
  Family family;  // merged and deduplicated union of all five parts
  std::size_t g1_size = 0, g2_size = 0;
  long long coefficient = 0;
  /// |family| - sum of the first four part sizes: the number of sets the
  /// fifth part actually adds.
  long long constant_observed = 0;
  /// True when the requested s < t: the family is the complement of the
  /// (t, s) construction, and parts/lanterns describe that mirror.
  bool complemented = false;
};

/// Assembles the full induced K_{s,t}-saturated family. Inputs with s < t
/// are served through the complementation symmetry; (1,1) and t = 1 are
/// rejected.
Construction build_saturated_family(int n, int s, int t,
                                    std::optional<unsigned> f5_seed =
                                        std::nullopt);

}  // namespace ipsat
