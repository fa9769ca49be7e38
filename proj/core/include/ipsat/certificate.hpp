#pragma once

#include <map>
#include <string>

#include "ipsat/poset.hpp"
#include "ipsat/sets.hpp"

namespace ipsat {

/// Injection certificate for the n+1 lower bound on families saturated for a
/// poset with legs. For each element x whose singleton is absent, C_x is the
/// largest partner (a member forming, with {x}, the legs of an induced copy
/// after adding {x}); f maps x to {x} when present and to C_x u {x}
/// otherwise. Validity asserts C_x u {x} lies in the family and f is
/// injective, which forces |family| >= n+1 once the empty set is counted.
struct LegsCertificate {
  bool valid = false;
  std::string failure;                 // empty when valid
  std::map<int, SetWord> partners;     // x -> C_x, for absent singletons only
  std::map<int, SetWord> f_map;        // x -> f(x), all x in [n]
};

/// Builds and checks the certificate. Preconditions: the poset has legs and
/// fam is induced-p-saturated (verified with the generic detector; violations
/// throw usage_error). With exclude_top set, partners are restricted so that
/// C_x u {x} avoids [n] as well, matching the n+2 variant for posets with a
/// nonempty body and no maximum.
LegsCertificate legs_certificate(const Family& fam, const Poset& p,
                                 bool exclude_top = false);

}  // namespace ipsat
