#include "ipsat/certificate.hpp"

#include <algorithm>

namespace ipsat {

namespace {

int member_index(const Family& fam, SetWord w) {
  const auto& mem = fam.members();
  auto it = std::lower_bound(mem.begin(), mem.end(), w, canonical_less);
  return static_cast<int>(it - mem.begin());
}

}  // namespace

LegsCertificate legs_certificate(const Family& fam, const Poset& p,
                                 bool exclude_top) {
  const LegsProfile profile = classify_legs(p);
  if (profile.kind == LegsKind::no_legs)
    throw usage_error("legs_certificate: poset has no legs");
  const auto [leg_a, leg_b] = *profile.legs;

  if (find_induced_copy(fam, p))
    throw usage_error("legs_certificate: family is not induced-free");
  bool saturated = true;
  for_each_missing(fam, [&](SetWord f) {
    if (saturated && !find_induced_copy(family_insert(fam, f), p))
      saturated = false;
  });
  if (!saturated)
    throw usage_error("legs_certificate: family is not saturated");

  const int n = fam.ground().n;
  const SetWord full{fam.ground().full_mask()};
  LegsCertificate cert;
  cert.valid = true;

  for (int x = 1; x <= n; ++x) {
    const SetWord sx = SetWord::of({x});
    if (fam.contains(sx)) {
      if (exclude_top && sx == full) {
        cert.valid = false;
        cert.failure = "singleton equals the top set";
        return cert;
      }
      cert.f_map[x] = sx;
      continue;
    }

    const Family extended = family_insert(fam, sx);
    const int idx_x = member_index(extended, sx);

    // Candidates in descending (cardinality, colex), so the first partner
    // found is C_x.
    std::vector<SetWord> candidates = fam.members();
    std::reverse(candidates.begin(), candidates.end());
    std::optional<SetWord> partner;
    for (SetWord c : candidates) {
      if (comparable(c, sx)) continue;
      if (exclude_top && (c | sx) == full) continue;
      std::vector<int> pinned(p.size(), -1);
      pinned[leg_a] = idx_x;
      pinned[leg_b] = member_index(extended, c);
      if (find_induced_copy(extended, p, pinned)) {
        partner = c;
        break;
      }
    }

    if (!partner) {
      cert.valid = false;
      cert.failure = "no partner for element " + std::to_string(x);
      return cert;
    }
    const SetWord fx = *partner | sx;
    if (!fam.contains(fx) || fx.empty()) {
      cert.valid = false;
      cert.failure = "partner union " + fx.to_string() +
                     " is outside the family";
      return cert;
    }
    cert.partners[x] = *partner;
    cert.f_map[x] = fx;
  }

  std::vector<SetWord> images;
  for (const auto& [x, fx] : cert.f_map) images.push_back(fx);
  std::sort(images.begin(), images.end(), canonical_less);
  if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
    cert.valid = false;
    cert.failure = "f is not injective";
  }
  return cert;
}

}  // namespace ipsat
