#include "ipsat/sets.hpp"

#include <algorithm>

namespace ipsat {

std::string SetWord::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

Family::Family(GroundSet g, std::vector<SetWord> members)
    : ground_(g), members_(std::move(members)) {
  for (SetWord w : members_)
    if ((w.bits & ~ground_.full_mask()) != 0)
      throw usage_error("family member has elements above the ground set");
  std::sort(members_.begin(), members_.end(), canonical_less);
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

bool Family::contains(SetWord a) const {
  return std::binary_search(members_.begin(), members_.end(), a,
                            canonical_less);
}

Family family_insert(const Family& fam, SetWord a) {
  if (fam.contains(a)) return fam;
  std::vector<SetWord> members = fam.members();
  members.push_back(a);
  return Family(fam.ground(), std::move(members));
}

Family family_merge(const Family& a, const Family& b) {
  if (a.ground() != b.ground())
    throw usage_error("cannot merge families over different ground sets");
  std::vector<SetWord> members = a.members();
  members.insert(members.end(), b.members().begin(), b.members().end());
  return Family(a.ground(), std::move(members));
}

Family family_complement(const Family& fam) {
  std::vector<SetWord> members;
  members.reserve(fam.size());
  for (SetWord w : fam.members()) members.push_back(complement(w, fam.ground()));
  return Family(fam.ground(), std::move(members));
}

void for_each_missing(const Family& fam,
                      const std::function<void(SetWord)>& fn) {
  const int n = fam.ground().n;
  if (n >= 63) throw usage_error("missing-set enumeration needs n < 63");
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    SetWord w{bits};
    if (!fam.contains(w)) fn(w);
  }
}

std::vector<SetWord> missing_sets(const Family& fam) {
  std::vector<SetWord> out;
  for_each_missing(fam, [&](SetWord w) { out.push_back(w); });
  return out;
}

}  // namespace ipsat
