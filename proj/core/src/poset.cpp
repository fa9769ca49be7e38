#include "ipsat/poset.hpp"

#include <algorithm>
#include <numeric>

namespace ipsat {

Poset Poset::from_covers(int size,
                         const std::vector<std::pair<int, int>>& covers) {
  if (size < 1 || size > 64) throw usage_error("poset size must be in [1,64]");
  std::vector<std::uint64_t> rows(size);
  for (int i = 0; i < size; ++i) rows[i] = std::uint64_t{1} << i;
  for (auto [lo, hi] : covers) {
    if (lo < 0 || lo >= size || hi < 0 || hi >= size)
      throw usage_error("cover endpoint out of range");
    rows[lo] |= std::uint64_t{1} << hi;
  }
  // Reflexive-transitive closure; iterate to a fixed point.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < size; ++i) {
      std::uint64_t reach = rows[i];
      for (std::uint64_t b = rows[i]; b != 0; b &= b - 1)
        reach |= rows[std::countr_zero(b)];
      if (reach != rows[i]) {
        rows[i] = reach;
        changed = true;
      }
    }
  }
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j)
      if ((rows[i] >> j & 1u) && (rows[j] >> i & 1u))
        throw invalid_poset_error("cover relation is cyclic");
  return Poset(size, std::move(rows));
}

std::vector<std::pair<int, int>> Poset::hasse_covers() const {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j) {
      if (!strictly_less(i, j)) continue;
      bool is_cover = true;
      for (int k = 0; k < size_ && is_cover; ++k)
        if (k != i && k != j && strictly_less(i, k) && strictly_less(k, j))
          is_cover = false;
      if (is_cover) covers.emplace_back(i, j);
    }
  return covers;
}

Poset complete_bipartite(int s, int t) {
  if (s < 1 || t < 1) throw usage_error("complete bipartite poset needs s,t >= 1");
  std::vector<std::pair<int, int>> covers;
  for (int lo = 0; lo < t; ++lo)
    for (int hi = 0; hi < s; ++hi) covers.emplace_back(lo, t + hi);
  return Poset::from_covers(s + t, covers);
}

LegsProfile classify_legs(const Poset& p) {
  const int n = p.size();
  LegsProfile profile;
  for (int a = 0; a < n && !profile.legs; ++a) {
    for (int b = a + 1; b < n && !profile.legs; ++b) {
      if (!p.incomparable(a, b)) continue;
      bool below_rest = true;
      for (int k = 0; k < n && below_rest; ++k)
        if (k != a && k != b &&
            (!p.strictly_less(a, k) || !p.strictly_less(b, k)))
          below_rest = false;
      if (below_rest) {
        profile.kind = LegsKind::legs;
        profile.legs = {a, b};
      }
    }
  }
  if (!profile.legs) return profile;
  auto [a, b] = *profile.legs;
  for (int c = 0; c < n; ++c) {
    if (c == a || c == b) continue;
    if (!p.strictly_less(a, c) || !p.strictly_less(b, c)) continue;
    bool below_rest = true;
    for (int k = 0; k < n && below_rest; ++k)
      if (k != a && k != b && k != c && !p.strictly_less(c, k))
        below_rest = false;
    if (below_rest) {
      profile.kind = LegsKind::legs_with_hip;
      profile.hip = c;
      break;
    }
  }
  return profile;
}

namespace {

// Longest-chain level of each element (0 for minimal elements).
std::vector<int> chain_levels(const Poset& p) {
  const int n = p.size();
  std::vector<int> level(n, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (p.strictly_less(i, j) && level[j] < level[i] + 1) {
          level[j] = level[i] + 1;
          changed = true;
        }
  }
  return level;
}

struct CopySearch {
  const Family& fam;
  const Poset& p;
  std::vector<int> order;       // poset elements, placement order
  std::vector<int> assignment;  // element -> member index or -1
  std::vector<bool> used;

  bool consistent(int x, int member) const {
    SetWord w = fam.members()[member];
    for (int q = 0; q < p.size(); ++q) {
      if (assignment[q] < 0 || q == x) continue;
      SetWord v = fam.members()[assignment[q]];
      if (p.leq(x, q) != w.subset_of(v)) return false;
      if (p.leq(q, x) != v.subset_of(w)) return false;
    }
    return true;
  }

  bool extend(std::size_t pos) {
    while (pos < order.size() && assignment[order[pos]] >= 0) ++pos;
    if (pos == order.size()) return true;
    const int x = order[pos];
    for (int m = 0; m < static_cast<int>(fam.size()); ++m) {
      if (used[m] || !consistent(x, m)) continue;
      assignment[x] = m;
      used[m] = true;
      if (extend(pos + 1)) return true;
      assignment[x] = -1;
      used[m] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<Embedding> find_induced_copy(const Family& fam, const Poset& p,
                                           const std::vector<int>& pinned) {
  if (fam.size() < static_cast<std::size_t>(p.size())) return std::nullopt;
  if (pinned.size() != static_cast<std::size_t>(p.size()))
    throw usage_error("pinned vector must match the poset size");

  CopySearch search{fam, p, {}, pinned, std::vector<bool>(fam.size(), false)};
  for (int i = 0; i < p.size(); ++i) {
    const int m = pinned[i];
    if (m < 0) continue;
    if (m >= static_cast<int>(fam.size()) || search.used[m])
      throw usage_error("pinned assignment out of range or not injective");
    search.used[m] = true;
  }
  for (int i = 0; i < p.size(); ++i)
    if (pinned[i] >= 0 && !search.consistent(i, pinned[i])) return std::nullopt;

  // Place low levels first so subset constraints bite early; within a level,
  // elements with more relations go first.
  std::vector<int> level = chain_levels(p);
  std::vector<int> degree(p.size(), 0);
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j)
      if (i != j && !p.incomparable(i, j)) ++degree[i];
  search.order.resize(p.size());
  std::iota(search.order.begin(), search.order.end(), 0);
  std::sort(search.order.begin(), search.order.end(), [&](int a, int b) {
    if (level[a] != level[b]) return level[a] < level[b];
    if (degree[a] != degree[b]) return degree[a] > degree[b];
    return a < b;
  });

  if (!search.extend(0)) return std::nullopt;
  return Embedding{std::move(search.assignment)};
}

std::optional<Embedding> find_induced_copy(const Family& fam, const Poset& p) {
  return find_induced_copy(fam, p, std::vector<int>(p.size(), -1));
}

std::string to_dot(const Poset& p) {
  std::vector<int> level = chain_levels(p);
  const int max_level = *std::max_element(level.begin(), level.end());
  std::string out = "digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int l = 0; l <= max_level; ++l) {
    out += "  { rank=same;";
    for (int i = 0; i < p.size(); ++i)
      if (level[i] == l) out += " " + std::to_string(i) + ";";
    out += " }\n";
  }
  for (auto [lo, hi] : p.hasse_covers())
    out += "  " + std::to_string(lo) + " -> " + std::to_string(hi) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace ipsat
