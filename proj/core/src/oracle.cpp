#include "ipsat/oracle.hpp"

#include <algorithm>

namespace ipsat {

namespace {

std::vector<SetWord> canonical_universe(int n) {
  std::vector<SetWord> all;
  all.reserve(std::size_t{1} << n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits)
    all.push_back(SetWord{bits});
  std::sort(all.begin(), all.end(), canonical_less);
  return all;
}

bool is_saturated(const Family& fam, const Poset& p) {
  if (find_induced_copy(fam, p)) return false;
  bool ok = true;
  for_each_missing(fam, [&](SetWord f) {
    if (ok && !find_induced_copy(family_insert(fam, f), p)) ok = false;
  });
  return ok;
}

struct MinSearch {
  const std::vector<SetWord>& universe;
  const Poset& p;
  GroundSet ground;
  std::size_t target = 0;
  std::uint64_t budget = 0;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::size_t witness_cap = 0;
  bool truncated = false;
  std::vector<Family> found;
  std::vector<SetWord> chosen;

  // Extends free families only; any subfamily of a free family is free, so
  // the pruning loses nothing.
  void dfs(std::size_t start) {
    if (exhausted) return;
    if (chosen.size() == target) {
      Family fam(ground, chosen);
      if (is_saturated(fam, p)) {
        if (found.size() < witness_cap)
          found.push_back(std::move(fam));
        else
          truncated = true;
      }
      return;
    }
    for (std::size_t i = start; i < universe.size(); ++i) {
      if (++nodes > budget) {
        exhausted = true;
        return;
      }
      chosen.push_back(universe[i]);
      if (!find_induced_copy(Family(ground, chosen), p)) dfs(i + 1);
      chosen.pop_back();
      if (exhausted) return;
    }
  }
};

}  // namespace

ExactResult exact_sat_star(int n, const Poset& p, std::uint64_t node_budget,
                           std::size_t witness_cap) {
  if (n < 1 || n > 5)
    throw usage_error("exact_sat_star is capped at n <= 5");
  const std::vector<SetWord> universe = canonical_universe(n);

  ExactResult result;
  result.n = n;
  result.witness_cap = witness_cap;

  MinSearch search{universe, p,     GroundSet(n), 0, node_budget, 0,
                   false,    witness_cap, false,  {}, {}};
  for (std::size_t m = 0; m <= universe.size(); ++m) {
    search.target = m;
    search.found.clear();
    search.truncated = false;
    search.dfs(0);
    if (!search.found.empty()) {
      result.value = static_cast<int>(m);
      result.exact = !search.exhausted || !search.found.empty();
      result.witnesses = std::move(search.found);
      result.witnesses_truncated = search.truncated || search.exhausted;
      break;
    }
    if (search.exhausted) {
      result.value = -1;  // nothing found before the budget ran dry
      result.exact = false;
      break;
    }
  }
  result.nodes_used = search.nodes;
  return result;
}

std::vector<Family> enumerate_saturated(int n, const Poset& p,
                                        std::size_t size_cap) {
  if (n < 1 || n > 4)
    throw usage_error("enumerate_saturated is capped at n <= 4");
  const std::vector<SetWord> universe = canonical_universe(n);
  const GroundSet ground(n);

  std::vector<Family> out;
  std::vector<SetWord> chosen;
  auto dfs = [&](auto&& self, std::size_t start) -> void {
    Family fam(ground, chosen);
    if (find_induced_copy(fam, p)) return;
    if (is_saturated(fam, p)) out.push_back(fam);
    if (chosen.size() == size_cap) return;
    for (std::size_t i = start; i < universe.size(); ++i) {
      chosen.push_back(universe[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0);
  return out;
}

}  // namespace ipsat
