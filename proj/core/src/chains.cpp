#include "ipsat/chains.hpp"

#include <algorithm>

namespace ipsat {

bool Chain::is_complete() const {
  if (sets.empty()) return false;
  for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
    if (!sets[i].strict_subset_of(sets[i + 1])) return false;
    if (sets[i + 1].cardinality() != sets[i].cardinality() + 1) return false;
  }
  return true;
}

std::vector<Chain> disjoint_chains(SetWord a, SetWord b,
                                   const std::vector<int>& order) {
  if (!a.subset_of(b)) throw usage_error("disjoint_chains: A must be a subset of B");
  SetWord diff = b - a;
  const std::size_t k = static_cast<std::size_t>(diff.cardinality());
  if (order.size() != k)
    throw usage_error("disjoint_chains: order must list B\\A exactly");
  SetWord seen;
  for (int e : order) {
    if (!diff.contains(e) || seen.contains(e))
      throw usage_error("disjoint_chains: order is not a permutation of B\\A");
    seen = seen.with(e);
  }

  if (k == 0) return {Chain{{a}}};

  std::vector<Chain> chains(k);
  for (std::size_t i = 0; i < k; ++i) {
    Chain& c = chains[i];
    c.sets.reserve(k + 1);
    SetWord cur = a;
    c.sets.push_back(cur);
    for (std::size_t j = 0; j < k; ++j) {
      cur = cur.with(order[(i + j) % k]);
      c.sets.push_back(cur);
    }
  }
  return chains;
}

IncrementSets increment_sets(const std::vector<Chain>& chains) {
  if (chains.empty()) throw usage_error("increment_sets: no chains");
  const SetWord base = chains.front().base();
  const SetWord top = chains.front().top();
  for (const Chain& c : chains) {
    if (!c.is_complete()) throw usage_error("increment_sets: chain not complete");
    if (c.base() != base || c.top() != top)
      throw usage_error("increment_sets: chain endpoints differ");
  }
  if ((top - base).cardinality() < static_cast<int>(chains.size()))
    throw usage_error("increment_sets: more chains than |B\\A|");

  SetWord first, last_meet = top;
  for (const Chain& c : chains) {
    first = first | (c.sets[1] - base);
    last_meet = last_meet & c.sets[c.sets.size() - 2];
  }
  return IncrementSets{first, top - last_meet};
}

std::vector<SetWord> Lantern::flatten() const {
  std::vector<SetWord> out;
  for (const Chain& c : chains)
    out.insert(out.end(), c.sets.begin(), c.sets.end());
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t Lantern::member_count() const {
  return chains.size() * (chains.front().sets.size() - 2) + 2;
}

namespace {

Lantern make_lantern(SetWord a, int s, int t, int n, LanternKind kind,
                     const std::vector<int>& order) {
  if (s < t || t < 2) throw usage_error("lantern needs s >= t >= 2");
  if (n < 2 * s + t - 1)
    throw infeasible_error("lantern needs n >= 2s+t-1, got n=" +
                           std::to_string(n));
  if (n > kMaxGround) throw usage_error("n exceeds ground capacity");
  if (!a.subset_of(SetWord::interval(1, s + t)))
    throw usage_error("lantern base must be a subset of [s+t]");

  const int k = n - s - t;
  if (static_cast<int>(order.size()) != k)
    throw usage_error("lantern order must be a permutation of [s+t+1, n]");

  SetWord top = a | SetWord::interval(s + t + 1, n);
  std::vector<Chain> all = disjoint_chains(a, top, order);

  // The Prop-1 bundle on order (x_1..x_k) gives chain C_i the first
  // increment x_i and the last increment x_{i-1}. Taking C_2..C_s makes the
  // last increments x_1..x_{s-1}; taking C_1..C_{t-1} makes the first
  // increments x_1..x_{t-1}.
  // Indices wrap: at n = 2s+t-1 the upper lantern uses all k = s-1 chains.
  std::vector<Chain> picked;
  if (kind == LanternKind::upper)
    for (int i = 1; i <= s - 1; ++i) picked.push_back(all[i % k]);
  else
    for (int i = 1; i <= t - 1; ++i) picked.push_back(all[i - 1]);

  IncrementSets inc = increment_sets(picked);
  return Lantern{a, top, kind, std::move(picked), inc.first, inc.last};
}

std::vector<int> natural_order(int s, int t, int n) {
  std::vector<int> order;
  for (int x = s + t + 1; x <= n; ++x) order.push_back(x);
  return order;
}

}  // namespace

Lantern upper_lantern(SetWord a, int s, int t, int n) {
  return make_lantern(a, s, t, n, LanternKind::upper, natural_order(s, t, n));
}

Lantern lower_lantern(SetWord a, int s, int t, int n) {
  return make_lantern(a, s, t, n, LanternKind::lower, natural_order(s, t, n));
}

Lantern upper_lantern_ordered(SetWord a, int s, int t, int n,
                              const std::vector<int>& order) {
  return make_lantern(a, s, t, n, LanternKind::upper, order);
}

Lantern lower_lantern_ordered(SetWord a, int s, int t, int n,
                              const std::vector<int>& order) {
  return make_lantern(a, s, t, n, LanternKind::lower, order);
}

}  // namespace ipsat
