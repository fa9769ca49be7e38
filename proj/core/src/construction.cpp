#include "ipsat/construction.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "ipsat/verify.hpp"

namespace ipsat {

namespace {

void check_parameters(int n, int s, int t) {
  if (t < 2 || s < t) throw usage_error("construction needs s >= t >= 2");
  if (n > kMaxGround) throw usage_error("n exceeds ground capacity");
  if (n < 2 * s + t - 1)
    throw infeasible_error("construction needs n >= 2s+t-1 = " +
                           std::to_string(2 * s + t - 1) + ", got n = " +
                           std::to_string(n));
}

// All k-subsets of [m], in colex order.
std::vector<SetWord> subsets_of_prefix(int m, int k) {
  std::vector<SetWord> out;
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t bits = 0; bits < total; ++bits)
    if (std::popcount(bits) == k) out.push_back(SetWord{bits});
  return out;
}

}  // namespace

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long size_bound_coefficient(int s, int t) {
  return binomial(s + t - 1, t) * (s - 1) + binomial(s + t - 1, t - 1) * (t - 1);
}

Family Parts::merged() const {
  return family_merge(family_merge(f1, f2), family_merge(f3, f4));
}

Parts build_parts(int n, int s, int t) {
  check_parameters(n, s, t);
  const GroundSet g(n);
  const SetWord full{g.full_mask()};

  std::vector<SetWord> f1{full};
  std::vector<SetWord> f4{SetWord{}};
  for (int x = 1; x <= s + t - 1; ++x) {
    f1.push_back(full.without(x));
    f4.push_back(SetWord::of({x}));
  }

  std::vector<Lantern> uppers, lowers;
  std::vector<SetWord> f2, f3;
  for (SetWord a : subsets_of_prefix(s + t - 1, t)) {
    Lantern l = upper_lantern(a, s, t, n);
    auto sets = l.flatten();
    f2.insert(f2.end(), sets.begin(), sets.end());
    uppers.push_back(std::move(l));
  }
  for (SetWord a : subsets_of_prefix(s + t - 1, t - 1)) {
    Lantern l = lower_lantern(a.with(s + t), s, t, n);
    auto sets = l.flatten();
    f3.insert(f3.end(), sets.begin(), sets.end());
    lowers.push_back(std::move(l));
  }

  return Parts{Family(g, std::move(f1)), Family(g, std::move(f2)),
               Family(g, std::move(f3)), Family(g, std::move(f4)),
               std::move(uppers), std::move(lowers)};
}

std::vector<SetWord> f5_candidates(int n, int s, int t) {
  check_parameters(n, s, t);
  const GroundSet g(n);
  std::vector<SetWord> out;
  for (int i = 2; i <= s; ++i)
    for (SetWord a : subsets_of_prefix(2 * s + t - 1, i))
      out.push_back(complement(a, g));
  for (int i = 2; i <= t; ++i)
    for (SetWord a : subsets_of_prefix(s + 2 * t - 1, i)) out.push_back(a);
  return out;
}

Family build_f5(const Parts& parts, int n, int s, int t,
                std::optional<unsigned> shuffle_seed) {
  std::vector<SetWord> candidates = f5_candidates(n, s, t);
  if (shuffle_seed) {
    std::mt19937 rng(*shuffle_seed);
    std::shuffle(candidates.begin(), candidates.end(), rng);
  }

  Family current = parts.merged();
  std::vector<SetWord> accepted;
  for (SetWord g : candidates) {
    if (current.contains(g)) {
      // Already in the family; keeping it in the fifth part costs nothing
      // and preserves maximality of the chosen subset.
      accepted.push_back(g);
      continue;
    }
    Family extended = family_insert(current, g);
    if (!find_induced_kst(extended, s, t)) {
      accepted.push_back(g);
      current = std::move(extended);
    }
  }
  return Family(current.ground(), std::move(accepted));
}

Construction build_saturated_family(int n, int s, int t,
                                    std::optional<unsigned> f5_seed) {
  if (s == 1 && t == 1)
    throw usage_error("K_{1,1} is excluded: its saturation number is 1");
  if (s < t) {
    // sat*(n, K_{s,t}) = sat*(n, K_{t,s}); build the mirror and complement.
    Construction con = build_saturated_family(n, t, s, f5_seed);
    con.s = s;
    con.t = t;
    con.family = family_complement(con.family);
    con.complemented = true;
    return con;
  }
  if (t < 2)
    throw usage_error("construction needs min(s,t) >= 2; K_{s,1} is out of scope");
  check_parameters(n, s, t);

  Parts parts = build_parts(n, s, t);
  Family f5 = build_f5(parts, n, s, t, f5_seed);
  Family family = family_merge(parts.merged(), f5);
  Construction con{n, s, t, std::move(parts), std::move(f5),
                   std::move(family)};

  std::int64_t g1 = 0, g2 = 0;
  for (int i = 2; i <= s; ++i) g1 += binomial(2 * s + t - 1, i);
  for (int i = 2; i <= t; ++i) g2 += binomial(s + 2 * t - 1, i);
  con.g1_size = static_cast<std::size_t>(g1);
  con.g2_size = static_cast<std::size_t>(g2);
  con.coefficient = size_bound_coefficient(s, t);

  const long long base = static_cast<long long>(con.parts.f1.size()) +
                         static_cast<long long>(con.parts.f2.size()) +
                         static_cast<long long>(con.parts.f3.size()) +
                         static_cast<long long>(con.parts.f4.size());
  con.constant_observed = static_cast<long long>(con.family.size()) - base;
  return con;
}

}  // namespace ipsat
