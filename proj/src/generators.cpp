#include "vcsp/generators.hpp"

#include <set>
#include <stdexcept>
#include <utility>

#include "vcsp/rng.hpp"

namespace vcsp {

namespace {

std::pair<int, int> distinct_pair(SplitMix& rng, int n) {
  const int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
  if (v >= u) ++v;
  return {u, v};
}

}  // namespace

WeightedDigraph random_digraph(int n, int m, double w_min, double w_max, std::uint64_t seed) {
  if (n < 2 && m > 0) throw std::invalid_argument("need at least two vertices for edges");
  SplitMix rng(seed);
  WeightedDigraph g(n);
  for (int i = 0; i < m; ++i) {
    const auto [u, v] = distinct_pair(rng, n);
    g.add_edge(u, v, rng.uniform(w_min, w_max));
  }
  return g;
}

WeightedDigraph random_strongly_asymmetric_digraph(int n, int m, double w_min, double w_max,
                                                   std::uint64_t seed) {
  if (static_cast<long long>(m) > static_cast<long long>(n) * (n - 1) / 2)
    throw std::invalid_argument("too many edges for a strongly asymmetric digraph");
  SplitMix rng(seed);
  WeightedDigraph g(n);
  std::set<std::pair<int, int>> used;
  while (static_cast<int>(used.size()) < m) {
    const auto [u, v] = distinct_pair(rng, n);
    if (used.count({u, v}) || used.count({v, u})) continue;
    used.emplace(u, v);
    g.add_edge(u, v, rng.uniform(w_min, w_max));
  }
  return g;
}

TwoSatFormula random_2sat(int n, int m, double w_min, double w_max, std::uint64_t seed) {
  SplitMix rng(seed);
  TwoSatFormula f{n, {}};
  for (int i = 0; i < m; ++i) {
    const auto [u, v] = distinct_pair(rng, n);
    const int lit1 = (rng.below(2) == 0 ? 1 : -1) * (u + 1);
    const int lit2 = (rng.below(2) == 0 ? 1 : -1) * (v + 1);
    f.clauses.push_back({lit1, lit2, rng.uniform(w_min, w_max)});
  }
  return f;
}

TwoLinSystem random_2lin(int n, int m, double w_min, double w_max, std::uint64_t seed) {
  SplitMix rng(seed);
  TwoLinSystem sys{n, {}};
  for (int i = 0; i < m; ++i) {
    const auto [u, v] = distinct_pair(rng, n);
    sys.equations.push_back({u, v, static_cast<int>(rng.below(2)), rng.uniform(w_min, w_max)});
  }
  return sys;
}

KSatFormula random_ksat(int n, int m, int k, double w_min, double w_max, std::uint64_t seed) {
  if (k > n) throw std::invalid_argument("clause size exceeds variable count");
  SplitMix rng(seed);
  KSatFormula f(n);
  for (int i = 0; i < m; ++i) {
    std::set<int> vars;
    while (static_cast<int>(vars.size()) < k)
      vars.insert(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
    std::vector<int> lits;
    for (int v : vars) lits.push_back((rng.below(2) == 0 ? 1 : -1) * (v + 1));
    f.add_clause(std::move(lits), rng.uniform(w_min, w_max));
  }
  return f;
}

VcspInstance random_instance(int n, int m, const std::vector<Predicate>& preds, double w_min,
                             double w_max, std::uint64_t seed) {
  if (preds.empty()) throw std::invalid_argument("need at least one predicate");
  SplitMix rng(seed);
  VcspInstance inst(n);
  for (int i = 0; i < m; ++i) {
    const auto [u, v] = distinct_pair(rng, n);
    const Predicate p = preds[rng.below(preds.size())];
    inst.add_constraint(u, v, p, rng.uniform(w_min, w_max));
  }
  return inst;
}

}  // namespace vcsp
