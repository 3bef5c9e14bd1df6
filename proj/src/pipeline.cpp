#include "vcsp/pipeline.hpp"

#include <map>
#include <stdexcept>

#include "vcsp/double_cover.hpp"
#include "vcsp/rng.hpp"

namespace vcsp {

namespace {

// One edge per group key, keeping the first edge's endpoints and summing the
// group's weight. Groups appear in first-occurrence order.
WeightedDigraph aggregate_edges(const WeightedDigraph& g, bool by_source) {
  std::map<int, std::size_t> slot;  // group key -> index into out_edges
  std::vector<Edge> out_edges;
  for (const Edge& e : g.edges()) {
    const int key = by_source ? e.src : e.dst;
    auto [it, inserted] = slot.try_emplace(key, out_edges.size());
    if (inserted)
      out_edges.push_back(e);
    else
      out_edges[it->second].weight += e.weight;
  }
  return WeightedDigraph(g.num_vertices(), std::move(out_edges));
}

}  // namespace

WeightedDigraph trivial_sparsifier(const WeightedDigraph& g, Predicate p) {
  if (classify(p) != SparsifiabilityClass::SparsifiableTrivial)
    throw std::invalid_argument("predicate is not trivially sparsifiable");
  switch (p.table()) {
    case 0b0000:  // "0": satisfied by nothing
      return WeightedDigraph(g.num_vertices());
    case 0b1111: {  // "1": any single edge carrying the total weight
      WeightedDigraph out(g.num_vertices());
      if (g.num_edges() > 0) {
        const Edge& first = g.edges().front();
        out.add_edge(first.src, first.dst, g.total_weight());
      }
      return out;
    }
    case 0b1100:  // 1x: value depends only on per-source outgoing weight
    case 0b0011:  // 0x
      return aggregate_edges(g, /*by_source=*/true);
    case 0b1010:  // x1: value depends only on per-target incoming weight
    case 0b0101:  // x0
      return aggregate_edges(g, /*by_source=*/false);
    default:
      throw std::logic_error("unhandled trivial predicate");
  }
}

std::pair<WeightedDigraph, SparsifiabilityClass> sparsify_predicate_graph(
    const WeightedDigraph& g, Predicate p, const SamplerConfig& cfg) {
  cfg.validate();
  const SparsifiabilityClass cls = classify(p);
  switch (cls) {
    case SparsifiabilityClass::SparsifiableTrivial:
      return {trivial_sparsifier(g, p), cls};
    case SparsifiabilityClass::NonSparsifiable:
      // Every edge must survive, so the identity map is the sparsifier.
      return {g, cls};
    case SparsifiabilityClass::SparsifiableNontrivial: {
      DoubleCoverGraph cover = gamma(g);
      cover.graph = sample_sparsifier(cover.graph, QuadraticFormKind::Laplacian, cfg);
      return {pull_back(cover), cls};
    }
  }
  throw std::logic_error("unreachable");
}

std::pair<VcspInstance, SparsifyReport> sparsify_instance(const VcspInstance& inst,
                                                          const SamplerConfig& cfg) {
  cfg.validate();
  SparsifyReport report;
  report.eps = cfg.eps;
  report.seed = cfg.seed;
  report.total_in = inst.num_constraints();

  VcspInstance out(inst.num_variables());
  // std::map keyed on Predicate iterates in truth-table order.
  for (const auto& [p, sub] : partition_by_predicate(inst)) {
    const SamplerConfig class_cfg =
        cfg.with_seed(hash_combine(cfg.seed, static_cast<std::uint64_t>(p.table())));
    const WeightedDigraph g = to_digraph(sub, p);
    const auto [g_eps, cls] = sparsify_predicate_graph(g, p, class_cfg);
    for (const Edge& e : g_eps.edges()) out.add_constraint(e.src, e.dst, p, e.weight);
    report.classes.push_back(
        {std::string(p.name()), cls, sub.num_constraints(), g_eps.num_edges()});
  }
  report.total_out = out.num_constraints();
  return {std::move(out), std::move(report)};
}

}  // namespace vcsp
