#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vcsp/cut_sparsify.hpp"
#include "vcsp/graph.hpp"
#include "vcsp/instance.hpp"
#include "vcsp/oracle.hpp"
#include "vcsp/predicate.hpp"

namespace vcsp {

struct ClassReport {
  std::string name;
  SparsifiabilityClass cls = SparsifiabilityClass::SparsifiableNontrivial;
  std::size_t in_count = 0;
  std::size_t out_count = 0;
};

struct SparsifyReport {
  double eps = 0.0;
  std::uint64_t seed = 0;
  std::vector<ClassReport> classes;
  std::size_t total_in = 0;
  std::size_t total_out = 0;
  std::optional<VerificationResult> verified;
};

// Exact sparsifier for the trivially sparsifiable predicates: "0" keeps
// nothing, "1" keeps one edge carrying the total weight, and the four
// single-variable predicates keep one aggregated edge per relevant endpoint.
// Aggregated edges reuse the endpoints of the first original edge in their
// group, so the output is always a re-weighted subset of the input pairs.
// Rejects predicates of any other class.
WeightedDigraph trivial_sparsifier(const WeightedDigraph& g, Predicate p);

// Routes one single-predicate graph: trivially sparsifiable classes go
// through trivial_sparsifier (zero error), non-sparsifiable predicates pass
// through unchanged, and the remaining six run gamma -> Laplacian-form edge
// sampling on the cover -> pull-back. The sampled subgraph depends only on
// the graph and config, never on which nontrivial predicate asked.
std::pair<WeightedDigraph, SparsifiabilityClass> sparsify_predicate_graph(
    const WeightedDigraph& g, Predicate p, const SamplerConfig& cfg);

// Whole-instance sparsification: partition by predicate, sparsify each class
// with a seed derived from (master seed, predicate table), and reunite.
// Classes are processed in truth-table order, so output is deterministic.
std::pair<VcspInstance, SparsifyReport> sparsify_instance(const VcspInstance& inst,
                                                          const SamplerConfig& cfg);

}  // namespace vcsp
