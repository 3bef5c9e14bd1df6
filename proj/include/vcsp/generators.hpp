#pragma once

#include <cstdint>

#include "vcsp/applications.hpp"
#include "vcsp/graph.hpp"
#include "vcsp/hypergraph.hpp"
#include "vcsp/instance.hpp"

namespace vcsp {

// Seeded generators for demos and verification runs. All draws come from the
// splitmix stream, so every generator is reproducible across platforms.

// m edges with distinct endpoints (no self-loops), weights uniform in
// [w_min, w_max). Parallel edges allowed.
WeightedDigraph random_digraph(int n, int m, double w_min, double w_max, std::uint64_t seed);

// Like random_digraph but with all ordered pairs distinct and no pair present
// together with its reverse. Requires m <= n*(n-1)/2.
WeightedDigraph random_strongly_asymmetric_digraph(int n, int m, double w_min, double w_max,
                                                   std::uint64_t seed);

TwoSatFormula random_2sat(int n, int m, double w_min, double w_max, std::uint64_t seed);

TwoLinSystem random_2lin(int n, int m, double w_min, double w_max, std::uint64_t seed);

// Clauses of exactly k distinct variables (never tautological).
KSatFormula random_ksat(int n, int m, int k, double w_min, double w_max, std::uint64_t seed);

// Random instance drawing predicates uniformly from the given list.
VcspInstance random_instance(int n, int m, const std::vector<Predicate>& preds, double w_min,
                             double w_max, std::uint64_t seed);

}  // namespace vcsp
