#pragma once

#include <array>

#include "vcsp/graph.hpp"
#include "vcsp/predicate.hpp"
#include "vcsp/vertex_set.hpp"

namespace vcsp {

// Bipartite double cover of a base graph on n vertices. The cover has 2n
// vertices: the positive copy of base vertex i sits at index i, the negative
// copy at index i + n. Every edge runs positive -> negative, mirroring a base
// edge of the same weight.
struct DoubleCoverGraph {
  int base_n = 0;
  WeightedDigraph graph;

  bool operator==(const DoubleCoverGraph&) const = default;
};

// Maps base edge (i -> j, w) to cover edge (i -> j + n, w). Bijective on
// edges; self-loops become proper edges between the two copies of the vertex.
DoubleCoverGraph gamma(const WeightedDigraph& g);

// Inverse of gamma on edges and weights. Rejects covers containing an edge
// that does not run positive -> negative.
WeightedDigraph pull_back(const DoubleCoverGraph& cover);

// f_P for the eight predicates whose value equals a single cut in the cover:
// P_H(S) = Cut_{gamma(H)}(f_P(S)). Accepts Cut, unCut, 0x, x0, x1, 1x, "1",
// "0"; rejects anything else.
VertexSet map_set_single(Predicate p, const VertexSet& s, int base_n);

// (f^1_P, f^2_P, f^3_P) for the four predicates with three satisfying inputs:
// P_H(S) = (Cut(T1) + Cut(T2) + Cut(T3)) / 2 in the cover. Accepts Or, nAnd,
// n10, n01.
std::array<VertexSet, 3> map_set_triple(Predicate p, const VertexSet& s, int base_n);

// f_P for the four single-satisfying-input predicates, used in the reduction
// from And: And_H(S) = P_{gamma(H)}(f_P(S)). Accepts And, nOr, Dicut, 01.
VertexSet map_set_and_family(Predicate p, const VertexSet& s, int base_n);

}  // namespace vcsp
