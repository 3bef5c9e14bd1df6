#pragma once

#include <cstddef>
#include <vector>

#include "vcsp/predicate.hpp"
#include "vcsp/vertex_set.hpp"

namespace vcsp {

struct Edge {
  int src = 0;
  int dst = 0;
  double weight = 0.0;

  bool operator==(const Edge&) const = default;
};

// Directed graph with strictly positive edge weights. Parallel edges and
// self-loops are allowed; zero-weight edges are dropped at construction,
// negative or non-finite weights are rejected.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;
  explicit WeightedDigraph(int num_vertices);
  WeightedDigraph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  // Appends an edge, applying the same weight/endpoint checks as the
  // constructor. Zero-weight edges are silently skipped.
  void add_edge(int src, int dst, double weight);

  double total_weight() const;

  // Weighted degree per vertex, direction ignored; a self-loop counts twice.
  std::vector<double> weighted_degrees() const;

  bool operator==(const WeightedDigraph&) const = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

// P_G(S): total weight of edges whose endpoint memberships satisfy p.
double predicate_value(const WeightedDigraph& g, Predicate p, const VertexSet& s);

// True when no edge has its reverse also present (self-loops therefore
// excluded as well) — the hypothesis of the And lower bound.
bool strongly_asymmetric(const WeightedDigraph& g);

}  // namespace vcsp
