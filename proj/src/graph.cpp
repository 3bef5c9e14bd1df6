#include "vcsp/graph.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

namespace vcsp {

WeightedDigraph::WeightedDigraph(int num_vertices) : n_(num_vertices) {
  if (num_vertices < 0) throw std::invalid_argument("negative vertex count");
}

WeightedDigraph::WeightedDigraph(int num_vertices, std::vector<Edge> edges)
    : WeightedDigraph(num_vertices) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) add_edge(e.src, e.dst, e.weight);
}

void WeightedDigraph::add_edge(int src, int dst, double weight) {
  if (src < 0 || src >= n_ || dst < 0 || dst >= n_)
    throw std::out_of_range("edge endpoint outside vertex range");
  if (!std::isfinite(weight) || weight < 0.0)
    throw std::invalid_argument("edge weight must be finite and nonnegative");
  if (weight == 0.0) return;
  edges_.push_back({src, dst, weight});
}

double WeightedDigraph::total_weight() const {
  double w = 0.0;
  for (const Edge& e : edges_) w += e.weight;
  return w;
}

std::vector<double> WeightedDigraph::weighted_degrees() const {
  std::vector<double> deg(static_cast<std::size_t>(n_), 0.0);
  for (const Edge& e : edges_) {
    deg[static_cast<std::size_t>(e.src)] += e.weight;
    deg[static_cast<std::size_t>(e.dst)] += e.weight;
  }
  return deg;
}

double predicate_value(const WeightedDigraph& g, Predicate p, const VertexSet& s) {
  if (s.universe() != g.num_vertices())
    throw std::invalid_argument("subset universe does not match graph");
  double value = 0.0;
  for (const Edge& e : g.edges())
    if (p.evaluate(s.contains(e.src), s.contains(e.dst))) value += e.weight;
  return value;
}

bool strongly_asymmetric(const WeightedDigraph& g) {
  std::set<std::pair<int, int>> pairs;
  for (const Edge& e : g.edges()) pairs.emplace(e.src, e.dst);
  for (const auto& [u, v] : pairs)
    if (pairs.count({v, u})) return false;  // catches self-loops too
  return true;
}

}  // namespace vcsp
