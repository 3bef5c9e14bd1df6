#include "vcsp/double_cover.hpp"

#include <stdexcept>

namespace vcsp {

namespace {

// Positive copies of s inside the 2n cover universe.
VertexSet positive(const VertexSet& s, int base_n) {
  VertexSet out(2 * base_n);
  for (int v = 0; v < base_n; ++v)
    if (s.contains(v)) out.insert(v);
  return out;
}

// Negative copies of s: member i maps to i + n.
VertexSet negative(const VertexSet& s, int base_n) {
  VertexSet out(2 * base_n);
  for (int v = 0; v < base_n; ++v)
    if (s.contains(v)) out.insert(v + base_n);
  return out;
}

void check_base(const VertexSet& s, int base_n) {
  if (base_n < 0) throw std::invalid_argument("negative base vertex count");
  if (s.universe() != base_n) throw std::invalid_argument("subset universe does not match base_n");
}

}  // namespace

DoubleCoverGraph gamma(const WeightedDigraph& g) {
  const int n = g.num_vertices();
  WeightedDigraph cover(2 * n);
  for (const Edge& e : g.edges()) cover.add_edge(e.src, e.dst + n, e.weight);
  return {n, std::move(cover)};
}

WeightedDigraph pull_back(const DoubleCoverGraph& cover) {
  const int n = cover.base_n;
  if (cover.graph.num_vertices() != 2 * n)
    throw std::invalid_argument("cover graph must have 2 * base_n vertices");
  WeightedDigraph g(n);
  for (const Edge& e : cover.graph.edges()) {
    if (e.src < 0 || e.src >= n || e.dst < n || e.dst >= 2 * n)
      throw std::invalid_argument("cover edge does not run positive -> negative");
    g.add_edge(e.src, e.dst - n, e.weight);
  }
  return g;
}

VertexSet map_set_single(Predicate p, const VertexSet& s, int base_n) {
  check_base(s, base_n);
  const VertexSet comp = s.complement();
  switch (p.table()) {
    case 0b0110:  // Cut -> S u -S
      return positive(s, base_n) | negative(s, base_n);
    case 0b1001:  // unCut -> S u -comp(S)
      return positive(s, base_n) | negative(comp, base_n);
    case 0b0011:  // 0x -> comp(S)
      return positive(comp, base_n);
    case 0b0101:  // x0 -> -comp(S)
      return negative(comp, base_n);
    case 0b1010:  // x1 -> -S
      return negative(s, base_n);
    case 0b1100:  // 1x -> S
      return positive(s, base_n);
    case 0b1111:  // "1" -> all positive copies
      return positive(s, base_n) | positive(comp, base_n);
    case 0b0000:  // "0" -> empty
      return VertexSet(2 * base_n);
    default:
      throw std::invalid_argument("predicate has no single-cut mapping");
  }
}

std::array<VertexSet, 3> map_set_triple(Predicate p, const VertexSet& s, int base_n) {
  check_base(s, base_n);
  const VertexSet comp = s.complement();
  const VertexSet pos = positive(s, base_n);
  const VertexSet neg = negative(s, base_n);
  const VertexSet pos_comp = positive(comp, base_n);
  const VertexSet neg_comp = negative(comp, base_n);
  switch (p.table()) {
    case 0b1110:  // Or: (S, -S, S u -S)
      return {pos, neg, pos | neg};
    case 0b0111:  // nAnd: (comp, -comp, comp u -comp)
      return {pos_comp, neg_comp, pos_comp | neg_comp};
    case 0b1011:  // n10: (comp, -S, comp u -S)
      return {pos_comp, neg, pos_comp | neg};
    case 0b1101:  // n01: (S, -comp, S u -comp)
      return {pos, neg_comp, pos | neg_comp};
    default:
      throw std::invalid_argument("predicate has no triple-cut mapping");
  }
}

VertexSet map_set_and_family(Predicate p, const VertexSet& s, int base_n) {
  check_base(s, base_n);
  const VertexSet comp = s.complement();
  switch (p.table()) {
    case 0b1000:  // And -> S u -S
      return positive(s, base_n) | negative(s, base_n);
    case 0b0001:  // nOr -> comp u -comp
      return positive(comp, base_n) | negative(comp, base_n);
    case 0b0100:  // Dicut -> S u -comp
      return positive(s, base_n) | negative(comp, base_n);
    case 0b0010:  // 01 -> comp u -S
      return positive(comp, base_n) | negative(s, base_n);
    default:
      throw std::invalid_argument("predicate is not in the And family");
  }
}

}  // namespace vcsp
