#include "vcsp/applications.hpp"

#include <cstdlib>
#include <stdexcept>

namespace vcsp {

namespace {

int checked_literal(int lit, int n) {
  const int var = literal_variable(lit);
  if (lit == 0 || var >= n) throw std::out_of_range("literal references no variable");
  return var;
}

Predicate clause_predicate(int lit1, int lit2) {
  const bool p1 = lit1 > 0, p2 = lit2 > 0;
  if (p1 && p2) return predicates::or_();
  if (!p1 && !p2) return predicates::n_and();
  if (!p1 && p2) return predicates::n10();  // (~x v y): false only at (1,0)
  return predicates::n01();                 // (x v ~y): false only at (0,1)
}

}  // namespace

int literal_variable(int lit) { return std::abs(lit) - 1; }

bool literal_satisfied(int lit, const VertexSet& assignment) {
  const bool truth = assignment.contains(literal_variable(lit));
  return lit > 0 ? truth : !truth;
}

double two_sat_value(const TwoSatFormula& f, const VertexSet& assignment) {
  double total = 0.0;
  for (const TwoSatClause& c : f.clauses)
    if (literal_satisfied(c.lit1, assignment) || literal_satisfied(c.lit2, assignment))
      total += c.weight;
  return total;
}

double two_lin_value(const TwoLinSystem& sys, const VertexSet& assignment) {
  double total = 0.0;
  for (const TwoLinEquation& eq : sys.equations) {
    const int lhs = (assignment.contains(eq.u) ? 1 : 0) + (assignment.contains(eq.v) ? 1 : 0);
    if (lhs % 2 == eq.rhs) total += eq.weight;
  }
  return total;
}

VcspInstance encode_2sat(const TwoSatFormula& f) {
  VcspInstance inst(f.n);
  for (const TwoSatClause& c : f.clauses) {
    const int u = checked_literal(c.lit1, f.n);
    const int v = checked_literal(c.lit2, f.n);
    inst.add_constraint(u, v, clause_predicate(c.lit1, c.lit2), c.weight);
  }
  return inst;
}

VcspInstance encode_2lin(const TwoLinSystem& sys) {
  VcspInstance inst(sys.n);
  for (const TwoLinEquation& eq : sys.equations) {
    if (eq.rhs != 0 && eq.rhs != 1) throw std::invalid_argument("equation rhs must be 0 or 1");
    inst.add_constraint(eq.u, eq.v, eq.rhs == 1 ? predicates::cut() : predicates::uncut(),
                        eq.weight);
  }
  return inst;
}

TwoSatFormula decode_2sat(const VcspInstance& inst) {
  TwoSatFormula f{inst.num_variables(), {}};
  for (const Constraint& c : inst.constraints()) {
    const int pos_u = c.u + 1, pos_v = c.v + 1;
    TwoSatClause clause{0, 0, c.weight};
    if (c.p == predicates::or_()) clause = {pos_u, pos_v, c.weight};
    else if (c.p == predicates::n_and()) clause = {-pos_u, -pos_v, c.weight};
    else if (c.p == predicates::n10()) clause = {-pos_u, pos_v, c.weight};
    else if (c.p == predicates::n01()) clause = {pos_u, -pos_v, c.weight};
    else throw std::invalid_argument("constraint is not a clause predicate");
    f.clauses.push_back(clause);
  }
  return f;
}

TwoLinSystem decode_2lin(const VcspInstance& inst) {
  TwoLinSystem sys{inst.num_variables(), {}};
  for (const Constraint& c : inst.constraints()) {
    int rhs = 0;
    if (c.p == predicates::cut()) rhs = 1;
    else if (c.p == predicates::uncut()) rhs = 0;
    else throw std::invalid_argument("constraint is not an equation predicate");
    sys.equations.push_back({c.u, c.v, rhs, c.weight});
  }
  return sys;
}

double k_cut_value(const WeightedDigraph& g, const std::vector<int>& labels, int k) {
  if (k < 1) throw std::invalid_argument("partition needs at least one block");
  if (labels.size() != static_cast<std::size_t>(g.num_vertices()))
    throw std::invalid_argument("one label per vertex required");
  for (int l : labels)
    if (l < 0 || l >= k) throw std::invalid_argument("label outside [0,k)");
  double total = 0.0;
  for (const Edge& e : g.edges())
    if (labels[static_cast<std::size_t>(e.src)] != labels[static_cast<std::size_t>(e.dst)])
      total += e.weight;
  return total;
}

VertexSet partition_block(const std::vector<int>& labels, int a) {
  VertexSet s(static_cast<int>(labels.size()));
  for (std::size_t v = 0; v < labels.size(); ++v)
    if (labels[v] == a) s.insert(static_cast<int>(v));
  return s;
}

double sum_mod_k_value(const WeightedDigraph& g, const std::vector<int>& assign, int k, int a) {
  if (assign.size() != static_cast<std::size_t>(g.num_vertices()))
    throw std::invalid_argument("one value per vertex required");
  double total = 0.0;
  for (const Edge& e : g.edges())
    if ((assign[static_cast<std::size_t>(e.src)] + assign[static_cast<std::size_t>(e.dst)]) % k ==
        a)
      total += e.weight;
  return total;
}

std::array<int, 3> sum_mod_k_witness(int k, int a) {
  if (k < 3) throw std::invalid_argument("witness exists only for alphabet size k >= 3");
  if (a < 0 || a >= k) throw std::invalid_argument("residue outside [0,k)");
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      if ((x + y) % k != a) continue;
      for (int z = 0; z < k; ++z)
        if ((z + x) % k != a && (z + y) % k != a && (2 * z) % k != a) return {x, y, z};
    }
  throw std::logic_error("no witness triple found");  // cannot happen for k >= 3
}

std::vector<int> demonstrate_sum_nonsparsifiable(const WeightedDigraph& g,
                                                 std::size_t dropped_edge, int k, int a) {
  if (dropped_edge >= g.num_edges()) throw std::out_of_range("edge index out of range");
  const Edge& e = g.edges()[dropped_edge];
  if (e.src == e.dst)
    throw std::invalid_argument("dropped edge must join two distinct vertices");
  const auto [x, y, z] = sum_mod_k_witness(k, a);
  std::vector<int> assign(static_cast<std::size_t>(g.num_vertices()), z);
  assign[static_cast<std::size_t>(e.src)] = x;
  assign[static_cast<std::size_t>(e.dst)] = y;
  return assign;
}

}  // namespace vcsp
