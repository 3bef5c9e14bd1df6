#pragma once

#include <array>
#include <vector>

#include "vcsp/graph.hpp"
#include "vcsp/instance.hpp"
#include "vcsp/vertex_set.hpp"

namespace vcsp {

// Literals are nonzero signed 1-based variable ids: +3 is variable 2,
// -3 its negation.
struct TwoSatClause {
  int lit1 = 0;
  int lit2 = 0;
  double weight = 0.0;

  bool operator==(const TwoSatClause&) const = default;
};

struct TwoSatFormula {
  int n = 0;
  std::vector<TwoSatClause> clauses;

  bool operator==(const TwoSatFormula&) const = default;
};

// Weighted equation u + v = rhs (mod 2).
struct TwoLinEquation {
  int u = 0;
  int v = 0;
  int rhs = 0;
  double weight = 0.0;

  bool operator==(const TwoLinEquation&) const = default;
};

struct TwoLinSystem {
  int n = 0;
  std::vector<TwoLinEquation> equations;

  bool operator==(const TwoLinSystem&) const = default;
};

int literal_variable(int lit);
bool literal_satisfied(int lit, const VertexSet& assignment);

// Total weight of satisfied clauses/equations under the assignment.
double two_sat_value(const TwoSatFormula& f, const VertexSet& assignment);
double two_lin_value(const TwoLinSystem& sys, const VertexSet& assignment);

// Clause (l1 v l2) becomes one constraint on (var(l1), var(l2)) whose
// predicate encodes the sign pattern: ++ -> Or, -- -> nAnd, -+ -> n10,
// +- -> n01. Values agree with two_sat_value on every assignment.
VcspInstance encode_2sat(const TwoSatFormula& f);

// rhs = 1 -> Cut, rhs = 0 -> unCut.
VcspInstance encode_2lin(const TwoLinSystem& sys);

// Inverse of the encoders, for writing sparsified instances back out in
// their native formats. Reject constraints outside the encoding's image.
TwoSatFormula decode_2sat(const VcspInstance& inst);
TwoLinSystem decode_2lin(const VcspInstance& inst);

// Total weight of edges whose endpoints carry different labels. labels[v]
// must lie in [0, k); equals half the sum of the k one-vs-rest cut values.
double k_cut_value(const WeightedDigraph& g, const std::vector<int>& labels, int k);

// Members of block a under a labeling.
VertexSet partition_block(const std::vector<int>& labels, int a);

// Total weight of edges (u,v) with assign[u] + assign[v] = a (mod k).
double sum_mod_k_value(const WeightedDigraph& g, const std::vector<int>& assign, int k, int a);

// Lexicographically first (x, y, z) in [k]^3 with x + y = a (mod k) while
// z + x, z + y and 2z all differ from a (mod k). Exists for every k >= 3;
// rejects k < 3.
std::array<int, 3> sum_mod_k_witness(int k, int a);

// The assignment that pins down non-sparsifiability of Sum_a: the dropped
// edge's endpoints get x and y, everyone else z. On graphs with no other
// edge between (or reversed between) those endpoints and no self-loops
// there, the Sum_a value of g is exactly the dropped edge's weight while
// g minus that edge evaluates to zero. Rejects self-loop edges and k < 3.
std::vector<int> demonstrate_sum_nonsparsifiable(const WeightedDigraph& g,
                                                 std::size_t dropped_edge, int k, int a);

}  // namespace vcsp
