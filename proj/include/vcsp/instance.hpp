#pragma once

#include <map>
#include <vector>

#include "vcsp/graph.hpp"
#include "vcsp/predicate.hpp"
#include "vcsp/vertex_set.hpp"

namespace vcsp {

// An ordered pair of variables constrained by a predicate. The first variable
// feeds the predicate's first input.
struct Constraint {
  int u = 0;
  int v = 0;
  Predicate p = predicates::zero();
  double weight = 0.0;

  bool operator==(const Constraint&) const = default;
};

// A weighted collection of two-variable boolean constraints. The value of an
// assignment is the total weight of satisfied constraints. Zero-weight
// constraints are dropped at construction; negative or non-finite weights and
// out-of-range variables are rejected.
class VcspInstance {
 public:
  VcspInstance() = default;
  explicit VcspInstance(int num_variables);
  VcspInstance(int num_variables, std::vector<Constraint> constraints);

  int num_variables() const { return n_; }
  std::size_t num_constraints() const { return constraints_.size(); }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  void add_constraint(int u, int v, Predicate p, double weight);

  double total_weight() const;

  bool operator==(const VcspInstance&) const = default;

 private:
  int n_ = 0;
  std::vector<Constraint> constraints_;
};

// Val_I(A): the assignment is the set of variables assigned 1.
double value(const VcspInstance& inst, const VertexSet& assignment);

// Graph view of a single-predicate instance: constraint (u,v) becomes the
// directed edge u->v with the same weight. Rejects instances mixing
// predicates other than p.
WeightedDigraph to_digraph(const VcspInstance& inst, Predicate p);

// Splits into single-predicate sub-instances over the same variable set.
// Constraint order within each class follows the input order.
std::map<Predicate, VcspInstance> partition_by_predicate(const VcspInstance& inst);

}  // namespace vcsp
