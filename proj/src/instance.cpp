#include "vcsp/instance.hpp"

#include <cmath>
#include <stdexcept>

namespace vcsp {

VcspInstance::VcspInstance(int num_variables) : n_(num_variables) {
  if (num_variables < 0) throw std::invalid_argument("negative variable count");
}

VcspInstance::VcspInstance(int num_variables, std::vector<Constraint> constraints)
    : VcspInstance(num_variables) {
  constraints_.reserve(constraints.size());
  for (const Constraint& c : constraints) add_constraint(c.u, c.v, c.p, c.weight);
}

void VcspInstance::add_constraint(int u, int v, Predicate p, double weight) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::out_of_range("constraint variable outside range");
  if (!std::isfinite(weight) || weight < 0.0)
    throw std::invalid_argument("constraint weight must be finite and nonnegative");
  if (weight == 0.0) return;
  constraints_.push_back({u, v, p, weight});
}

double VcspInstance::total_weight() const {
  double w = 0.0;
  for (const Constraint& c : constraints_) w += c.weight;
  return w;
}

double value(const VcspInstance& inst, const VertexSet& assignment) {
  if (assignment.universe() != inst.num_variables())
    throw std::invalid_argument("assignment does not cover all variables");
  double total = 0.0;
  for (const Constraint& c : inst.constraints())
    if (c.p.evaluate(assignment.contains(c.u), assignment.contains(c.v))) total += c.weight;
  return total;
}

WeightedDigraph to_digraph(const VcspInstance& inst, Predicate p) {
  WeightedDigraph g(inst.num_variables());
  for (const Constraint& c : inst.constraints()) {
    if (c.p != p) throw std::invalid_argument("instance mixes predicates; partition first");
    g.add_edge(c.u, c.v, c.weight);
  }
  return g;
}

std::map<Predicate, VcspInstance> partition_by_predicate(const VcspInstance& inst) {
  std::map<Predicate, VcspInstance> parts;
  for (const Constraint& c : inst.constraints()) {
    auto [it, inserted] = parts.try_emplace(c.p, inst.num_variables());
    it->second.add_constraint(c.u, c.v, c.p, c.weight);
  }
  return parts;
}

}  // namespace vcsp
