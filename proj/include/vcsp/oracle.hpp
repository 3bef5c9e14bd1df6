#pragma once

#include <functional>
#include <optional>

#include "vcsp/double_cover.hpp"
#include "vcsp/graph.hpp"
#include "vcsp/instance.hpp"
#include "vcsp/vertex_set.hpp"

namespace vcsp {

// Outcome of an exhaustive comparison. witness is the subset/assignment where
// the maximum relative error (or the zero mismatch) was observed.
struct VerificationResult {
  double max_rel_error = 0.0;
  bool zero_mismatch = false;
  std::optional<VertexSet> witness;

  bool within(double eps) const { return !zero_mismatch && max_rel_error <= eps; }
};

// Hard cap on exhaustive enumeration; 2^24 evaluations of a sparse instance
// finish within minutes.
inline constexpr int kMaxExhaustiveVars = 24;

// Enumerates all 2^n subsets and compares sparsified against original values.
// Relative error is |a - b| / b; an original value of zero demands a zero
// sparsified value (the multiplicative guarantee leaves no slack there), and
// any violation sets zero_mismatch. `zero_scale` calibrates the equality
// threshold 1e-9 * max(1, zero_scale); pass the instance's total weight.
// Throws for n > kMaxExhaustiveVars; use sampled verification at that size.
VerificationResult exhaustive_max_error(int n,
                                        const std::function<double(const VertexSet&)>& original,
                                        const std::function<double(const VertexSet&)>& sparsified,
                                        double zero_scale);

VerificationResult exhaustive_max_error(const VcspInstance& original,
                                        const VcspInstance& sparsified);

VerificationResult exhaustive_max_error(const WeightedDigraph& original,
                                        const WeightedDigraph& sparsified, Predicate p);

// A reported identity failure: predicate, the base subset, both sides.
struct IdentityViolation {
  Predicate p = predicates::zero();
  VertexSet subset;
  double lhs = 0.0;
  double rhs = 0.0;
};

using SingleSetMap = std::function<VertexSet(Predicate, const VertexSet&, int)>;

// Checks P_H(S) = Cut_{gamma(H)}(f(S)) for one predicate over all subsets.
// The mapping argument exists so tests can plant a corrupted mapping; the
// default is map_set_single.
std::optional<IdentityViolation> check_single_set_identity(const WeightedDigraph& g, Predicate p,
                                                           const SingleSetMap& f);

// Verifies the applicable cover identity (single cut, half-sum of three cuts,
// or And-family) for all 16 predicates and all 2^n subsets, n <= 10.
// Tolerance is 1e-9 scaled by total weight. Returns the first violation.
std::optional<IdentityViolation> check_reduction_identities(const WeightedDigraph& g);

// Cut_G(S) = 2*Or_G(S) - sum of weighted degrees over S, for every subset.
// Direction-insensitive; weighted degrees count self-loops twice. n <= 12.
bool check_or2cut(const WeightedDigraph& g);

// phi_S^T U_G phi_S = 4 * unCut_G(S) for every subset, n <= 12.
bool check_uncut_quadratic(const WeightedDigraph& g);

// For strongly asymmetric g with positive weights: returns the two-vertex
// witness {u,v} certifying that candidate's edge set differs from g's
// (And value w(e) > 0 on g versus 0 on the candidate, or vice versa), or
// nullopt when the edge sets coincide. Rejects non-strongly-asymmetric g.
std::optional<VertexSet> and_completeness_check(const WeightedDigraph& g,
                                                const WeightedDigraph& candidate);

}  // namespace vcsp
