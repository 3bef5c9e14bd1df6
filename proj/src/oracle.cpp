#include "vcsp/oracle.hpp"

#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <utility>

#include "vcsp/cut_sparsify.hpp"

namespace vcsp {

namespace {

double zero_threshold(double scale) { return 1e-9 * std::max(1.0, scale); }

void check_enumerable(int n, int limit) {
  if (n < 0) throw std::invalid_argument("negative variable count");
  if (n > limit)
    throw std::invalid_argument("instance too large for exhaustive enumeration; "
                                "use sampled verification");
}

}  // namespace

VerificationResult exhaustive_max_error(int n,
                                        const std::function<double(const VertexSet&)>& original,
                                        const std::function<double(const VertexSet&)>& sparsified,
                                        double zero_scale) {
  check_enumerable(n, kMaxExhaustiveVars);
  const double tol = zero_threshold(zero_scale);
  VerificationResult result;
  VertexSet s(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    s.assign_mask(mask);
    const double b = original(s);
    const double a = sparsified(s);
    if (b <= tol) {
      if (a > tol && !result.zero_mismatch) {
        result.zero_mismatch = true;
        result.witness = s;
      }
      continue;
    }
    const double rel = std::abs(a - b) / b;
    if (rel > result.max_rel_error) {
      result.max_rel_error = rel;
      if (!result.zero_mismatch) result.witness = s;
    }
  }
  return result;
}

VerificationResult exhaustive_max_error(const VcspInstance& original,
                                        const VcspInstance& sparsified) {
  if (original.num_variables() != sparsified.num_variables())
    throw std::invalid_argument("instances disagree on variable count");
  return exhaustive_max_error(
      original.num_variables(), [&](const VertexSet& s) { return value(original, s); },
      [&](const VertexSet& s) { return value(sparsified, s); }, original.total_weight());
}

VerificationResult exhaustive_max_error(const WeightedDigraph& original,
                                        const WeightedDigraph& sparsified, Predicate p) {
  if (original.num_vertices() != sparsified.num_vertices())
    throw std::invalid_argument("graphs disagree on vertex count");
  return exhaustive_max_error(
      original.num_vertices(),
      [&](const VertexSet& s) { return predicate_value(original, p, s); },
      [&](const VertexSet& s) { return predicate_value(sparsified, p, s); },
      original.total_weight());
}

std::optional<IdentityViolation> check_single_set_identity(const WeightedDigraph& g, Predicate p,
                                                           const SingleSetMap& f) {
  const int n = g.num_vertices();
  check_enumerable(n, 10);
  const DoubleCoverGraph cover = gamma(g);
  const double tol = zero_threshold(g.total_weight());
  VertexSet s(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    s.assign_mask(mask);
    const double lhs = predicate_value(g, p, s);
    const double rhs = predicate_value(cover.graph, predicates::cut(), f(p, s, n));
    if (std::abs(lhs - rhs) > tol) return IdentityViolation{p, s, lhs, rhs};
  }
  return std::nullopt;
}

std::optional<IdentityViolation> check_reduction_identities(const WeightedDigraph& g) {
  const int n = g.num_vertices();
  check_enumerable(n, 10);
  const DoubleCoverGraph cover = gamma(g);
  const double tol = zero_threshold(g.total_weight());
  const Predicate cut = predicates::cut();

  VertexSet s(n);
  for (Predicate p : Predicate::all()) {
    const SparsifiabilityClass cls = classify(p);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      s.assign_mask(mask);
      double lhs = 0.0, rhs = 0.0;
      if (cls == SparsifiabilityClass::NonSparsifiable) {
        // And-family: And_H(S) = P_{gamma(H)}(f_P(S)).
        lhs = predicate_value(g, predicates::and_(), s);
        rhs = predicate_value(cover.graph, p, map_set_and_family(p, s, n));
      } else if (p.satisfying_count() == 3) {
        lhs = predicate_value(g, p, s);
        double sum = 0.0;
        for (const VertexSet& t : map_set_triple(p, s, n))
          sum += predicate_value(cover.graph, cut, t);
        rhs = 0.5 * sum;
      } else {
        lhs = predicate_value(g, p, s);
        rhs = predicate_value(cover.graph, cut, map_set_single(p, s, n));
      }
      if (std::abs(lhs - rhs) > tol) return IdentityViolation{p, s, lhs, rhs};
    }
  }
  return std::nullopt;
}

bool check_or2cut(const WeightedDigraph& g) {
  const int n = g.num_vertices();
  check_enumerable(n, 12);
  const std::vector<double> deg = g.weighted_degrees();
  const double tol = zero_threshold(g.total_weight());
  VertexSet s(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    s.assign_mask(mask);
    double deg_sum = 0.0;
    for (int v = 0; v < n; ++v)
      if (s.contains(v)) deg_sum += deg[static_cast<std::size_t>(v)];
    const double lhs = predicate_value(g, predicates::cut(), s);
    const double rhs = 2.0 * predicate_value(g, predicates::or_(), s) - deg_sum;
    if (std::abs(lhs - rhs) > tol) return false;
  }
  return true;
}

bool check_uncut_quadratic(const WeightedDigraph& g) {
  const int n = g.num_vertices();
  check_enumerable(n, 12);
  const double tol = zero_threshold(4.0 * g.total_weight());
  VertexSet s(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    s.assign_mask(mask);
    const double lhs = quadratic_form(g, QuadraticFormKind::NegatedLaplacian, sign_vector(s));
    const double rhs = 4.0 * predicate_value(g, predicates::uncut(), s);
    if (std::abs(lhs - rhs) > tol) return false;
  }
  return true;
}

std::optional<VertexSet> and_completeness_check(const WeightedDigraph& g,
                                                const WeightedDigraph& candidate) {
  if (!strongly_asymmetric(g))
    throw std::invalid_argument("graph must be strongly asymmetric");
  if (candidate.num_vertices() != g.num_vertices())
    throw std::invalid_argument("candidate vertex count differs");

  std::set<std::pair<int, int>> original, kept;
  for (const Edge& e : g.edges()) original.emplace(e.src, e.dst);
  for (const Edge& e : candidate.edges()) kept.emplace(e.src, e.dst);

  for (const auto& [u, v] : original)
    if (!kept.count({u, v})) return VertexSet(g.num_vertices(), {u, v});
  for (const auto& [u, v] : kept)
    if (!original.count({u, v})) return VertexSet(g.num_vertices(), {u, v});
  return std::nullopt;
}

}  // namespace vcsp
