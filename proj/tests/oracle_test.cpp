#include <doctest.h>

#include "test_support.hpp"
#include "vcsp/generators.hpp"
#include "vcsp/oracle.hpp"
#include "vcsp/cut_sparsify.hpp"
#include "vcsp/pipeline.hpp"

using namespace vcsp;

TEST_CASE("exhaustive comparison of an instance with itself is exact") {
  const VcspInstance inst =
      random_instance(10, 30, {predicates::cut(), predicates::or_()}, 0.1, 10.0, 2);
  const VerificationResult r = exhaustive_max_error(inst, inst);
  CHECK(r.max_rel_error == 0.0);
  CHECK(!r.zero_mismatch);
}

TEST_CASE("a dropped And edge shows up as a zero mismatch at {u,v}") {
  const WeightedDigraph g = random_strongly_asymmetric_digraph(6, 8, 0.5, 2.0, 21);
  const WeightedDigraph missing = test::drop_edge(g, 3);
  const VerificationResult r = exhaustive_max_error(missing, g, predicates::and_());
  // original value 0 on S = {u,v} of the dropped edge; candidate value w > 0
  CHECK(r.zero_mismatch);
  REQUIRE(r.witness.has_value());
  const Edge& e = g.edges()[3];
  CHECK(r.witness == VertexSet(6, {e.src, e.dst}));
}

TEST_CASE("a 10 percent weight perturbation is detected with its witness") {
  const WeightedDigraph g = random_digraph(8, 20, 0.5, 2.0, 30);
  const WeightedDigraph bumped = test::scale_edge(g, 5, 1.1);
  const VerificationResult r = exhaustive_max_error(g, bumped, predicates::cut());
  CHECK(r.max_rel_error > 0.0);
  REQUIRE(r.witness.has_value());
  const double at_witness_orig = predicate_value(g, predicates::cut(), *r.witness);
  const double at_witness_new = predicate_value(bumped, predicates::cut(), *r.witness);
  CHECK(std::abs(at_witness_new - at_witness_orig) / at_witness_orig ==
        doctest::Approx(r.max_rel_error));
}

TEST_CASE("enumeration refuses oversized instances") {
  CHECK_THROWS_AS(exhaustive_max_error(VcspInstance(30), VcspInstance(30)),
                  std::invalid_argument);
}

TEST_CASE("reduction identities hold on random graphs and the empty graph") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    const WeightedDigraph g = random_digraph(6, 18, 0.1, 10.0, seed);
    CHECK(!check_reduction_identities(g).has_value());
  }
  CHECK(!check_reduction_identities(WeightedDigraph(4)).has_value());

  WeightedDigraph loopy = random_digraph(5, 10, 0.1, 10.0, 4);
  loopy.add_edge(2, 2, 1.5);
  CHECK(!check_reduction_identities(loopy).has_value());
}

TEST_CASE("a corrupted mapping is reported as a violation") {
  const WeightedDigraph g = random_digraph(5, 12, 0.5, 2.0, 40);
  CHECK(!check_single_set_identity(g, predicates::uncut(), map_set_single).has_value());

  const SingleSetMap corrupted = [](Predicate, const VertexSet& s, int base_n) {
    // the "1" mapping instead of the unCut mapping
    return map_set_single(predicates::one(), s, base_n);
  };
  const auto violation = check_single_set_identity(g, predicates::uncut(), corrupted);
  REQUIRE(violation.has_value());
  CHECK(violation->p == predicates::uncut());
  CHECK(violation->lhs != doctest::Approx(violation->rhs));
}

TEST_CASE("Or2Cut identity") {
  // unit triangle, S = {0}: Cut = 2, Or = 2, degree sum = 2
  const WeightedDigraph tri = test::unit_triangle();
  const VertexSet s(3, {0});
  CHECK(predicate_value(tri, predicates::cut(), s) == doctest::Approx(2.0));
  CHECK(2.0 * predicate_value(tri, predicates::or_(), s) - 2.0 == doctest::Approx(2.0));
  CHECK(check_or2cut(tri));

  for (std::uint64_t seed : {7ull, 8ull, 9ull}) {
    WeightedDigraph g = random_digraph(9, 25, 0.1, 10.0, seed);
    if (seed == 9) g.add_edge(1, 1, 2.0);  // self-loops: degree counts twice
    CHECK(check_or2cut(g));
  }
}

TEST_CASE("the Or2Cut comparison notices a perturbed operand") {
  // The identity itself holds for every graph, so the control feeds each
  // side a different graph: a 10 percent bump must exceed the tolerance.
  const WeightedDigraph g = random_digraph(6, 12, 0.5, 2.0, 60);
  const WeightedDigraph bumped = test::scale_edge(g, 2, 1.1);
  const auto deg = g.weighted_degrees();
  const double tol = 1e-9 * std::max(1.0, g.total_weight());
  bool detected = false;
  test::for_each_subset(6, [&](const VertexSet& s) {
    double deg_sum = 0.0;
    for (int v = 0; v < 6; ++v)
      if (s.contains(v)) deg_sum += deg[static_cast<std::size_t>(v)];
    const double lhs = predicate_value(bumped, predicates::cut(), s);
    const double rhs = 2.0 * predicate_value(g, predicates::or_(), s) - deg_sum;
    if (std::abs(lhs - rhs) > tol) detected = true;
  });
  CHECK(detected);
}

TEST_CASE("the quadratic comparison notices a perturbed operand") {
  const WeightedDigraph g = random_digraph(6, 12, 0.5, 2.0, 61);
  const WeightedDigraph bumped = test::scale_edge(g, 3, 1.1);
  const double tol = 1e-9 * std::max(1.0, 4.0 * g.total_weight());
  bool detected = false;
  test::for_each_subset(6, [&](const VertexSet& s) {
    const double lhs =
        quadratic_form(bumped, QuadraticFormKind::NegatedLaplacian, sign_vector(s));
    const double rhs = 4.0 * predicate_value(g, predicates::uncut(), s);
    if (std::abs(lhs - rhs) > tol) detected = true;
  });
  CHECK(detected);
}

TEST_CASE("unCut quadratic identity") {
  const WeightedDigraph single(2, {{0, 1, 1.0}});
  CHECK(check_uncut_quadratic(single));
  for (std::uint64_t seed : {1ull, 2ull}) {
    const WeightedDigraph g = random_digraph(8, 24, 0.1, 10.0, seed);
    CHECK(check_uncut_quadratic(g));
  }
}

TEST_CASE("And completeness check") {
  const WeightedDigraph g = random_strongly_asymmetric_digraph(7, 10, 0.5, 2.0, 3);
  CHECK(!and_completeness_check(g, g).has_value());

  const auto witness = and_completeness_check(g, test::drop_edge(g, 4));
  REQUIRE(witness.has_value());
  const Edge& e = g.edges()[4];
  CHECK(*witness == VertexSet(7, {e.src, e.dst}));
  CHECK(predicate_value(test::drop_edge(g, 4), predicates::and_(), *witness) == 0.0);
  CHECK(predicate_value(g, predicates::and_(), *witness) == doctest::Approx(e.weight));

  const WeightedDigraph anti(3, {{0, 1, 1.0}, {1, 0, 1.0}});
  CHECK_THROWS_AS(and_completeness_check(anti, anti), std::invalid_argument);

  // an extra edge in the candidate is a difference too
  WeightedDigraph extra(7);
  for (const Edge& e2 : g.edges()) extra.add_edge(e2.src, e2.dst, e2.weight);
  extra.add_edge(5, 6, 1.0);
  const bool had_pair = [&] {
    for (const Edge& e3 : g.edges())
      if (e3.src == 5 && e3.dst == 6) return true;
    return false;
  }();
  if (!had_pair) CHECK(and_completeness_check(g, extra).has_value());
}
