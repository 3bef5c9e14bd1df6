#include <doctest.h>

#include "test_support.hpp"
#include "vcsp/generators.hpp"
#include "vcsp/instance.hpp"

using namespace vcsp;

TEST_CASE("instance construction normalizes and validates") {
  VcspInstance a(2, {{0, 1, predicates::cut(), 1.0}});
  CHECK(a.num_constraints() == 1);

  VcspInstance b(2, {{0, 1, predicates::or_(), 0.0}});
  CHECK(b.num_constraints() == 0);

  CHECK_THROWS_AS(VcspInstance(1, {{0, 2, predicates::cut(), 1.0}}), std::out_of_range);
  CHECK_THROWS_AS(VcspInstance(2, {{0, 1, predicates::cut(), -2.0}}), std::invalid_argument);
  CHECK_THROWS_AS(VcspInstance(2, {{0, 1, predicates::cut(), std::nan("")}}),
                  std::invalid_argument);
}

TEST_CASE("value sums satisfied constraint weights") {
  const VcspInstance and5(2, {{0, 1, predicates::and_(), 5.0}});
  CHECK(value(and5, VertexSet(2, {0, 1})) == doctest::Approx(5.0));
  CHECK(value(and5, VertexSet(2, {0})) == 0.0);

  const VcspInstance mixed(3, {{0, 1, predicates::cut(), 1.0}, {1, 2, predicates::uncut(), 2.0}});
  CHECK(value(mixed, VertexSet(3, {1, 2})) == doctest::Approx(3.0));
}

TEST_CASE("to_digraph mirrors constraints as edges") {
  const VcspInstance single(2, {{0, 1, predicates::cut(), 2.0}});
  const WeightedDigraph g = to_digraph(single, predicates::cut());
  REQUIRE(g.num_edges() == 1);
  CHECK(g.edges()[0] == Edge{0, 1, 2.0});

  const VcspInstance parallel(
      2, {{0, 1, predicates::or_(), 1.0}, {0, 1, predicates::or_(), 3.0}});
  CHECK(to_digraph(parallel, predicates::or_()).num_edges() == 2);

  const VcspInstance mixed(2, {{0, 1, predicates::cut(), 1.0}, {0, 1, predicates::or_(), 1.0}});
  CHECK_THROWS_AS(to_digraph(mixed, predicates::cut()), std::invalid_argument);
}

TEST_CASE("partition splits by predicate and preserves everything") {
  const VcspInstance inst(3, {{0, 1, predicates::cut(), 1.0}, {1, 2, predicates::or_(), 2.0}});
  const auto parts = partition_by_predicate(inst);
  REQUIRE(parts.size() == 2);
  CHECK(parts.at(predicates::cut()).num_constraints() == 1);
  CHECK(parts.at(predicates::or_()).num_constraints() == 1);

  CHECK(partition_by_predicate(VcspInstance(4)).empty());

  const VcspInstance random = random_instance(
      8, 40, {predicates::cut(), predicates::and_(), predicates::n10()}, 0.1, 10.0, 7);
  std::size_t count = 0;
  double weight = 0.0;
  for (const auto& [p, sub] : partition_by_predicate(random)) {
    count += sub.num_constraints();
    weight += sub.total_weight();
    for (const Constraint& c : sub.constraints()) CHECK(c.p == p);
  }
  CHECK(count == random.num_constraints());
  CHECK(weight == doctest::Approx(random.total_weight()));
}

TEST_CASE("single-predicate instances and digraphs give the same values") {
  // Assignment A corresponds to the member set S_A = {u | A(u) = 1}.
  for (Predicate p : Predicate::all()) {
    const VcspInstance inst = random_instance(6, 15, {p}, 0.1, 10.0, 11 + p.table());
    const WeightedDigraph g = to_digraph(inst, p);
    test::for_each_subset(6, [&](const VertexSet& assignment) {
      CHECK(value(inst, assignment) == doctest::Approx(predicate_value(g, p, assignment)));
    });
  }
}
