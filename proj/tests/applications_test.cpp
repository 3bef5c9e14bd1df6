#include <doctest.h>

#include "test_support.hpp"
#include "vcsp/applications.hpp"
#include "vcsp/generators.hpp"
#include "vcsp/instance.hpp"

using namespace vcsp;

TEST_CASE("2SAT clauses map to the four clause predicates") {
  const TwoSatFormula f{2, {{1, 2, 1.0}, {-1, 2, 2.0}, {-1, -2, 3.0}, {1, -2, 4.0}}};
  const VcspInstance inst = encode_2sat(f);
  REQUIRE(inst.num_constraints() == 4);
  CHECK(inst.constraints()[0] == Constraint{0, 1, predicates::or_(), 1.0});
  CHECK(inst.constraints()[1] == Constraint{0, 1, predicates::n10(), 2.0});
  CHECK(inst.constraints()[2] == Constraint{0, 1, predicates::n_and(), 3.0});
  CHECK(inst.constraints()[3] == Constraint{0, 1, predicates::n01(), 4.0});

  // all-true assignment satisfies every positive clause
  const TwoSatFormula pos{3, {{1, 2, 1.0}, {2, 3, 2.0}, {1, 3, 4.0}}};
  CHECK(two_sat_value(pos, VertexSet(3, {0, 1, 2})) == doctest::Approx(7.0));
}

TEST_CASE("2SAT encoding agrees with direct clause evaluation") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    const TwoSatFormula f = random_2sat(8, 40, 0.1, 10.0, seed);
    const VcspInstance inst = encode_2sat(f);
    test::for_each_subset(8, [&](const VertexSet& a) {
      CHECK(two_sat_value(f, a) == doctest::Approx(value(inst, a)).epsilon(1e-12));
    });
  }
  // degenerate clauses on one variable, including a tautology
  const TwoSatFormula weird{1, {{1, 1, 2.0}, {-1, -1, 3.0}, {1, -1, 5.0}}};
  const VcspInstance inst = encode_2sat(weird);
  test::for_each_subset(1, [&](const VertexSet& a) {
    CHECK(two_sat_value(weird, a) == doctest::Approx(value(inst, a)));
  });
}

TEST_CASE("2SAT decode inverts encode") {
  const TwoSatFormula f = random_2sat(6, 20, 0.1, 10.0, 4);
  CHECK(decode_2sat(encode_2sat(f)) == f);
  CHECK_THROWS_AS(decode_2sat(VcspInstance(2, {{0, 1, predicates::cut(), 1.0}})),
                  std::invalid_argument);
}

TEST_CASE("2LIN encoding: Cut for rhs 1, unCut for rhs 0") {
  const TwoLinSystem sys{2, {{0, 1, 1, 3.0}, {0, 1, 0, 2.0}}};
  const VcspInstance inst = encode_2lin(sys);
  REQUIRE(inst.num_constraints() == 2);
  CHECK(inst.constraints()[0] == Constraint{0, 1, predicates::cut(), 3.0});
  CHECK(inst.constraints()[1] == Constraint{0, 1, predicates::uncut(), 2.0});

  CHECK(two_lin_value(sys, VertexSet(2)) == doctest::Approx(2.0));  // 0+0=0 satisfied

  for (std::uint64_t seed : {5ull, 6ull}) {
    const TwoLinSystem rand_sys = random_2lin(8, 40, 0.1, 10.0, seed);
    const VcspInstance encoded = encode_2lin(rand_sys);
    test::for_each_subset(8, [&](const VertexSet& a) {
      CHECK(two_lin_value(rand_sys, a) == doctest::Approx(value(encoded, a)).epsilon(1e-12));
    });
  }
  CHECK(decode_2lin(encode_2lin(sys)) == sys);
}

TEST_CASE("k-cut value and the double-counting identity") {
  CHECK(k_cut_value(test::unit_triangle(), {0, 1, 2}, 3) == doctest::Approx(3.0));
  CHECK(k_cut_value(test::unit_triangle(), {0, 0, 0}, 1) == 0.0);

  const WeightedDigraph g = random_digraph(6, 20, 0.1, 10.0, 8);
  std::vector<int> labels(6, 0);
  // k = 2 coincides with the Cut predicate on block 0's complement
  test::for_each_subset(6, [&](const VertexSet& s) {
    for (int v = 0; v < 6; ++v) labels[static_cast<std::size_t>(v)] = s.contains(v) ? 0 : 1;
    CHECK(k_cut_value(g, labels, 2) ==
          doctest::Approx(predicate_value(g, predicates::cut(), s)).epsilon(1e-12));
  });

  // exhaustive double counting for k = 3
  const int k = 3;
  for (std::uint64_t code = 0; code < 729; ++code) {  // 3^6 labelings
    std::uint64_t c = code;
    for (int v = 0; v < 6; ++v, c /= 3) labels[static_cast<std::size_t>(v)] = static_cast<int>(c % 3);
    double one_vs_rest = 0.0;
    for (int a = 0; a < k; ++a)
      one_vs_rest += predicate_value(g, predicates::cut(), partition_block(labels, a));
    CHECK(k_cut_value(g, labels, k) == doctest::Approx(0.5 * one_vs_rest).epsilon(1e-12));
  }

  CHECK_THROWS_AS(k_cut_value(g, {0, 1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(k_cut_value(g, {0, 1, 2, 0, 1, 5}, 3), std::invalid_argument);
}

TEST_CASE("sum witness satisfies its congruences") {
  CHECK(sum_mod_k_witness(3, 0) == std::array<int, 3>{0, 0, 1});
  for (int k = 3; k <= 12; ++k)
    for (int a = 0; a < k; ++a) {
      const auto [x, y, z] = sum_mod_k_witness(k, a);
      CHECK((x + y) % k == a);
      CHECK((z + x) % k != a);
      CHECK((z + y) % k != a);
      CHECK((2 * z) % k != a);
    }
  CHECK_THROWS_AS(sum_mod_k_witness(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(sum_mod_k_witness(4, 4), std::invalid_argument);
}

TEST_CASE("dropping any edge collapses the Sum_a value") {
  const WeightedDigraph path(3, {{0, 1, 2.5}, {1, 2, 4.0}});
  const std::vector<int> assign = demonstrate_sum_nonsparsifiable(path, 0, 3, 0);
  CHECK(assign == std::vector<int>{0, 0, 1});
  CHECK(sum_mod_k_value(path, assign, 3, 0) == doctest::Approx(2.5));
  CHECK(sum_mod_k_value(test::drop_edge(path, 0), assign, 3, 0) == 0.0);

  const WeightedDigraph single(2, {{0, 1, 1.0}});
  const auto a1 = demonstrate_sum_nonsparsifiable(single, 0, 3, 0);
  CHECK(sum_mod_k_value(single, a1, 3, 0) == doctest::Approx(1.0));
  CHECK(sum_mod_k_value(test::drop_edge(single, 0), a1, 3, 0) == 0.0);

  const WeightedDigraph g = random_strongly_asymmetric_digraph(5, 7, 0.5, 2.0, 77);
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    for (int k = 3; k <= 5; ++k)
      for (int a = 0; a < k; ++a) {
        const auto assign_i = demonstrate_sum_nonsparsifiable(g, i, k, a);
        CHECK(sum_mod_k_value(g, assign_i, k, a) == doctest::Approx(g.edges()[i].weight));
        CHECK(sum_mod_k_value(test::drop_edge(g, i), assign_i, k, a) == 0.0);
      }
  }

  CHECK_THROWS_AS(demonstrate_sum_nonsparsifiable(path, 5, 3, 0), std::out_of_range);
  CHECK_THROWS_AS(demonstrate_sum_nonsparsifiable(path, 0, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(
      demonstrate_sum_nonsparsifiable(WeightedDigraph(1, {{0, 0, 1.0}}), 0, 3, 0),
      std::invalid_argument);
}
