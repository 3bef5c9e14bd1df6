#include <doctest.h>

#include <set>
#include <stdexcept>

#include "vcsp/predicate.hpp"

using namespace vcsp;

TEST_CASE("truth tables follow the canonical column order") {
  CHECK(Predicate::from_truth_table(0, 1, 1, 0) == predicates::cut());
  CHECK(Predicate::from_truth_table(0, 0, 0, 0) == predicates::zero());
  CHECK(Predicate::from_truth_table(0, 0, 1, 0) == predicates::dicut());
  CHECK(Predicate::from_truth_table(1, 1, 1, 1) == predicates::one());
  CHECK(Predicate::from_truth_table(1, 0, 0, 1) == predicates::uncut());

  const char* expected[16] = {"0",   "nOr",   "01", "0x",  "Dicut", "x0",  "Cut", "nAnd",
                              "And", "unCut", "x1", "n10", "1x",    "n01", "Or",  "1"};
  for (int t = 0; t < 16; ++t) {
    const Predicate p = Predicate::from_table(t);
    CHECK(p.name() == expected[t]);
    CHECK(p.table() == t);
    CHECK(Predicate::from_name(expected[t]) == p);
  }
  CHECK(!Predicate::from_name("Foo").has_value());
  CHECK_THROWS_AS(Predicate::from_table(16), std::out_of_range);
  CHECK_THROWS_AS(Predicate::from_table(-1), std::out_of_range);
}

TEST_CASE("evaluate reads the table bit at 2x + y") {
  CHECK(predicates::cut().evaluate(1, 0) == 1);
  CHECK(predicates::and_().evaluate(1, 0) == 0);
  for (bool x : {false, true}) CHECK(predicates::uncut().evaluate(x, x) == 1);

  for (Predicate p : Predicate::all())
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        CHECK(p.evaluate(x, y) == ((p.table() >> (2 * x + y)) & 1));
}

TEST_CASE("from_truth_table is the inverse of reading the table") {
  for (Predicate p : Predicate::all()) {
    const Predicate back = Predicate::from_truth_table(p.evaluate(0, 0), p.evaluate(0, 1),
                                                       p.evaluate(1, 0), p.evaluate(1, 1));
    CHECK(back == p);
  }
}

TEST_CASE("classification dichotomy") {
  CHECK(classify(predicates::cut()) == SparsifiabilityClass::SparsifiableNontrivial);
  CHECK(classify(predicates::dicut()) == SparsifiabilityClass::NonSparsifiable);
  CHECK(classify(predicates::one()) == SparsifiabilityClass::SparsifiableTrivial);

  std::set<std::string_view> non_sparsifiable, trivial, nontrivial;
  for (Predicate p : Predicate::all()) {
    switch (classify(p)) {
      case SparsifiabilityClass::NonSparsifiable:
        CHECK(p.satisfying_count() == 1);
        non_sparsifiable.insert(p.name());
        break;
      case SparsifiabilityClass::SparsifiableTrivial:
        trivial.insert(p.name());
        break;
      case SparsifiabilityClass::SparsifiableNontrivial:
        CHECK(p.satisfying_count() != 1);
        nontrivial.insert(p.name());
        break;
    }
  }
  CHECK(non_sparsifiable == std::set<std::string_view>{"nOr", "01", "Dicut", "And"});
  CHECK(trivial == std::set<std::string_view>{"0", "1", "0x", "x0", "x1", "1x"});
  CHECK(nontrivial == std::set<std::string_view>{"Cut", "nAnd", "unCut", "n10", "n01", "Or"});
}
