#pragma once

#include <array>
#include <bit>
#include <compare>
#include <optional>
#include <string_view>

namespace vcsp {

// One of the 16 boolean functions of two boolean inputs, stored as a 4-bit
// truth table. Bit index 2*x + y holds the value at input (x, y), so the
// input order is (0,0), (0,1), (1,0), (1,1) and the table value itself is a
// canonical id in [0,16).
class Predicate {
 public:
  Predicate() = default;  // the all-zero predicate

  static Predicate from_truth_table(bool f00, bool f01, bool f10, bool f11) {
    return Predicate((f00 ? 1 : 0) | (f01 ? 2 : 0) | (f10 ? 4 : 0) | (f11 ? 8 : 0));
  }

  // table must be in [0,16); throws std::out_of_range otherwise.
  static Predicate from_table(int table);

  // Resolves one of the 16 canonical names ("Cut", "nAnd", "n10", ...).
  static std::optional<Predicate> from_name(std::string_view name);

  // All 16 predicates in table order.
  static const std::array<Predicate, 16>& all();

  int table() const { return table_; }

  bool evaluate(bool x, bool y) const { return (table_ >> (2 * (x ? 1 : 0) + (y ? 1 : 0))) & 1; }

  // Number of satisfying inputs.
  int satisfying_count() const { return std::popcount(static_cast<unsigned>(table_)); }

  std::string_view name() const;

  // True when the value depends on neither or only one of the two inputs
  // (the constants and the four single-variable predicates).
  bool single_variable() const;

  auto operator<=>(const Predicate&) const = default;

 private:
  explicit Predicate(int table) : table_(table) {}
  int table_ = 0;
};

// The canonical 16 predicates, named for convenience in code and tests.
namespace predicates {
Predicate zero();    // "0"
Predicate n_or();    // "nOr"
Predicate only01();  // "01"
Predicate fst0();    // "0x"
Predicate dicut();   // "Dicut"
Predicate snd0();    // "x0"
Predicate cut();     // "Cut"
Predicate n_and();   // "nAnd"
Predicate and_();    // "And"
Predicate uncut();   // "unCut"
Predicate snd1();    // "x1"
Predicate n10();     // "n10"
Predicate fst1();    // "1x"
Predicate n01();     // "n01"
Predicate or_();     // "Or"
Predicate one();     // "1"
}  // namespace predicates

enum class SparsifiabilityClass {
  SparsifiableNontrivial,  // needs the double-cover reduction
  SparsifiableTrivial,     // exact sparsifier with at most n edges
  NonSparsifiable,         // every sparsifier must keep every constraint
};

// A predicate resists sparsification exactly when its truth table has a
// single satisfying input; the constants and single-variable predicates
// sparsify exactly; everything else reduces to cut sparsification.
SparsifiabilityClass classify(Predicate p);

std::string_view to_string(SparsifiabilityClass c);

}  // namespace vcsp
