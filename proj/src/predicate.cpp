#include "vcsp/predicate.hpp"

#include <stdexcept>

namespace vcsp {

namespace {
// Table order: index i is the predicate whose truth table encodes i.
constexpr std::array<std::string_view, 16> kNames = {
    "0",   "nOr",   "01",  "0x", "Dicut", "x0", "Cut", "nAnd",
    "And", "unCut", "x1",  "n10", "1x",   "n01", "Or",  "1",
};
}  // namespace

Predicate Predicate::from_table(int table) {
  if (table < 0 || table >= 16) throw std::out_of_range("predicate table value outside [0,16)");
  return Predicate(table);
}

std::optional<Predicate> Predicate::from_name(std::string_view name) {
  for (int t = 0; t < 16; ++t)
    if (kNames[static_cast<std::size_t>(t)] == name) return Predicate(t);
  return std::nullopt;
}

const std::array<Predicate, 16>& Predicate::all() {
  static const std::array<Predicate, 16> kAll = [] {
    std::array<Predicate, 16> a{};
    for (int t = 0; t < 16; ++t) a[static_cast<std::size_t>(t)] = Predicate(t);
    return a;
  }();
  return kAll;
}

std::string_view Predicate::name() const { return kNames[static_cast<std::size_t>(table_)]; }

bool Predicate::single_variable() const {
  switch (table_) {
    case 0b0000:   // "0"
    case 0b1111:   // "1"
    case 0b0011:   // "0x"
    case 0b1100:   // "1x"
    case 0b0101:   // "x0"
    case 0b1010:   // "x1"
      return true;
    default:
      return false;
  }
}

namespace predicates {
Predicate zero() { return Predicate::from_table(0); }
Predicate n_or() { return Predicate::from_table(1); }
Predicate only01() { return Predicate::from_table(2); }
Predicate fst0() { return Predicate::from_table(3); }
Predicate dicut() { return Predicate::from_table(4); }
Predicate snd0() { return Predicate::from_table(5); }
Predicate cut() { return Predicate::from_table(6); }
Predicate n_and() { return Predicate::from_table(7); }
Predicate and_() { return Predicate::from_table(8); }
Predicate uncut() { return Predicate::from_table(9); }
Predicate snd1() { return Predicate::from_table(10); }
Predicate n10() { return Predicate::from_table(11); }
Predicate fst1() { return Predicate::from_table(12); }
Predicate n01() { return Predicate::from_table(13); }
Predicate or_() { return Predicate::from_table(14); }
Predicate one() { return Predicate::from_table(15); }
}  // namespace predicates

SparsifiabilityClass classify(Predicate p) {
  if (p.satisfying_count() == 1) return SparsifiabilityClass::NonSparsifiable;
  if (p.single_variable()) return SparsifiabilityClass::SparsifiableTrivial;
  return SparsifiabilityClass::SparsifiableNontrivial;
}

std::string_view to_string(SparsifiabilityClass c) {
  switch (c) {
    case SparsifiabilityClass::SparsifiableNontrivial: return "SparsifiableNontrivial";
    case SparsifiabilityClass::SparsifiableTrivial: return "SparsifiableTrivial";
    case SparsifiabilityClass::NonSparsifiable: return "NonSparsifiable";
  }
  return "?";
}

}  // namespace vcsp
