#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace vcsp {

// A subset of the vertex universe [0, universe). Doubles as a boolean
// assignment: v is assigned 1 exactly when it is a member.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(int universe) : universe_(check_universe(universe)) {
    words_.assign(word_count(universe_), 0);
  }

  VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
    for (int v : members) insert(v);
  }

  // Interprets the low `universe` bits of `mask` as memberships. universe <= 64.
  static VertexSet from_mask(int universe, std::uint64_t mask) {
    VertexSet s(universe);
    s.assign_mask(mask);
    return s;
  }

  int universe() const { return universe_; }

  bool contains(int v) const {
    return v >= 0 && v < universe_ && (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63) & 1);
  }

  void insert(int v) {
    check_member(v);
    words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void erase(int v) {
    check_member(v);
    words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  void assign_mask(std::uint64_t mask) {
    if (universe_ > 64) throw std::invalid_argument("assign_mask requires universe <= 64");
    if (!words_.empty()) words_[0] = universe_ == 64 ? mask : (mask & ((std::uint64_t{1} << universe_) - 1));
  }

  VertexSet complement() const {
    VertexSet s(*this);
    for (auto& w : s.words_) w = ~w;
    s.trim();
    return s;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const { return count() == 0; }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (int v = 0; v < universe_; ++v)
      if (contains(v)) out.push_back(v);
    return out;
  }

  VertexSet& operator|=(const VertexSet& other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

  bool operator==(const VertexSet&) const = default;

 private:
  static int check_universe(int universe) {
    if (universe < 0) throw std::invalid_argument("negative vertex universe");
    return universe;
  }

  void check_member(int v) const {
    if (v < 0 || v >= universe_) throw std::out_of_range("vertex outside universe");
  }

  void check_same_universe(const VertexSet& other) const {
    if (universe_ != other.universe_) throw std::invalid_argument("vertex universe mismatch");
  }

  static std::size_t word_count(int universe) {
    return (static_cast<std::size_t>(universe) + 63) / 64;
  }

  void trim() {
    if (universe_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace vcsp
