#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "tin/error.hpp"

namespace tin {

using Vertex = int;

/// Membership bit set over the vertex ids 0..universe-1 of some graph.
///
/// Sets over different universes never compare equal. Iteration visits
/// members in ascending order.
class VertexSet {
public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {}

  VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  template <typename Range>
  static VertexSet from_range(int universe, const Range& members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (Vertex v = 0; v < universe; ++v) s.insert(v);
    return s;
  }

  int universe() const noexcept { return universe_; }

  bool contains(Vertex v) const noexcept {
    return v >= 0 && v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1u);
  }

  void insert(Vertex v) {
    check(v);
    words_[v / kWordBits] |= Word{1} << (v % kWordBits);
  }

  void erase(Vertex v) {
    check(v);
    words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
  }

  int size() const noexcept {
    int c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  bool is_subset_of(const VertexSet& other) const {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  bool intersects(const VertexSet& other) const {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  VertexSet& operator|=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
    // The set owning the smallest element of the symmetric difference sorts first.
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      Word x = a.words_[i], y = b.words_[i];
      if (x == y) continue;
      Word diff = x ^ y;
      Word low = diff & (~diff + 1);
      return (x & low) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  /// Members in ascending order.
  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      while (w) {
        int b = std::countr_zero(w);
        f(static_cast<Vertex>(i * kWordBits + b));
        w &= w - 1;
      }
    }
  }

  /// Smallest member, or -1 when empty.
  Vertex first() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<Vertex>(i * kWordBits + std::countr_zero(words_[i]));
    return -1;
  }

  const std::vector<Word>& words() const noexcept { return words_; }

  /// "{0,2,5}" with the given id offset (1 for the external 1-indexed view).
  std::string to_string(int offset = 0) const {
    std::string s = "{";
    bool first_member = true;
    for_each([&](Vertex v) {
      if (!first_member) s += ',';
      s += std::to_string(v + offset);
      first_member = false;
    });
    return s + "}";
  }

private:
  static std::size_t word_count(int universe) {
    if (universe < 0) throw InvalidInput("negative vertex-set universe");
    return (static_cast<std::size_t>(universe) + kWordBits - 1) / kWordBits;
  }

  void check(Vertex v) const {
    if (v < 0 || v >= universe_)
      throw InvalidInput("vertex " + std::to_string(v) + " outside universe of size " +
                         std::to_string(universe_));
  }

  void same_universe(const VertexSet& o) const {
    if (o.universe_ != universe_) throw InvalidInput("vertex sets over different universes");
  }

  int universe_ = 0;
  std::vector<Word> words_;
};

} // namespace tin
