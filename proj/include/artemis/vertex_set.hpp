#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "artemis/kernels.hpp"

namespace artemis {

/// Dense bit-indexed subset of {0, ..., universe-1}. Bulk operations go
/// through the dispatched word kernels.
class VertexSet {
 public:
  using Word = kernels::Word;
  static constexpr int kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_(static_cast<std::size_t>((universe + kWordBits - 1) / kWordBits), 0) {}

  VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
    for (int v : members) insert(v);
  }

  static VertexSet of(int universe, std::span<const int> members) {
    VertexSet s(universe);
    for (int v : members) s.insert(v);
    return s;
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.insert(v);
    return s;
  }

  int universe() const { return universe_; }

  bool contains(int v) const { return (words_[word(v)] >> bit(v)) & 1U; }
  void insert(int v) { words_[word(v)] |= Word{1} << bit(v); }
  void erase(int v) { words_[word(v)] &= ~(Word{1} << bit(v)); }

  std::size_t size() const { return kernels::active().count(words_); }
  bool empty() const {
    for (Word w : words_)
      if (w) return false;
    return true;
  }
  void clear() { std::fill(words_.begin(), words_.end(), Word{0}); }

  /// Smallest member >= from, or -1.
  int next(int from) const {
    if (from >= universe_) return -1;
    std::size_t wi = word(from);
    Word w = words_[wi] & (~Word{0} << bit(from));
    while (true) {
      if (w) return static_cast<int>(wi) * kWordBits + std::countr_zero(w);
      if (++wi >= words_.size()) return -1;
      w = words_[wi];
    }
  }
  int first() const { return next(0); }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w) {
        f(static_cast<int>(wi) * kWordBits + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  VertexSet& operator&=(const VertexSet& o) {
    kernels::active().and_into(words_, o.words_);
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    kernels::active().or_into(words_, o.words_);
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    kernels::active().andnot_into(words_, o.words_);
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool is_subset_of(const VertexSet& o) const { return kernels::active().is_subset(words_, o.words_); }
  bool intersects(const VertexSet& o) const { return kernels::active().intersects(words_, o.words_); }
  std::size_t intersection_size(const VertexSet& o) const { return kernels::active().and_count(words_, o.words_); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

 private:
  static std::size_t word(int v) { return static_cast<std::size_t>(v) / kWordBits; }
  static unsigned bit(int v) { return static_cast<unsigned>(v) % kWordBits; }

  int universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace artemis
