#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace sring {

/// Canonical element index inside a FiniteRing.
using Elem = std::uint32_t;

/**
 * Fixed-universe membership bitset over element indices 0..universe-1.
 *
 * Used for ideals, multiplicative sets and every other subset of a finite
 * ring. Ordering is (cardinality, then sorted member list lexicographically),
 * which is the canonical order for enumerated ideals.
 */
class ElementSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Elem>(i));
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(Elem e) const {
    return (words_[e / kWordBits] >> (e % kWordBits)) & Word{1};
  }
  void insert(Elem e) { words_[e / kWordBits] |= Word{1} << (e % kWordBits); }
  void erase(Elem e) { words_[e / kWordBits] &= ~(Word{1} << (e % kWordBits)); }

  std::size_t size() const {
    std::size_t n = 0;
    for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Smallest member, or universe() when empty.
  Elem first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0)
        return static_cast<Elem>(i * kWordBits + std::countr_zero(words_[i]));
    return static_cast<Elem>(universe_);
  }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }
  bool intersects(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & other.words_[i]) != 0) return true;
    return false;
  }

  ElementSet& operator&=(const ElementSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  ElementSet& operator-=(const ElementSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

  /// Members in increasing index order.
  std::vector<Elem> members() const {
    std::vector<Elem> out;
    out.reserve(size());
    for_each([&](Elem e) { out.push_back(e); });
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      while (w != 0) {
        const int bit = std::countr_zero(w);
        f(static_cast<Elem>(i * kWordBits + static_cast<std::size_t>(bit)));
        w &= w - 1;
      }
    }
  }

  std::size_t hash() const {
    std::size_t h = universe_;
    for (Word w : words_) h = h * 0x9e3779b97f4a7c15ULL ^ std::hash<Word>{}(w);
    return h;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    // Equal cardinality: the set with the smaller first differing member sorts
    // first when member lists are compared lexicographically.
    for (std::size_t i = 0; i < a.words_.size() && i < b.words_.size(); ++i) {
      const Word diff = a.words_[i] ^ b.words_[i];
      if (diff == 0) continue;
      const Word low = diff & (~diff + 1);
      return (a.words_[i] & low) != 0 ? std::strong_ordering::less
                                      : std::strong_ordering::greater;
    }
    return a.universe_ <=> b.universe_;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace sring
