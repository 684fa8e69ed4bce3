#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

namespace grouplab {

// Index of an element in its group's canonical (sorted) element list.
using Elem = std::uint32_t;

// Fixed-universe bitset over element indices.  Iteration visits indices in
// increasing order, so the canonical element order carries over to subsets.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return universe_; }

  bool test(Elem i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(Elem i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(Elem i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool empty() const {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        f(static_cast<Elem>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Elem> to_vector() const {
    std::vector<Elem> out;
    out.reserve(count());
    for_each([&](Elem e) { out.push_back(e); });
    return out;
  }

  std::size_t hash() const {
    std::size_t h = universe_;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  // Lexicographic order of the sorted index lists, for sets of equal size:
  // the set owning the smallest index of the symmetric difference comes first.
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
    if (a.universe_ != b.universe_) return a.universe_ <=> b.universe_;
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      const std::uint64_t diff = a.words_[i] ^ b.words_[i];
      if (diff) {
        const std::uint64_t low = diff & (~diff + 1);
        return (a.words_[i] & low) ? std::strong_ordering::less : std::strong_ordering::greater;
      }
    }
    return std::strong_ordering::equal;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace grouplab
