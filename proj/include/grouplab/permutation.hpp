#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "grouplab/errors.hpp"

namespace grouplab {

using Point = std::uint32_t;

// A bijection of {0, ..., degree-1}, stored as its image array.
//
// Products act on the right: (a * b)(i) = b(a(i)), i.e. "apply a, then b".
// The ordering is lexicographic on the image arrays, which fixes the
// canonical element order of every group.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point x : images_) {
      if (x >= images_.size() || seen[x]) {
        throw BadPermutation("image array is not a bijection: " + to_string());
      }
      seen[x] = true;
    }
  }

  static Permutation identity(std::size_t degree) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    return Permutation(unchecked{}, std::move(images));
  }

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  Permutation inverse() const {
    std::vector<Point> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
    return Permutation(unchecked{}, std::move(inv));
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw BadPermutation("degree mismatch in product");
    std::vector<Point> out(a.degree());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = b.images_[a.images_[i]];
    return Permutation(unchecked{}, std::move(out));
  }

  // Order as a group element: lcm of the cycle lengths.
  std::uint64_t order() const {
    std::vector<bool> seen(images_.size(), false);
    std::uint64_t result = 1;
    for (std::size_t start = 0; start < images_.size(); ++start) {
      if (seen[start]) continue;
      std::uint64_t len = 0;
      for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) {
        seen[x] = true;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  // Cycle notation with 0-based points, e.g. "(0 1 2)(3 4)"; "()" for identity.
  std::string to_cycle_string() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start) {
      if (seen[start] || images_[start] == start) continue;
      out += '(';
      Point x = static_cast<Point>(start);
      bool first = true;
      while (!seen[x]) {
        seen[x] = true;
        if (!first) out += ' ';
        out += std::to_string(x);
        first = false;
        x = images_[x];
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(images_[i]);
    }
    return out + "]";
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct unchecked {};
  Permutation(unchecked, std::vector<Point> images) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

inline Permutation compose(const Permutation& a, const Permutation& b) { return a * b; }

}  // namespace grouplab
