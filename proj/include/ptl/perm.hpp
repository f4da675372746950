#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ptl {

/// Permutation of {0..n-1} as an image array: img[i] is the image of i.
///
/// Composition convention, used everywhere in this codebase:
///   compose(a, b) applies a first, then b:  compose(a,b)(x) = b(a(x)).
struct Perm {
  std::vector<std::uint32_t> img;

  Perm() = default;
  explicit Perm(std::size_t n) : img(n) {
    for (std::size_t i = 0; i < n; ++i) img[i] = std::uint32_t(i);
  }
  explicit Perm(std::vector<std::uint32_t> images) : img(std::move(images)) {}

  std::size_t degree() const { return img.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return img[x]; }
  bool is_identity() const {
    for (std::size_t i = 0; i < img.size(); ++i)
      if (img[i] != i) return false;
    return true;
  }
  bool operator==(const Perm& o) const { return img == o.img; }
};

Perm compose(const Perm& a, const Perm& b);  // a then b
Perm inverse(const Perm& a);
int sign(const Perm& a);  // +1 or -1
/// Sorted multiset of cycle lengths (fixed points included as 1s).
std::vector<std::size_t> cycle_type(const Perm& a);
std::vector<std::uint32_t> fixed_points(const Perm& a);
bool is_valid_perm(const std::vector<std::uint32_t>& img);

/// Disjoint cycle notation, e.g. "(0 3 5)(1 2)"; identity prints as "()".
std::string format_cycles(const Perm& a);
/// Accepts cycle notation or an image array "[3,2,1,0,...]".
Perm parse_perm(const std::string& text, std::size_t degree);

}  // namespace ptl
