#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "unifac/errors.hpp"

namespace unifac::perm {

/// Bijection of {0..n-1}. Composition is (a*b)(x) = a(b(x)), i.e. b acts first;
/// this is the left-action convention, and all factorization words in this
/// library multiply out letter[0] * letter[1] * ... under it.
/// Cycle notation at the text boundary is 1-indexed, points are 0-indexed
/// internally.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(uint32_t n) : img_(n) {
    for (uint32_t i = 0; i < n; ++i) img_[i] = i;
  }
  explicit Permutation(std::vector<uint32_t> images);

  static Permutation identity(uint32_t n) { return Permutation(n); }
  /// Product of disjoint transpositions (a0 b0)(a1 b1)..., 0-indexed points.
  static Permutation from_transpositions(uint32_t n,
                                         const std::vector<std::pair<uint32_t, uint32_t>>& ts);

  uint32_t degree() const { return static_cast<uint32_t>(img_.size()); }
  uint32_t operator()(uint32_t x) const { return img_[x]; }
  const std::vector<uint32_t>& images() const { return img_; }

  Permutation inverse() const;
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.img_ == b.img_;
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.img_ < b.img_;
  }

  bool is_identity() const;
  bool even() const;                              // parity
  std::map<uint32_t, uint32_t> cycle_type() const;  // length -> count
  /// Fixed-point-free involution that is a product of n/2 disjoint transpositions.
  bool is_fpf_involution() const;

  std::string str() const;  // cycle notation, identity prints as "()"

  /// Lehmer rank; requires degree <= 20.
  uint64_t rank() const;
  static Permutation unrank(uint32_t n, uint64_t r);

private:
  std::vector<uint32_t> img_;
};

Permutation parse_cycles(const std::string& text, uint32_t degree);

/// Orbits of the group generated by `gens` on {0..n-1}, each sorted,
/// ordered by least element.
std::vector<std::vector<uint32_t>> orbit_decomposition(
    const std::vector<Permutation>& gens, uint32_t n);

}  // namespace unifac::perm
