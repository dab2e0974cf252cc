#include "unifac/squares.hpp"

namespace unifac::forms {

namespace {

// least_root[y] = least b with b*b = y, or q if y is not a square
std::vector<uint32_t> root_table(const gf::FiniteField& f, bool nonzero_only) {
  std::vector<uint32_t> root(f.q, f.q);
  for (uint32_t b = nonzero_only ? 1 : 0; b < f.q; ++b) {
    uint32_t y = f.mul(b, b);
    if (root[y] == f.q) root[y] = b;
  }
  return root;
}

}  // namespace

std::array<uint32_t, 4> four_squares(const gf::FiniteField& f, uint32_t lam) {
  require(f.p > 3, Err::degree_too_large, "four-squares needs characteristic > 3");
  auto root = root_table(f, true);
  for (uint32_t b1 = 1; b1 < f.q; ++b1) {
    uint32_t s1 = f.sub(lam, f.mul(b1, b1));
    for (uint32_t b2 = 1; b2 < f.q; ++b2) {
      uint32_t s2 = f.sub(s1, f.mul(b2, b2));
      for (uint32_t b3 = 1; b3 < f.q; ++b3) {
        uint32_t rest = f.sub(s2, f.mul(b3, b3));
        if (rest == 0) continue;  // b4 must be nonzero
        uint32_t b4 = root[rest];
        if (b4 != f.q) return {b1, b2, b3, b4};
      }
    }
  }
  fail(Err::search_exhausted, "no nonzero four-square representation");
}

std::array<uint32_t, 2> two_squares(const gf::FiniteField& f, uint32_t lam) {
  auto root = root_table(f, false);
  for (uint32_t a = 0; a < f.q; ++a) {
    uint32_t rest = f.sub(lam, f.mul(a, a));
    uint32_t b = root[rest];
    if (b != f.q) return {a, b};
  }
  fail(Err::search_exhausted, "no two-square representation");  // cannot happen
}

}  // namespace unifac::forms
