#include "unifac/generic_sequence.hpp"

#include <algorithm>
#include <set>

namespace unifac::perm {

namespace {

Permutation xor_translation(uint32_t m, uint32_t mask) {
  const uint32_t n = 1u << m;
  std::vector<uint32_t> img(n);
  for (uint32_t x = 0; x < n; ++x) img[x] = x ^ mask;
  return Permutation(std::move(img));
}

}  // namespace

GenericSequence generic_sequence(uint32_t m, uint32_t t) {
  require(m >= 3, Err::degree_too_large, "need m >= 3");
  require(m <= 20, Err::cap_exceeded, "degree 2^m beyond desk scale");
  GenericSequence s;
  s.m = m;
  for (uint32_t i = 0; i <= t; ++i) {
    uint32_t bit = std::min(i, m - 1);
    s.elements.push_back(xor_translation(m, 1u << bit));
  }
  return s;
}

std::vector<Permutation> generated_elementary_abelian(const std::vector<Permutation>& seq) {
  require(!seq.empty(), Err::degree_mismatch, "empty sequence");
  const uint32_t n = seq[0].degree();
  std::set<Permutation> closure = {Permutation(n)};
  for (const auto& g : seq) {
    std::vector<Permutation> snapshot(closure.begin(), closure.end());
    for (const auto& h : snapshot) closure.insert(g * h);
  }
  std::vector<Permutation> out(closure.begin(), closure.end());
  // identity is image-lexicographically least, so it is already first
  return out;
}

bool is_generic(const std::vector<Permutation>& seq, uint32_t m) {
  if (seq.empty()) return false;
  const uint32_t n = 1u << m;
  const uint32_t t = static_cast<uint32_t>(seq.size()) - 1;
  for (const auto& g : seq)
    if (g.degree() != n || !g.even()) return false;

  if (t >= m) {
    for (uint32_t ell = m - 1; ell <= t; ++ell)
      if (!(seq[ell] == seq[m - 1])) return false;
    return is_generic({seq.begin(), seq.begin() + m}, m);
  }

  // order 2^(t+1), elementary abelian, semiregular
  for (uint32_t i = 0; i <= t; ++i) {
    if (!seq[i].is_fpf_involution()) return false;
    for (uint32_t j = i + 1; j <= t; ++j)
      if (!(seq[i] * seq[j] == seq[j] * seq[i])) return false;
  }
  auto closure = generated_elementary_abelian(seq);
  if (closure.size() != (uint64_t(1) << (t + 1))) return false;
  for (const auto& g : closure)
    if (!g.is_identity() && !g.is_fpf_involution()) return false;
  return true;
}

Permutation diagonal_centralizer_element(const GenericSequence& seq) {
  const uint32_t m = seq.m;
  const uint32_t n = 1u << m;
  require(!seq.elements.empty(), Err::degree_mismatch, "empty sequence");
  const uint32_t t = static_cast<uint32_t>(seq.elements.size()) - 1;
  require(t < m - 1, Err::tail_regime, "sequence already spans the tail regime");
  require(is_generic(seq.elements, m), Err::degree_mismatch, "sequence is not generic");

  auto group = generated_elementary_abelian(seq.elements);  // identity first
  auto orbits = orbit_decomposition(group, n);              // sorted by least element

  // base points: least point of each orbit
  std::vector<uint32_t> base;
  for (const auto& orb : orbits) base.push_back(orb[0]);

  // pair consecutive base points; replicate the pairing into each block via
  // the group elements
  std::vector<uint32_t> img(n);
  for (uint32_t x = 0; x < n; ++x) img[x] = x;
  for (const auto& g : group) {
    for (size_t i = 0; i + 1 < base.size(); i += 2) {
      uint32_t u = g(base[i]), v = g(base[i + 1]);
      img[u] = v;
      img[v] = u;
    }
  }
  return Permutation(std::move(img));
}

GenericSequence extend_generic(const GenericSequence& seq) {
  require(!seq.elements.empty(), Err::degree_mismatch, "empty sequence");
  GenericSequence out = seq;
  const uint32_t len = static_cast<uint32_t>(seq.elements.size());
  if (len >= seq.m) {
    out.elements.push_back(seq.elements[seq.m - 1]);
  } else {
    out.elements.push_back(diagonal_centralizer_element(seq));
  }
  return out;
}

}  // namespace unifac::perm
