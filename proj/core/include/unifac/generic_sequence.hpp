#pragma once
#include <cstdint>
#include <vector>

#include "unifac/permutation.hpp"

namespace unifac::perm {

/// Sequence of commuting fixed-point-free involutions in Alt(2^m) generating
/// an elementary abelian group that acts semiregularly on {0..2^m-1}; past
/// index m-1 the sequence repeats its (m-1)-th element.
struct GenericSequence {
  uint32_t m = 0;
  std::vector<Permutation> elements;
};

/// Canonical sequence: identify {0..2^m-1} with bit vectors; element i is the
/// XOR-translation by the i-th unit bit for i <= min(t, m-1), then the tail
/// repeats element m-1.
GenericSequence generic_sequence(uint32_t m, uint32_t t);

bool is_generic(const std::vector<Permutation>& seq, uint32_t m);

/// Enumeration of the generated group with the identity first and the
/// remaining elements in image-lexicographic order.
std::vector<Permutation> generated_elementary_abelian(const std::vector<Permutation>& seq);

/// A type-2^(2^(m-1)) element of the diagonal subgroup attached to the orbit
/// decomposition of the generated group: it commutes with every element of the
/// group, stabilizes each block setwise and acts identically across blocks
/// under the group's identifications. Requires t < m-1 (throws TailRegime).
Permutation diagonal_centralizer_element(const GenericSequence& seq);

/// Appends one element: the diagonal centralizer element while the sequence is
/// still short of m elements, a repeat of element m-1 in the tail regime.
GenericSequence extend_generic(const GenericSequence& seq);

}  // namespace unifac::perm
