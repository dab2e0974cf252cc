#pragma once
#include <cstdint>
#include <vector>

#include "unifac/matrix.hpp"

namespace unifac::mat {

/// Exhaustive BFS over the Cayley graph of SL(dim,q) generated by the full
/// conjugacy class of `rep`. Requires the packed element space q^(dim*dim) to
/// stay within the dense-array budget.
struct CoverageProfile {
  uint64_t group_size = 0;
  uint64_t class_size = 0;
  uint32_t radius = 0;                 // max distance over the whole group
  uint32_t radius_noncentral = 0;      // max distance over non-central elements
  std::vector<uint64_t> count_at;      // count_at[k] = elements at distance k
  std::vector<uint8_t> dist;           // indexed by packed key; 255 = unreached
  uint32_t distance(const Matrix& g) const { return dist[g.key()]; }
};

/// The conjugacy class of rep in SL(dim,q), via closure under conjugation by
/// generators of SL.
std::vector<Matrix> conjugacy_class(const Matrix& rep);

/// rep must be non-central. If bound > 0 and some non-central element ends up
/// farther than bound, throws BoundExceeded (radius still computed first).
CoverageProfile class_covering_radius(const Matrix& rep, uint32_t bound = 0);

/// The canonical representative of the class of involutions that are
/// permutation matrices of type 2^(2n) in some basis: the matrix of
/// (1 2)(3 4)...(4n-1 4n).
Matrix involution_class_rep(const gf::FiniteField& f, uint32_t n);

/// Conjugacy-invariant membership test for that class: an involution with the
/// right eigenspace/Jordan profile. Validated against brute-force conjugation
/// in the test suite before use.
bool in_involution_class(const Matrix& g);

/// Sampled membership check for groups too big for exhaustive BFS: verifies
/// that `count` seeded-random non-central elements of SL(dim,q) lie within
/// `bound` steps of the identity in the class Cayley graph. Returns the
/// maximum distance observed. Throws BoundExceeded on failure.
uint32_t sampled_covering_check(const Matrix& rep, uint32_t bound, uint32_t count,
                                uint64_t seed);

}  // namespace unifac::mat
