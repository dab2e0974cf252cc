#pragma once
#include <cstdint>

#include "unifac/permutation.hpp"
#include "unifac/witness.hpp"

namespace unifac::perm {

using PermWitness = Witness<Permutation>;

/// theta = (m-2 m-1)(m m+1) on m+1 points, 1-indexed as in cycle notation.
Permutation uni1_theta(uint32_t m);

/// Factors phi in Alt(m+1) as psi1 * theta * psi2 * theta * psi3 with each
/// psi_i in Alt(m) (the stabilizer of point m+1). Letters are tagged
/// "Alt(m)" and "theta". Requires m >= 3 and phi even.
PermWitness uni1_factor(const Permutation& phi, uint32_t m);

/// Factors phi in Alt(4n) as a product of exactly 4 involutions of cycle
/// type 2^(2n), tag "C". Exact meet-in-the-middle over the class product
/// table for small degree, seeded random completion above the table cap.
PermWitness brenner_factor(const Permutation& phi, uint32_t n, uint64_t seed = 1);

/// Fixed involution used by uni2_factor: exchanges the first/second halves
/// of {0..8n-1} with the even/odd position classes, so conjugation by it
/// carries Alt(half0) x Alt(half1) onto Alt(evens) x Alt(odds).
Permutation uni2_theta(uint32_t n);

/// Factors phi in Alt(8n) as psi1 theta psi2 theta ... theta psi9 with the
/// nine psi_i in Gamma = Alt({0..4n-1}) x Alt({4n..8n-1}), tags "Gamma" and
/// "theta". Constructive: Brenner-decomposes phi into four type-2^(4n)
/// involutions, then factors each involution as a 3-letter core.
PermWitness uni2_factor(const Permutation& phi, uint32_t n, uint64_t seed = 1);

/// Tag predicate helpers shared with the test suites.
bool in_point_stabilizer_alt(const Permutation& g, uint32_t fixed_point);
bool has_type_2_pow(const Permutation& g, uint32_t count);
bool in_gamma_split(const Permutation& g, uint32_t half);  // Alt(first half) x Alt(second half)

}  // namespace unifac::perm
