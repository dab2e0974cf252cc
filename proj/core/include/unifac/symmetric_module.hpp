#pragma once
#include <string>
#include <utility>
#include <vector>

#include "unifac/matrix.hpp"

namespace unifac::forms {

/// target = sum of A * D_tag * A^T over the terms, with every A in SL(d,q) and
/// D_tag one of the two fixed generators for the characteristic.
struct SymmetricCombination {
  mat::Matrix target;
  std::vector<std::pair<mat::Matrix, std::string>> terms;  // (A, "D1" | "D2")
  uint32_t bound = 0;                                      // recorded per-case cap
};

/// The fixed module generators: characteristic > 3 uses diag(1,0,...,0) and
/// diag(0,1,...,1); characteristic 3 uses diag(1,1,0,...,0) and the
/// parity-adjusted diag(delta,1,...,1); characteristic 2 uses
/// diag(1,1,1,0,...,0) and diag(0,1,...,1).
mat::Matrix symmetric_generator(const gf::FiniteField& f, uint32_t d, int which);

uint32_t symmetric_term_bound(const gf::FiniteField& f, uint32_t d);

/// Decomposes a symmetric matrix over the case-appropriate generators.
SymmetricCombination symmetric_module_factor(const mat::Matrix& s);

bool verify_symmetric_combination(const SymmetricCombination& c);

/// M * s * M^T diagonal with M in SL(d,q); works in every characteristic
/// (non-alternating input required when char = 2 and the diagonal must be hit).
std::pair<mat::Matrix, mat::Matrix> congruence_diagonalize(const mat::Matrix& s);

/// Six SL(2,3) matrices with sum A_i A_i^T equal to the given 2x2 0/1 diagonal
/// pattern (pattern index = bit0 + 2*bit1), and four SL(3,2) matrices with sum
/// A_i A_i^T = diag(1,0,0). Deterministic meet-in-the-middle searches.
const std::vector<mat::Matrix>& six_term_table_gf3(uint32_t pattern);
const std::vector<mat::Matrix>& four_term_table_gf2();

}  // namespace unifac::forms
