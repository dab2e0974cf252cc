#pragma once
#include "unifac/matrix.hpp"
#include "unifac/witness.hpp"

namespace unifac::mat {

using MatWitness = Witness<Matrix>;

/// s = s1 + s2 with both parts invertible. Deterministic: scan order over a
/// cached invertible list for small q^(d*d), a rank-factorization construction
/// above that. NoSplit only at the 1x1 GF(2) boundary.
std::pair<Matrix, Matrix> split_nonsingular(const Matrix& s);

/// Fixed connective of the step factorization: the signed transposition matrix
/// swapping the last two coordinates.
Matrix step_weyl_connective(const gf::FiniteField& f, uint32_t n);

/// Factors phi in SL(d+1,q) over the two embedded copies of SL(d,q):
/// letters tagged "S" (top-left block), "T" (bottom-right block) and "w"
/// (the fixed Weyl connective). Requires d >= 2.
MatWitness sl_step_factor(const Matrix& phi);

/// Fixed connectives of the doubling factorization on SL(8d,q).
struct DoubleConnectives {
  std::vector<Matrix> tau;  // [[I,J_i],[0,I]] for the four block units J_1..J_4
  Matrix kappa;             // signed swap of coordinates 1 and 4d
  Matrix theta;             // permutation matrix of the uni2 involution
};
DoubleConnectives double_connectives(const gf::FiniteField& f, uint32_t n);

/// Factors phi in SL(8d,q) over Gamma = SL(4d,q) x SL(4d,q) (block diagonal):
/// letters tagged "Gamma", "J1".."J4", "kappa", "theta". Requires 8 | dim.
MatWitness sl_double_factor(const Matrix& phi, uint64_t seed = 1);

/// Permutation matrices of the canonical generic sequence, over GF(q).
std::vector<Matrix> sl_generic_sequence(uint32_t m, uint32_t p, uint32_t k, uint32_t t);

bool is_step_s_letter(const Matrix& g);    // [[A,0],[0,1]], det A = 1
bool is_step_t_letter(const Matrix& g);    // [[1,0],[0,A]], det A = 1
bool is_gamma_letter(const Matrix& g);     // [[A,0],[0,B]], det A = det B = 1

}  // namespace unifac::mat
