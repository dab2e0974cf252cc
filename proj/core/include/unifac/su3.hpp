#pragma once
#include "unifac/form_space.hpp"

namespace unifac::forms {

/// The triangular matrices A1, B, A2 of the SU(3,q) torus identity on the
/// ordered basis (e_d, w, f_d): A1 B A2 is the cross matrix with entries
/// (lam; -lam^{-1} conj(lam); conj(lam)^{-1}).
struct Su3Factorization {
  mat::Matrix a1, b, a2;
  mat::Matrix product;  // the expected cross matrix
  uint32_t t = 0;       // parameter with 1/lam + conj(1/lam) = t conj(t)
  uint32_t eps = 0;     // fixed element with eps conj(eps) = -1
};

/// Requires lam in L(q) = { x != 0 : 1/x + conj(1/x) is a norm }; throws
/// NotInL otherwise (over finite fields every nonzero lam qualifies).
Su3Factorization su3_torus_factor(uint32_t lam, uint64_t q);

/// The set L(q) inside GF(q^2)*.
std::vector<uint32_t> su3_norm_set(uint64_t q);
bool in_su3_norm_set(uint32_t lam, uint64_t q);

/// lam = lam1 * conj(lam2)^{-1} with both factors in L(q); (lam, 1) when
/// valid, else the least scanned pair.
std::pair<uint32_t, uint32_t> lambda_split(uint32_t lam, uint64_t q);

}  // namespace unifac::forms
