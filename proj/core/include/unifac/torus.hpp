#pragma once
#include "unifac/matrix.hpp"

namespace unifac::mat {

/// psi = pi1 * pi2 in SL(4n, q): psi is the multiplication action of an
/// element of Zsigmondy-prime order on GF(q^{4n}) in a normal-basis coordinate
/// system, pi1 is the permutation matrix of the 2n-th Frobenius power, and
/// pi1 psi pi1^{-1} = psi^{-1}.
struct TorusFactorization {
  Matrix psi;
  Matrix pi1;
  Matrix pi2;
  std::vector<gf::FieldElement> basis;  // the normal basis of GF(q^{4n}) over GF(q)
  uint64_t prime = 0;                   // order of psi
};

TorusFactorization regular_torus_factor(uint64_t q, uint32_t n);

}  // namespace unifac::mat
