#pragma once
#include "unifac/matrix.hpp"

namespace unifac::mat {

/// a = b1 * w * b2 with b1, b2 upper triangular invertible and w the unique
/// 0/1 permutation matrix of the double coset.
struct BruhatForm {
  Matrix b1;
  Matrix w;
  Matrix b2;
  perm::Permutation sigma;  // w has its 1-entries at (sigma(j), j)
};

BruhatForm bruhat_decompose(const Matrix& a);

}  // namespace unifac::mat
