#include "unifac/bruhat.hpp"

namespace unifac::mat {

// Upper-triangular row operations can only clear entries above a pivot and
// upper-triangular column operations only entries to its right, so the pivot
// of each column is forced: the bottom-most nonzero. That makes w unique.
BruhatForm bruhat_decompose(const Matrix& a) {
  const auto& F = a.field();
  const uint32_t n = a.dim();
  require(a.invertible(), Err::singular, "Bruhat decomposition needs an invertible matrix");

  Matrix m = a;
  Matrix left = Matrix::identity(F, n);   // accumulated row ops: left * a * right = w
  Matrix right = Matrix::identity(F, n);
  std::vector<uint32_t> sigma_img(n);

  for (uint32_t c = 0; c < n; ++c) {
    uint32_t r = n;
    for (uint32_t i = n; i-- > 0;)
      if (m.at(i, c) != 0) {
        r = i;
        break;
      }
    require(r < n, Err::singular, "zero column during decomposition");
    sigma_img[c] = r;

    // scale row r to make the pivot 1
    uint32_t inv = F.inv(m.at(r, c));
    if (inv != 1)
      for (uint32_t j = 0; j < n; ++j) {
        m.at(r, j) = F.mul(m.at(r, j), inv);
        left.at(r, j) = F.mul(left.at(r, j), inv);
      }
    // clear the column above the pivot (row_i -= factor * row_r, i < r)
    for (uint32_t i = 0; i < r; ++i) {
      uint32_t factor = m.at(i, c);
      if (!factor) continue;
      for (uint32_t j = 0; j < n; ++j) {
        m.at(i, j) = F.sub(m.at(i, j), F.mul(factor, m.at(r, j)));
        left.at(i, j) = F.sub(left.at(i, j), F.mul(factor, left.at(r, j)));
      }
    }
    // clear the pivot row to the right (col_j -= factor * col_c, j > c)
    for (uint32_t j = c + 1; j < n; ++j) {
      uint32_t factor = m.at(r, j);
      if (!factor) continue;
      for (uint32_t i = 0; i < n; ++i) {
        m.at(i, j) = F.sub(m.at(i, j), F.mul(factor, m.at(i, c)));
        right.at(i, j) = F.sub(right.at(i, j), F.mul(factor, right.at(i, c)));
      }
    }
  }

  BruhatForm out;
  out.sigma = perm::Permutation(sigma_img);
  out.w = m;  // now exactly the permutation matrix
  out.b1 = left.inverse();
  out.b2 = right.inverse();
  return out;
}

}  // namespace unifac::mat
