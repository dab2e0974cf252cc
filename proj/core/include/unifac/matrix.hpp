#pragma once
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "unifac/finite_field.hpp"
#include "unifac/permutation.hpp"

namespace unifac::mat {

/// Square matrix over a FiniteField; entries are element codes, row major.
class Matrix {
public:
  Matrix() = default;
  Matrix(const gf::FiniteField& f, uint32_t n)
      : f_(&f), n_(n), a_(uint64_t(n) * n, 0) {}

  static Matrix identity(const gf::FiniteField& f, uint32_t n);
  /// P(sigma) with P e_j = e_{sigma(j)}, so P(sigma)P(tau) = P(sigma tau).
  static Matrix permutation(const gf::FiniteField& f, const perm::Permutation& sigma);
  static Matrix diagonal(const gf::FiniteField& f, const std::vector<uint32_t>& d);

  const gf::FiniteField& field() const { return *f_; }
  uint32_t dim() const { return n_; }
  uint32_t& at(uint32_t i, uint32_t j) { return a_[uint64_t(i) * n_ + j]; }
  uint32_t at(uint32_t i, uint32_t j) const { return a_[uint64_t(i) * n_ + j]; }
  const std::vector<uint32_t>& raw() const { return a_; }

  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend Matrix operator+(const Matrix& x, const Matrix& y);
  friend Matrix operator-(const Matrix& x, const Matrix& y);
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.f_ == y.f_ && x.n_ == y.n_ && x.a_ == y.a_;
  }
  friend bool operator<(const Matrix& x, const Matrix& y) { return x.a_ < y.a_; }

  Matrix transpose() const;
  Matrix inverse() const;  // throws Singular
  uint32_t det() const;
  bool is_identity() const;
  bool invertible() const;

  /// Entrywise image under a field automorphism x -> x^(p^e).
  Matrix frobenius_entrywise(uint64_t e) const;

  /// True iff the matrix has exactly one nonzero entry per row and column and
  /// all nonzero entries equal 1; fills sigma with the permutation.
  bool is_permutation_matrix(perm::Permutation* sigma = nullptr) const;

  std::string str() const;  // "d,p^k;e e ...|e e ...|..."

  uint64_t key() const;  // packed base-q code, requires q^(n*n) < 2^64

private:
  const gf::FiniteField* f_ = nullptr;
  uint32_t n_ = 0;
  std::vector<uint32_t> a_;
};

Matrix parse_matrix(const std::string& text);

/// Uniform-ish random element of SL(n,q): random invertible matrix with the
/// last row scaled so the determinant is 1.
Matrix random_sl(const gf::FiniteField& f, uint32_t n, std::mt19937_64& rng);

uint64_t sl_order(uint32_t n, uint64_t q);
uint64_t gl_order(uint32_t n, uint64_t q);

}  // namespace unifac::mat
