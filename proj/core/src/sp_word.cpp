#include "unifac/sp_word.hpp"

#include <algorithm>

namespace unifac::forms {

using mat::Matrix;

Matrix sp_x_letter(const FormSpace& s, uint32_t t) {
  Matrix m = Matrix::identity(*s.field, s.dim);
  m.at(0, s.d) = t;  // e_1 row, f_1 column
  return m;
}

Matrix sp_y_letter(const FormSpace& s, uint32_t t) {
  Matrix m = Matrix::identity(*s.field, s.dim);
  m.at(s.d, 0) = t;
  return m;
}

SpWitness sp_borel_torus_word(uint32_t lam, uint32_t d, uint64_t q) {
  FormSpace s = make_form_space(FormKind::symplectic, d, q);
  const auto& F = *s.field;
  require(lam != 0, Err::zero_lambda, "lambda must be nonzero");
  require(lam < F.q, Err::parse_error, "lambda out of range");

  const uint32_t lam_inv = F.inv(lam);
  std::vector<uint32_t> diag(s.dim, 1);
  diag[0] = lam;
  diag[d] = lam_inv;

  SpWitness w;
  w.target = Matrix::diagonal(F, diag);
  w.letters = {{sp_x_letter(s, lam), "X"},
               {sp_y_letter(s, F.neg(lam_inv)), "Y"},
               {sp_x_letter(s, lam), "X"},
               {sp_x_letter(s, F.neg(1)), "X"},
               {sp_y_letter(s, 1), "Y"},
               {sp_x_letter(s, F.neg(1)), "X"}};
  return w;
}

std::pair<perm::Permutation, perm::Permutation> even_weight_decompose(
    const std::vector<uint32_t>& u) {
  const uint32_t d = static_cast<uint32_t>(u.size());
  require(d >= 2, Err::dimension_too_small, "need d >= 2");
  std::vector<uint32_t> supp, rest;
  for (uint32_t i = 0; i < d; ++i)
    (u[i] ? supp : rest).push_back(i);
  require(supp.size() % 2 == 0, Err::odd_weight, "vector has odd weight");

  const uint32_t t = d / 2;
  const uint32_t wgt = static_cast<uint32_t>(supp.size());
  // P and Q of size t with P ^ Q = supp: split supp in half, share t - w/2
  // points outside the support
  const uint32_t half = wgt / 2;
  std::vector<uint32_t> P(supp.begin(), supp.begin() + half);
  std::vector<uint32_t> Q(supp.begin() + half, supp.end());
  require(t >= half && rest.size() >= t - half, Err::odd_weight,
          "weight exceeds 2*floor(d/2)");
  for (uint32_t i = 0; i < t - half; ++i) {
    P.push_back(rest[i]);
    Q.push_back(rest[i]);
  }
  std::sort(P.begin(), P.end());
  std::sort(Q.begin(), Q.end());

  auto build = [&](const std::vector<uint32_t>& target) {
    std::vector<uint32_t> img(d);
    std::vector<bool> taken(d, false);
    for (uint32_t i = 0; i < t; ++i) {
      img[i] = target[i];
      taken[target[i]] = true;
    }
    uint32_t next = 0;
    for (uint32_t i = t; i < d; ++i) {
      while (taken[next]) ++next;
      img[i] = next;
      taken[next] = true;
    }
    return perm::Permutation(img);
  };
  return {build(P), build(Q)};
}

}  // namespace unifac::forms
