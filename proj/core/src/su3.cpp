#include "unifac/su3.hpp"

namespace unifac::forms {

using mat::Matrix;

namespace {

const gf::FiniteField& quadratic_field(uint64_t q) {
  uint32_t p = 0, e = 0;
  uint64_t rest = q;
  for (uint32_t cand = 2; uint64_t(cand) * cand <= q; ++cand)
    if (q % cand == 0) {
      p = cand;
      break;
    }
  if (!p) p = static_cast<uint32_t>(q);
  while (rest > 1) {
    require(rest % p == 0, Err::non_prime, "q is not a prime power");
    rest /= p;
    ++e;
  }
  return gf::make_field(p, 2 * e);
}

uint32_t find_t(const gf::FiniteField& F, uint64_t q, uint32_t lam) {
  uint32_t target = F.add(F.conj(F.inv(lam), q), F.inv(lam));
  for (uint32_t t = 0; t < F.q; ++t)
    if (F.mul(t, F.conj(t, q)) == target) return t;
  return F.q;
}

}  // namespace

std::vector<uint32_t> su3_norm_set(uint64_t q) {
  const auto& F = quadratic_field(q);
  std::vector<uint32_t> out;
  for (uint32_t lam = 1; lam < F.q; ++lam)
    if (find_t(F, q, lam) != F.q) out.push_back(lam);
  return out;
}

bool in_su3_norm_set(uint32_t lam, uint64_t q) {
  const auto& F = quadratic_field(q);
  return lam != 0 && find_t(F, q, lam) != F.q;
}

Su3Factorization su3_torus_factor(uint32_t lam, uint64_t q) {
  const auto& F = quadratic_field(q);
  require(lam != 0 && lam < F.q, Err::zero_lambda, "lambda must be a nonzero element");
  uint32_t t = find_t(F, q, lam);
  require(t != F.q, Err::not_in_l, "lambda admits no t; use lambda_split");

  // least eps with eps * conj(eps) = -1 (eps = 1 in characteristic 2)
  uint32_t eps = F.q;
  uint32_t minus1 = F.neg(1);
  for (uint32_t c = 1; c < F.q; ++c)
    if (F.mul(c, F.conj(c, q)) == minus1) {
      eps = c;
      break;
    }
  require(eps != F.q, Err::search_exhausted, "no norm -1 element");

  auto cj = [&](uint32_t x) { return F.conj(x, q); };
  const uint32_t lb = cj(lam), tb = cj(t);
  const uint32_t eps_inv = F.inv(eps);

  Su3Factorization out{Matrix(F, 3), Matrix(F, 3), Matrix(F, 3), Matrix(F, 3), t, eps};
  out.a1 = Matrix::identity(F, 3);
  out.a1.at(0, 1) = F.mul(F.mul(eps_inv, lam), t);
  out.a1.at(0, 2) = lam;
  out.a1.at(1, 2) = F.mul(F.mul(eps, lb), tb);

  out.a2 = Matrix::identity(F, 3);
  out.a2.at(0, 1) = F.mul(F.mul(eps_inv, lb), t);
  out.a2.at(0, 2) = lam;
  out.a2.at(1, 2) = F.mul(F.mul(eps, lam), tb);

  out.b = Matrix::identity(F, 3);
  out.b.at(1, 0) = F.neg(F.mul(eps, tb));
  out.b.at(2, 0) = F.inv(lb);
  out.b.at(2, 1) = F.neg(F.mul(eps_inv, t));

  out.product = Matrix(F, 3);
  out.product.at(0, 2) = lam;
  out.product.at(1, 1) = F.neg(F.mul(F.inv(lam), lb));
  out.product.at(2, 0) = F.inv(lb);
  return out;
}

std::pair<uint32_t, uint32_t> lambda_split(uint32_t lam, uint64_t q) {
  const auto& F = quadratic_field(q);
  require(lam != 0 && lam < F.q, Err::zero_lambda, "lambda must be nonzero");
  // prefer the (lam, 1) pair when both lie in the norm set
  if (in_su3_norm_set(lam, q) && in_su3_norm_set(1, q)) return {lam, 1};
  for (uint32_t l1 = 1; l1 < F.q; ++l1) {
    if (!in_su3_norm_set(l1, q)) continue;
    // lam = l1 * conj(l2)^{-1}  =>  l2 = conj(l1 / lam)
    uint32_t l2 = F.conj(F.div(l1, lam), q);
    if (in_su3_norm_set(l2, q)) return {l1, l2};
  }
  fail(Err::search_exhausted, "no norm-set split found");
}

}  // namespace unifac::forms
