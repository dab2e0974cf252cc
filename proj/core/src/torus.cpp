#include "unifac/torus.hpp"

#include <unordered_map>

namespace unifac::mat {

namespace {

// p-adic digits of a field code
std::vector<uint32_t> digits(uint32_t v, uint32_t p, uint32_t count) {
  std::vector<uint32_t> d(count);
  for (uint32_t i = 0; i < count; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

}  // namespace

TorusFactorization regular_torus_factor(uint64_t q, uint32_t n) {
  const uint32_t m = 4 * n;
  const uint64_t r = gf::zsigmondy_prime(q, m);

  gf::FieldElement tau = gf::normal_basis_generator(q, m);
  const gf::FiniteField& K = *tau.field;
  const uint32_t p = K.p;
  const uint32_t e = K.k / m;  // q = p^e
  const gf::FiniteField& Fq = gf::make_field(p, e);

  // normal basis of K over GF(q)
  std::vector<uint32_t> basis(m);
  basis[0] = tau.v;
  for (uint32_t j = 1; j < m; ++j) basis[j] = K.pow(basis[j - 1], q);

  // GF(q)-coordinates via a GF(p)-linear system: columns are basis[j] * zeta^l
  // where zeta is a root in K of the modulus of the abstract GF(q)
  uint32_t zeta = 1;
  if (e > 1) {
    bool found = false;
    for (uint32_t x : K.subfield(q)) {
      uint32_t val = 0, xp = 1;
      for (uint32_t i = 0; i <= e; ++i) {
        uint32_t coeff = Fq.modulus[i] % p;  // prime-field constants embed as codes
        val = K.add(val, K.mul(coeff, xp));
        xp = K.mul(xp, x);
      }
      if (val == 0) {
        zeta = x;
        found = true;
        break;
      }
    }
    require(found, Err::search_exhausted, "no root of the subfield modulus");
  }

  const gf::FiniteField& Fp = gf::make_field(p, 1);
  const uint32_t kdim = K.k;  // = e*m
  Matrix big(Fp, kdim);
  for (uint32_t j = 0; j < m; ++j) {
    uint32_t zl = 1;
    for (uint32_t l = 0; l < e; ++l) {
      uint32_t col_elt = K.mul(basis[j], zl);
      auto d = digits(col_elt, p, kdim);
      for (uint32_t row = 0; row < kdim; ++row) big.at(row, j * e + l) = d[row];
      zl = K.mul(zl, zeta);
    }
  }
  Matrix biginv = big.inverse();

  auto coords = [&](uint32_t x) {
    auto d = digits(x, p, kdim);
    std::vector<uint32_t> c(m);
    for (uint32_t j = 0; j < m; ++j) {
      std::vector<uint32_t> sub(e);
      for (uint32_t l = 0; l < e; ++l) {
        uint32_t acc = 0;
        for (uint32_t col = 0; col < kdim; ++col)
          acc = Fp.add(acc, Fp.mul(biginv.at(j * e + l, col), d[col]));
        sub[l] = acc;
      }
      c[j] = Fq.from_coeffs(sub);
    }
    return c;
  };

  // gamma of order r inside the order-(q^{2n}+1) subgroup
  uint64_t group_order = uint64_t(K.q) - 1;
  uint32_t gamma = K.pow(K.generator(), group_order / r);

  TorusFactorization out{Matrix(Fq, m), Matrix(Fq, m), Matrix(Fq, m), {}, r};
  for (uint32_t j = 0; j < m; ++j) {
    auto c = coords(K.mul(gamma, basis[j]));
    for (uint32_t i = 0; i < m; ++i) out.psi.at(i, j) = c[i];
  }
  // the 2n-th Frobenius power permutes the normal basis by j -> j + 2n (mod 4n)
  for (uint32_t j = 0; j < m; ++j) out.pi1.at((j + 2 * n) % m, j) = 1;
  out.pi2 = out.pi1 * out.psi;
  for (uint32_t j = 0; j < m; ++j) out.basis.push_back({K, basis[j]});
  return out;
}

}  // namespace unifac::mat
