#include <doctest.h>

#include <algorithm>
#include <vector>

#include "unifac/finite_field.hpp"

using namespace unifac;
using namespace unifac::gf;

namespace {

// independent irreducibility oracle: a monic polynomial over Z_p (coeffs low
// to high, leading 1) is irreducible iff no product of two smaller monics hits it
bool oracle_irreducible(const std::vector<uint32_t>& f, uint32_t p) {
  uint32_t deg = static_cast<uint32_t>(f.size()) - 1;
  for (uint32_t da = 1; da < deg; ++da) {
    uint32_t db = deg - da;
    uint64_t ca = 1, cb = 1;
    for (uint32_t i = 0; i < da; ++i) ca *= p;
    for (uint32_t i = 0; i < db; ++i) cb *= p;
    for (uint64_t a = 0; a < ca; ++a)
      for (uint64_t b = 0; b < cb; ++b) {
        std::vector<uint32_t> pa(da + 1, 0), pb(db + 1, 0);
        uint64_t t = a;
        for (uint32_t i = 0; i < da; ++i) {
          pa[i] = t % p;
          t /= p;
        }
        pa[da] = 1;
        t = b;
        for (uint32_t i = 0; i < db; ++i) {
          pb[i] = t % p;
          t /= p;
        }
        pb[db] = 1;
        std::vector<uint32_t> prod(deg + 1, 0);
        for (uint32_t i = 0; i <= da; ++i)
          for (uint32_t j = 0; j <= db; ++j)
            prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
        if (prod == f) return false;
      }
  }
  return true;
}

// independent Zsigmondy oracle by trial division over ascending primes
uint64_t oracle_zsigmondy(uint64_t q, uint32_t m) {
  uint64_t qm = 1;
  for (uint32_t i = 0; i < m; ++i) qm *= q;
  for (uint64_t r = 3; r <= qm - 1; r += 2) {
    bool prime = true;
    for (uint64_t d = 2; d * d <= r; ++d)
      if (r % d == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    if ((qm - 1) % r != 0) continue;
    bool primitive = true;
    uint64_t qj = 1;
    for (uint32_t j = 1; j < m; ++j) {
      qj *= q;
      if ((qj - 1) % r == 0) {
        primitive = false;
        break;
      }
    }
    if (primitive) return r;
  }
  return 0;
}

}  // namespace

TEST_CASE("field construction picks the least irreducible modulus") {
  const auto& f2 = make_field(2, 1);
  CHECK(f2.q == 2);
  CHECK(f2.modulus == std::vector<uint32_t>{0, 1});  // x

  const auto& f4 = make_field(2, 2);
  CHECK(f4.modulus == std::vector<uint32_t>{1, 1, 1});  // x^2+x+1
  // oracle: it is the unique irreducible monic quadratic over GF(2)
  int count = 0;
  for (uint32_t c0 = 0; c0 < 2; ++c0)
    for (uint32_t c1 = 0; c1 < 2; ++c1)
      if (oracle_irreducible({c0, c1, 1}, 2)) ++count;
  CHECK(count == 1);
  CHECK(oracle_irreducible({1, 1, 1}, 2));

  const auto& f9 = make_field(3, 2);
  CHECK(oracle_irreducible({f9.modulus[0], f9.modulus[1], 1}, 3));
  // no smaller-coded monic quadratic is irreducible
  uint64_t code = f9.modulus[0] + 3 * f9.modulus[1];
  for (uint64_t c = 0; c < code; ++c)
    CHECK_FALSE(oracle_irreducible({uint32_t(c % 3), uint32_t(c / 3), 1}, 3));

  CHECK_THROWS_AS(make_field(4, 1), Error);   // NonPrime
  CHECK_THROWS_AS(make_field(2, 40), Error);  // DegreeTooLarge
}

TEST_CASE("field axioms hold on samples") {
  for (auto [p, k] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 4}, {3, 2}, {5, 1}, {7, 2}}) {
    const auto& F = make_field(p, k);
    for (uint32_t a = 1; a < F.q; ++a) {
      CHECK(F.mul(a, F.inv(a)) == 1);
      CHECK(F.pow(a, F.q) == a);  // x^(p^k) = x
    }
    for (uint32_t a = 0; a < std::min(F.q, 9u); ++a)
      for (uint32_t b = 0; b < std::min(F.q, 9u); ++b)
        for (uint32_t c = 0; c < std::min(F.q, 9u); ++c) {
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
          CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
        }
  }
}

TEST_CASE("frobenius") {
  const auto& f4 = make_field(2, 2);
  const uint32_t omega = 2;  // the polynomial generator x
  CHECK(f4.frobenius(omega, 0) == omega);
  CHECK(f4.frobenius(omega, 1) == f4.mul(omega, omega));
  CHECK(f4.frobenius(omega, 1) == f4.add(omega, 1));  // omega^2 = omega + 1
  const auto& f7 = make_field(7, 1);
  for (uint32_t x = 0; x < 7; ++x)
    for (uint64_t e = 0; e < 4; ++e) CHECK(f7.frobenius(x, e) == x);
  // frobenius is additive
  const auto& f27 = make_field(3, 3);
  for (uint32_t a = 0; a < 27; ++a)
    for (uint32_t b = 0; b < 27; ++b)
      CHECK(f27.frobenius(f27.add(a, b), 1) == f27.add(f27.frobenius(a, 1), f27.frobenius(b, 1)));
}

TEST_CASE("zsigmondy primes") {
  CHECK(zsigmondy_prime(2, 4) == 5);
  CHECK(oracle_zsigmondy(2, 4) == 5);
  CHECK(zsigmondy_prime(3, 4) == 5);
  CHECK(oracle_zsigmondy(3, 4) == 5);
  CHECK_THROWS_AS(zsigmondy_prime(2, 6), Error);
  CHECK(oracle_zsigmondy(2, 6) == 0);

  // agreement with the oracle and exact multiplicative order
  for (uint64_t q : {2ull, 3ull, 4ull, 5ull, 9ull})
    for (uint32_t m : {2u, 3u, 4u, 5u, 8u}) {
      uint64_t expect = oracle_zsigmondy(q, m);
      if (expect == 0) {
        CHECK_THROWS_AS(zsigmondy_prime(q, m), Error);
        continue;
      }
      uint64_t r = zsigmondy_prime(q, m);
      CHECK(r == expect);
      uint64_t ord = 1, acc = q % r;
      while (acc != 1) {
        acc = acc * q % r;
        ++ord;
      }
      CHECK(ord == m);
    }
}

TEST_CASE("normal basis generators") {
  // GF(4)/GF(2): omega works, {omega, omega+1} is a basis
  auto tau4 = normal_basis_generator(2, 2);
  CHECK(tau4.v == 2);

  // tau = 1 is never returned for d >= 2
  for (auto [q, d] : std::vector<std::pair<uint64_t, uint32_t>>{{2, 2}, {2, 4}, {3, 2}, {3, 4}, {4, 2}}) {
    auto tau = normal_basis_generator(q, d);
    CHECK(tau.v != 1);

    // rank check of the Frobenius orbit as a matrix over the prime field when
    // q is prime: independent oracle by Gaussian elimination
    const auto& K = *tau.field;
    if (K.k == d) {
      std::vector<std::vector<uint32_t>> rows;
      uint32_t x = tau.v;
      for (uint32_t j = 0; j < d; ++j) {
        rows.push_back(K.coeffs(x));
        x = K.pow(x, q);
      }
      uint32_t rank = 0;
      for (uint32_t col = 0; col < d; ++col) {
        uint32_t piv = rank;
        while (piv < d && rows[piv][col] == 0) ++piv;
        if (piv == d) continue;
        std::swap(rows[piv], rows[rank]);
        for (uint32_t i = rank + 1; i < d; ++i) {
          while (rows[i][col] != 0)
            for (uint32_t j = 0; j < d; ++j) rows[i][j] = (rows[i][j] + rows[rank][j]) % K.p;
        }
        ++rank;
      }
      CHECK(rank == d);
    }
  }

  // GF(16)/GF(2): least tau by exhaustive scan with a 4x4 rank oracle
  {
    const auto& K = make_field(2, 4);
    uint32_t expect = 0;
    for (uint32_t t = 1; t < 16 && !expect; ++t) {
      std::vector<std::vector<uint32_t>> rows;
      uint32_t x = t;
      for (int j = 0; j < 4; ++j) {
        rows.push_back(K.coeffs(x));
        x = K.mul(x, x);
      }
      // GF(2) rank
      uint32_t rank = 0;
      for (uint32_t col = 0; col < 4; ++col) {
        uint32_t piv = rank;
        while (piv < 4 && rows[piv][col] == 0) ++piv;
        if (piv == 4) continue;
        std::swap(rows[piv], rows[rank]);
        for (uint32_t i = rank + 1; i < 4; ++i)
          if (rows[i][col])
            for (int j = 0; j < 4; ++j) rows[i][j] ^= rows[rank][j];
        ++rank;
      }
      if (rank == 4) expect = t;
    }
    CHECK(normal_basis_generator(2, 4).v == expect);
  }
}

TEST_CASE("element and descriptor round trips") {
  const auto& F = make_field(3, 2);
  for (uint32_t v = 0; v < F.q; ++v) {
    auto e = parse_element(F.print(v));
    CHECK(e.field == &F);
    CHECK(e.v == v);
  }
  CHECK(F.print(5) == "3^2:2,1");
  CHECK_THROWS_AS(parse_element("junk"), Error);
  CHECK(&parse_field_descriptor("3,2") == &F);
}

TEST_CASE("quadratic conjugation") {
  const auto& F9 = make_field(3, 2);
  for (uint32_t x = 0; x < 9; ++x) {
    uint32_t c = F9.conj(x, 3);
    CHECK(F9.conj(c, 3) == x);                    // involution
    CHECK(F9.mul(x, c) == F9.pow(x, 4));          // norm lands in GF(3)
    if (x < 3) CHECK(c == x);                     // fixes the base field
  }
  CHECK_THROWS_AS(F9.conj(1, 2), Error);          // 2^2 != 9
  const auto& F8 = make_field(2, 3);
  CHECK_THROWS_AS(F8.conj(1, 2), Error);          // odd degree has no quadratic structure
}

TEST_CASE("subfield enumeration") {
  const auto& F = make_field(2, 4);  // GF(16)
  auto sub = F.subfield(4);
  CHECK(sub.size() == 4);
  for (uint32_t x : sub) CHECK(F.pow(x, 4) == x);
  const auto& F81 = make_field(3, 4);
  auto sub9 = F81.subfield(9);
  CHECK(sub9.size() == 9);
  for (uint32_t x : sub9) CHECK(F81.pow(x, 9) == x);
}
