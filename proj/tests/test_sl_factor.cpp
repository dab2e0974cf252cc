#include <doctest.h>

#include <random>

#include "unifac/sl_factor.hpp"

using namespace unifac;
using namespace unifac::mat;

namespace {

bool step_witness_ok(const MatWitness& w, const gf::FiniteField& F, uint32_t n) {
  const Matrix theta = step_weyl_connective(F, n);
  return w.validate([&](const Matrix& g, const std::string& tag) {
    if (tag == "S") return is_step_s_letter(g);
    if (tag == "T") return is_step_t_letter(g);
    if (tag == "w") return g == theta;
    return false;
  });
}

bool double_witness_ok(const MatWitness& w, const gf::FiniteField& F, uint32_t n) {
  const DoubleConnectives conn = double_connectives(F, n);
  return w.validate([&](const Matrix& g, const std::string& tag) {
    if (tag == "Gamma") return is_gamma_letter(g);
    if (tag == "J1") return g == conn.tau[0];
    if (tag == "J2") return g == conn.tau[1];
    if (tag == "J3") return g == conn.tau[2];
    if (tag == "J4") return g == conn.tau[3];
    if (tag == "kappa") return g == conn.kappa || g == conn.kappa.inverse();
    if (tag == "theta") return g == conn.theta;
    return false;
  });
}

std::vector<Matrix> sl_all(const gf::FiniteField& F, uint32_t d) {
  std::vector<Matrix> out;
  uint64_t total = 1;
  for (uint32_t i = 0; i < d * d; ++i) total *= F.q;
  for (uint64_t v = 0; v < total; ++v) {
    Matrix m(F, d);
    uint64_t c = v;
    for (uint32_t i = 0; i < d; ++i)
      for (uint32_t j = 0; j < d; ++j) {
        m.at(i, j) = static_cast<uint32_t>(c % F.q);
        c /= F.q;
      }
    if (m.det() == 1) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

TEST_CASE("split_nonsingular: pinned examples") {
  const auto& F2 = gf::make_field(2, 1);
  // zero splits as (I, -I)
  auto [z1, z2] = split_nonsingular(Matrix(F2, 2));
  CHECK(z1.is_identity());
  CHECK(z2.is_identity());  // -I = I over GF(2)

  // identity over GF(2): the pinned scan result
  auto [s1, s2] = split_nonsingular(Matrix::identity(F2, 2));
  Matrix e1(F2, 2), e2(F2, 2);
  e1.at(0, 0) = 1; e1.at(0, 1) = 1; e1.at(1, 0) = 1; e1.at(1, 1) = 0;
  e2.at(0, 0) = 0; e2.at(0, 1) = 1; e2.at(1, 0) = 1; e2.at(1, 1) = 1;
  CHECK(s1 == e1);
  CHECK(s2 == e2);

  // 1x1 over GF(2) with entry 1 has no split
  Matrix one(F2, 1);
  one.at(0, 0) = 1;
  CHECK_THROWS_AS(split_nonsingular(one), Error);
}

TEST_CASE("split_nonsingular: exhaustive 2x2 over GF(2) and GF(3)") {
  for (uint32_t p : {2u, 3u}) {
    const auto& F = gf::make_field(p, 1);
    uint64_t total = 1;
    for (int i = 0; i < 4; ++i) total *= p;
    for (uint64_t v = 0; v < total; ++v) {
      Matrix s(F, 2);
      uint64_t c = v;
      for (uint32_t i = 0; i < 2; ++i)
        for (uint32_t j = 0; j < 2; ++j) {
          s.at(i, j) = static_cast<uint32_t>(c % p);
          c /= p;
        }
      auto [a, b] = split_nonsingular(s);
      CHECK(a.invertible());
      CHECK(b.invertible());
      CHECK(a + b == s);
    }
  }
}

TEST_CASE("split_nonsingular: constructive route above the table cap") {
  // force the rank-factorization path with a 5x5 over GF(3)
  const auto& F = gf::make_field(3, 1);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<uint32_t> dist(0, 2);
  for (int rep = 0; rep < 200; ++rep) {
    Matrix s(F, 5);
    for (uint32_t i = 0; i < 5; ++i)
      for (uint32_t j = 0; j < 5; ++j) s.at(i, j) = dist(rng);
    auto [a, b] = split_nonsingular(s);
    CHECK(a.invertible());
    CHECK(b.invertible());
    CHECK(a + b == s);
  }
  // singular and rank-deficient shapes too
  Matrix r1(F, 5);
  r1.at(2, 3) = 1;
  auto [a, b] = split_nonsingular(r1);
  CHECK(a.invertible());
  CHECK(b.invertible());
  CHECK(a + b == r1);
}

TEST_CASE("sl_step_factor: trivial shapes") {
  const auto& F = gf::make_field(2, 1);
  auto id = Matrix::identity(F, 3);
  auto w = sl_step_factor(id);
  CHECK(w.letters.empty());
  CHECK(step_witness_ok(w, F, 3));

  // an embedded element stays a single S letter
  Matrix phi = Matrix::identity(F, 3);
  phi.at(0, 1) = 1;
  w = sl_step_factor(phi);
  CHECK(w.letters.size() == 1);
  CHECK(w.letters[0].tag == "S");
  CHECK(step_witness_ok(w, F, 3));

  CHECK_THROWS_AS(sl_step_factor(Matrix::identity(F, 2)), Error);
}

TEST_CASE("sl_step_factor: exhaustive over SL(3,2)") {
  const auto& F = gf::make_field(2, 1);
  auto all = sl_all(F, 3);
  CHECK(all.size() == 168);
  for (const auto& phi : all) CHECK(step_witness_ok(sl_step_factor(phi), F, 3));
}

TEST_CASE("sl_step_factor: sampled SL(3,3) and SL(4,2)") {
  std::mt19937_64 rng(99);
  const auto& F3 = gf::make_field(3, 1);
  for (int i = 0; i < 100; ++i)
    CHECK(step_witness_ok(sl_step_factor(random_sl(F3, 3, rng)), F3, 3));
  const auto& F2 = gf::make_field(2, 1);
  for (int i = 0; i < 100; ++i)
    CHECK(step_witness_ok(sl_step_factor(random_sl(F2, 4, rng)), F2, 4));
}

TEST_CASE("sl_double_factor: trivial shapes and samples over SL(8,2)") {
  const auto& F = gf::make_field(2, 1);
  auto id = Matrix::identity(F, 8);
  CHECK(sl_double_factor(id).letters.empty());

  Matrix gamma = Matrix::identity(F, 8);
  gamma.at(0, 1) = 1;
  gamma.at(5, 6) = 1;
  auto w = sl_double_factor(gamma);
  CHECK(w.letters.size() == 1);
  CHECK(double_witness_ok(w, F, 8));

  std::mt19937_64 rng(12345);
  for (int i = 0; i < 25; ++i) {
    Matrix phi = random_sl(F, 8, rng);
    CHECK(double_witness_ok(sl_double_factor(phi), F, 8));
  }
  CHECK_THROWS_AS(sl_double_factor(Matrix::identity(F, 4)), Error);

  // odd characteristic goes through the constructive split route
  const auto& F3 = gf::make_field(3, 1);
  for (int i = 0; i < 5; ++i) {
    Matrix phi = random_sl(F3, 8, rng);
    CHECK(double_witness_ok(sl_double_factor(phi), F3, 8));
  }

  // double-size blocks exercise the cached invertible-list splits and the
  // randomized word search on 16 points
  for (int i = 0; i < 5; ++i) {
    Matrix phi = random_sl(F, 16, rng);
    CHECK(double_witness_ok(sl_double_factor(phi, i + 1), F, 16));
  }
}

TEST_CASE("sl_generic_sequence") {
  // one 8x8 involution matrix over GF(2), determinant 1
  auto seq = sl_generic_sequence(3, 2, 1, 0);
  REQUIRE(seq.size() == 1);
  CHECK(seq[0].det() == 1);
  CHECK((seq[0] * seq[0]).is_identity());

  // three commuting involutions over GF(3)
  seq = sl_generic_sequence(3, 3, 1, 2);
  REQUIRE(seq.size() == 3);
  for (const auto& a : seq)
    for (const auto& b : seq) CHECK(a * b == b * a);

  // tail clause mirrors the permutation-level sequence
  seq = sl_generic_sequence(3, 2, 1, 5);
  for (size_t i = 2; i < seq.size(); ++i) CHECK(seq[i] == seq[2]);
}
