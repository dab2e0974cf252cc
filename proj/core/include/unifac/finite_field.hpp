#pragma once
#include <atomic>
#include <cstdint>
#include <string>
#include <vector>

#include "unifac/errors.hpp"

namespace unifac::gf {

/// GF(p^k) with an explicit monic irreducible modulus over Z_p.
///
/// Elements are codes 0..q-1 with code = sum c_i * p^i, where (c_0,...,c_{k-1})
/// are the coefficients in the polynomial basis, least degree first. The modulus
/// is the code-order least monic irreducible of degree k, so serialized elements
/// are reproducible across runs. Fields are immutable and can be shared freely
/// across threads.
class FiniteField {
public:
  uint32_t p = 0;
  uint32_t k = 0;
  uint32_t q = 0;                  // p^k
  std::vector<uint32_t> modulus;   // length k+1, monic; modulus[i] is the x^i coefficient

  uint32_t zero() const { return 0; }
  uint32_t one() const { return 1; }

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;  // throws Singular on 0
  uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
  uint32_t pow(uint32_t a, uint64_t e) const;

  /// x -> x^(p^e); an automorphism fixing the prime subfield.
  uint32_t frobenius(uint32_t a, uint64_t e) const;

  /// Conjugation of a quadratic extension over GF(q0): x -> x^q0.
  /// Requires q0^2 == q.
  uint32_t conj(uint32_t a, uint64_t q0) const;

  std::vector<uint32_t> coeffs(uint32_t a) const;
  uint32_t from_coeffs(const std::vector<uint32_t>& c) const;

  /// Least multiplicative generator of the unit group (cached).
  uint32_t generator() const;
  uint64_t mul_order(uint32_t a) const;

  /// The elements of the subfield of size qsub (qsub = p^e with e | k), sorted by code.
  std::vector<uint32_t> subfield(uint64_t qsub) const;

  std::string print(uint32_t a) const;                 // "p^k:c0,c1,...,c{k-1}"
  std::string descriptor() const;                      // "p,k,m0 m1 ... mk"

private:
  friend const FiniteField& make_field(uint32_t, uint32_t);
  void build();
  mutable std::vector<uint32_t> mul_table_;  // q*q when q <= table cap
  mutable std::vector<uint32_t> inv_table_;
  mutable std::atomic<uint32_t> gen_ = 0;  // same value from every race
  uint32_t mul_poly(uint32_t a, uint32_t b) const;
};

/// Deterministic field constructor; (p,k) pairs are cached and shared.
const FiniteField& make_field(uint32_t p, uint32_t k);

/// A field element together with its field, for APIs that hand elements around.
struct FieldElement {
  const FiniteField* field = nullptr;
  uint32_t v = 0;

  FieldElement() = default;
  FieldElement(const FiniteField& f, uint32_t value) : field(&f), v(value) {}

  friend FieldElement operator+(FieldElement a, FieldElement b) {
    return {*a.field, a.field->add(a.v, b.v)};
  }
  friend FieldElement operator-(FieldElement a, FieldElement b) {
    return {*a.field, a.field->sub(a.v, b.v)};
  }
  friend FieldElement operator*(FieldElement a, FieldElement b) {
    return {*a.field, a.field->mul(a.v, b.v)};
  }
  friend bool operator==(FieldElement a, FieldElement b) {
    return a.field == b.field && a.v == b.v;
  }
  std::string str() const { return field->print(v); }
};

FieldElement parse_element(const std::string& text);          // "p^k:c0,c1,..."
const FiniteField& parse_field_descriptor(const std::string& text);

/// Least prime r > 2 with r | q^m - 1 and r not dividing q^j - 1 for 1 <= j < m.
/// Throws NoZsigmondy in the classical exceptional cases.
uint64_t zsigmondy_prime(uint64_t q, uint32_t m);

/// Least tau (by element code) in GF(q^d) whose Frobenius orbit
/// {tau, tau^q, ..., tau^{q^{d-1}}} is a basis of GF(q^d) over GF(q).
FieldElement normal_basis_generator(uint64_t q, uint32_t d);

// number-theory utilities
bool is_prime_u64(uint64_t n);
std::vector<uint64_t> factor_u64(uint64_t n);  // prime factors with multiplicity, sorted
uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t mod);

}  // namespace unifac::gf
