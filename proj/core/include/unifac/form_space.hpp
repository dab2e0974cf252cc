#pragma once
#include <string>
#include <vector>

#include "unifac/matrix.hpp"

namespace unifac::forms {

enum class FormKind {
  symplectic,       // basis (e_1..e_d, f_1..f_d), (e_i,f_j) = delta_ij, alternating
  hermitian_even,   // basis (e_1..e_d, f_1..f_d) over GF(q^2)
  hermitian_odd,    // basis (e_1..e_d, w, f_d..f_1) over GF(q^2), (w,w) = 1
  quadratic_plus,   // basis (e_1..e_d, f_1..f_d), Q(e_i)=Q(f_i)=0
  quadratic_odd,    // basis (e_1..e_d, w, f_d..f_1), Q(w) = 1
  quadratic_minus,  // basis (e_1..e_d, w, z, f_d..f_1), <w,z> anisotropic
};

FormKind parse_kind(const std::string& name);
const char* kind_name(FormKind k);

/// A sesquilinear/quadratic form space over a finite field in its distinguished
/// basis. For hermitian kinds the field is GF(q^2) and conjugation is x -> x^q.
/// For quadratic kinds `quad` holds the upper-triangular matrix of Q, and the
/// bilinear form is its polarization (u,v) = Q(u+v) - Q(u) - Q(v).
struct FormSpace {
  FormKind kind;
  const gf::FiniteField* field = nullptr;
  uint32_t d = 0;    // number of hyperbolic pairs
  uint32_t dim = 0;  // total dimension
  uint64_t q0 = 0;   // base field size; field size is q0^2 for hermitian kinds
  mat::Matrix gram;
  mat::Matrix quad;  // zero matrix for non-quadratic kinds

  uint32_t conj(uint32_t x) const;
  std::string descriptor() const;  // "kind,d,q"
};

/// q is the base-field size (the hermitian kinds build GF(q^2) internally).
FormSpace make_form_space(FormKind kind, uint32_t d, uint64_t q);
FormSpace parse_space_descriptor(const std::string& text);

gf::FieldElement form_value(const FormSpace& s, const std::vector<uint32_t>& u,
                            const std::vector<uint32_t>& v);
gf::FieldElement quad_value(const FormSpace& s, const std::vector<uint32_t>& u);

/// Preserves the form (and Q for quadratic kinds); determinant 1 where the
/// group requires it. Orthogonal kinds are checked for form preservation and
/// determinant only (no Dickson invariant / spinor norm).
bool is_isometry(const FormSpace& s, const mat::Matrix& a);

/// Generators of the Weyl-group representatives inside the isometry group:
/// the (e_i e_i+1)(f_i f_i+1) permutation matrices plus the kind-appropriate
/// last generator. Every generator is an isometry.
std::vector<mat::Matrix> weyl_generators(FormKind kind, uint32_t d, uint64_t q);

}  // namespace unifac::forms
