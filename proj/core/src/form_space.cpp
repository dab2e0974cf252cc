#include "unifac/form_space.hpp"

#include <sstream>

namespace unifac::forms {

namespace {

// prime-power split q = p^e
void split_prime_power(uint64_t q, uint32_t& p, uint32_t& e) {
  uint32_t base = 0;
  for (uint32_t cand = 2; uint64_t(cand) * cand <= q; ++cand)
    if (q % cand == 0) {
      base = cand;
      break;
    }
  if (base == 0) base = static_cast<uint32_t>(q);
  uint64_t rest = q;
  e = 0;
  while (rest > 1) {
    require(rest % base == 0, Err::non_prime, "q is not a prime power");
    rest /= base;
    ++e;
  }
  p = base;
}

}  // namespace

FormKind parse_kind(const std::string& name) {
  if (name == "symplectic") return FormKind::symplectic;
  if (name == "hermitian" || name == "hermitian-even") return FormKind::hermitian_even;
  if (name == "hermitian-odd") return FormKind::hermitian_odd;
  if (name == "quadratic-plus") return FormKind::quadratic_plus;
  if (name == "quadratic-odd") return FormKind::quadratic_odd;
  if (name == "quadratic-minus") return FormKind::quadratic_minus;
  fail(Err::parse_error, "unknown form kind: " + name);
}

const char* kind_name(FormKind k) {
  switch (k) {
    case FormKind::symplectic: return "symplectic";
    case FormKind::hermitian_even: return "hermitian-even";
    case FormKind::hermitian_odd: return "hermitian-odd";
    case FormKind::quadratic_plus: return "quadratic-plus";
    case FormKind::quadratic_odd: return "quadratic-odd";
    case FormKind::quadratic_minus: return "quadratic-minus";
  }
  return "?";
}

uint32_t FormSpace::conj(uint32_t x) const {
  if (kind == FormKind::hermitian_even || kind == FormKind::hermitian_odd)
    return field->frobenius(x, field->k / 2);
  return x;
}

std::string FormSpace::descriptor() const {
  std::ostringstream os;
  os << kind_name(kind) << "," << d << "," << q0;
  return os.str();
}

FormSpace make_form_space(FormKind kind, uint32_t d, uint64_t q) {
  require(d >= 1, Err::dimension_too_small, "need d >= 1");
  uint32_t p, e;
  split_prime_power(q, p, e);
  const bool hermitian = kind == FormKind::hermitian_even || kind == FormKind::hermitian_odd;
  const gf::FiniteField& F = gf::make_field(p, hermitian ? 2 * e : e);

  FormSpace s;
  s.kind = kind;
  s.field = &F;
  s.d = d;
  s.q0 = q;
  switch (kind) {
    case FormKind::symplectic:
    case FormKind::hermitian_even:
    case FormKind::quadratic_plus: s.dim = 2 * d; break;
    case FormKind::hermitian_odd:
    case FormKind::quadratic_odd: s.dim = 2 * d + 1; break;
    case FormKind::quadratic_minus: s.dim = 2 * d + 2; break;
  }
  s.gram = mat::Matrix(F, s.dim);
  s.quad = mat::Matrix(F, s.dim);

  auto f_index = [&](uint32_t i) {  // 0-based e-index i -> index of the paired f
    switch (kind) {
      case FormKind::symplectic:
      case FormKind::hermitian_even:
      case FormKind::quadratic_plus: return d + i;
      case FormKind::hermitian_odd:
      case FormKind::quadratic_odd: return 2 * d - i;
      case FormKind::quadratic_minus: return 2 * d + 1 - i;
    }
    return 0u;
  };

  for (uint32_t i = 0; i < d; ++i) {
    uint32_t fi = f_index(i);
    switch (kind) {
      case FormKind::symplectic:
        s.gram.at(i, fi) = 1;
        s.gram.at(fi, i) = F.neg(1);
        break;
      case FormKind::hermitian_even:
      case FormKind::hermitian_odd:
        s.gram.at(i, fi) = 1;
        s.gram.at(fi, i) = 1;
        break;
      case FormKind::quadratic_plus:
      case FormKind::quadratic_odd:
      case FormKind::quadratic_minus:
        s.quad.at(i, fi) = 1;
        break;
    }
  }
  if (kind == FormKind::hermitian_odd) s.gram.at(d, d) = 1;
  if (kind == FormKind::quadratic_odd) s.quad.at(d, d) = 1;
  if (kind == FormKind::quadratic_minus) {
    // Q(w) = 1, (w,z) = 1, Q(z) = zeta with x^2 + x + zeta irreducible
    uint32_t zeta = F.q;
    for (uint32_t cand = 0; cand < F.q && zeta == F.q; ++cand) {
      bool root = false;
      for (uint32_t x = 0; x < F.q; ++x)
        if (F.add(F.add(F.mul(x, x), x), cand) == 0) {
          root = true;
          break;
        }
      if (!root) zeta = cand;
    }
    require(zeta < F.q, Err::search_exhausted, "no anisotropic parameter");
    s.quad.at(d, d) = 1;
    s.quad.at(d, d + 1) = 1;
    s.quad.at(d + 1, d + 1) = zeta;
  }
  // polarization of Q
  if (kind == FormKind::quadratic_plus || kind == FormKind::quadratic_odd ||
      kind == FormKind::quadratic_minus)
    s.gram = s.quad + s.quad.transpose();
  return s;
}

FormSpace parse_space_descriptor(const std::string& text) {
  std::stringstream ss(text);
  std::string kind, sd, sq;
  require(static_cast<bool>(std::getline(ss, kind, ',')) &&
              static_cast<bool>(std::getline(ss, sd, ',')) &&
              static_cast<bool>(std::getline(ss, sq, ',')),
          Err::parse_error, "space descriptor is kind,d,q");
  try {
    return make_form_space(parse_kind(kind), static_cast<uint32_t>(std::stoul(sd)),
                           std::stoull(sq));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Err::parse_error, "bad space descriptor: " + text);
  }
}

gf::FieldElement form_value(const FormSpace& s, const std::vector<uint32_t>& u,
                            const std::vector<uint32_t>& v) {
  require(u.size() == s.dim && v.size() == s.dim, Err::dimension_mismatch,
          "vector length mismatch");
  const auto& F = *s.field;
  uint32_t acc = 0;
  for (uint32_t i = 0; i < s.dim; ++i) {
    if (!u[i]) continue;
    uint32_t ui = s.conj(u[i]);
    for (uint32_t j = 0; j < s.dim; ++j) {
      uint32_t g = s.gram.at(i, j);
      if (!g || !v[j]) continue;
      acc = F.add(acc, F.mul(F.mul(ui, g), v[j]));
    }
  }
  return {F, acc};
}

gf::FieldElement quad_value(const FormSpace& s, const std::vector<uint32_t>& u) {
  require(u.size() == s.dim, Err::dimension_mismatch, "vector length mismatch");
  const auto& F = *s.field;
  uint32_t acc = 0;
  for (uint32_t i = 0; i < s.dim; ++i) {
    if (!u[i]) continue;
    for (uint32_t j = i; j < s.dim; ++j) {
      uint32_t c = s.quad.at(i, j);
      if (!c || !u[j]) continue;
      acc = F.add(acc, F.mul(F.mul(u[i], c), u[j]));
    }
  }
  return {F, acc};
}

bool is_isometry(const FormSpace& s, const mat::Matrix& a) {
  if (a.dim() != s.dim || &a.field() != s.field) return false;
  const auto& F = *s.field;
  if (a.det() != 1) return false;

  // conj(A)^T G A = G
  mat::Matrix ac(F, s.dim);
  for (uint32_t i = 0; i < s.dim; ++i)
    for (uint32_t j = 0; j < s.dim; ++j) ac.at(i, j) = s.conj(a.at(i, j));
  if (!(ac.transpose() * s.gram * a == s.gram)) return false;

  const bool quadratic = s.kind == FormKind::quadratic_plus ||
                         s.kind == FormKind::quadratic_odd ||
                         s.kind == FormKind::quadratic_minus;
  if (quadratic) {
    for (uint32_t j = 0; j < s.dim; ++j) {
      std::vector<uint32_t> col(s.dim), basis(s.dim, 0);
      for (uint32_t i = 0; i < s.dim; ++i) col[i] = a.at(i, j);
      basis[j] = 1;
      if (!(quad_value(s, col) == quad_value(s, basis))) return false;
    }
  }
  return true;
}

std::vector<mat::Matrix> weyl_generators(FormKind kind, uint32_t d, uint64_t q) {
  FormSpace s = make_form_space(kind, d, q);
  const auto& F = *s.field;
  std::vector<mat::Matrix> gens;

  auto f_index = [&](uint32_t i) {
    switch (kind) {
      case FormKind::symplectic:
      case FormKind::hermitian_even:
      case FormKind::quadratic_plus: return d + i;
      case FormKind::hermitian_odd:
      case FormKind::quadratic_odd: return 2 * d - i;
      case FormKind::quadratic_minus: return 2 * d + 1 - i;
    }
    return 0u;
  };

  for (uint32_t i = 0; i + 1 < d; ++i) {
    auto w = mat::Matrix::permutation(
        F, perm::Permutation::from_transpositions(
               s.dim, {{i, i + 1}, {f_index(i), f_index(i + 1)}}));
    gens.push_back(w);
  }

  const uint32_t ed = d - 1, fd = f_index(d - 1);
  switch (kind) {
    case FormKind::symplectic: {
      // e_d -> -f_d, f_d -> e_d
      mat::Matrix w = mat::Matrix::identity(F, s.dim);
      w.at(ed, ed) = 0;
      w.at(fd, fd) = 0;
      w.at(fd, ed) = F.neg(1);
      w.at(ed, fd) = 1;
      gens.push_back(w);
      break;
    }
    case FormKind::quadratic_plus:
    case FormKind::hermitian_even: {
      // even-weight generator: swap the last two hyperbolic pairs
      require(d >= 2, Err::dimension_too_small, "plus-type last generator needs d >= 2");
      uint32_t e2 = d - 2, f2 = f_index(d - 2);
      gens.push_back(mat::Matrix::permutation(
          F, perm::Permutation::from_transpositions(
                 s.dim, {{ed, fd}, {e2, f2}})));
      break;
    }
    case FormKind::hermitian_odd:
    case FormKind::quadratic_odd: {
      // swap e_d <-> f_d, w -> -w keeps the determinant at 1
      mat::Matrix w = mat::Matrix::identity(F, s.dim);
      w.at(ed, ed) = 0;
      w.at(fd, fd) = 0;
      w.at(ed, fd) = 1;
      w.at(fd, ed) = 1;
      w.at(d, d) = F.neg(1);
      gens.push_back(w);
      break;
    }
    case FormKind::quadratic_minus: {
      // swap e_d <-> f_d and pick a determinant -1 isometry of <w,z> by scan
      mat::Matrix best(F, s.dim);
      bool found = false;
      for (uint32_t a = 0; a < F.q && !found; ++a)
        for (uint32_t b = 0; b < F.q && !found; ++b)
          for (uint32_t c = 0; c < F.q && !found; ++c)
            for (uint32_t dd = 0; dd < F.q && !found; ++dd) {
              mat::Matrix w = mat::Matrix::identity(F, s.dim);
              w.at(ed, ed) = 0;
              w.at(fd, fd) = 0;
              w.at(ed, fd) = 1;
              w.at(fd, ed) = 1;
              w.at(d, d) = a;
              w.at(d + 1, d) = c;
              w.at(d, d + 1) = b;
              w.at(d + 1, d + 1) = dd;
              if (is_isometry(s, w)) {
                best = w;
                found = true;
              }
            }
      require(found, Err::search_exhausted, "no minus-type last generator found");
      gens.push_back(best);
      break;
    }
  }
  return gens;
}

}  // namespace unifac::forms
