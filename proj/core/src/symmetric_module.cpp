#include "unifac/symmetric_module.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "unifac/squares.hpp"

namespace unifac::forms {

using mat::Matrix;

namespace {

using Vec = std::vector<uint32_t>;

uint32_t bilinear(const Matrix& s, const Vec& x, const Vec& y) {
  const auto& F = s.field();
  uint32_t acc = 0;
  for (uint32_t i = 0; i < s.dim(); ++i) {
    if (!x[i]) continue;
    for (uint32_t j = 0; j < s.dim(); ++j) {
      uint32_t v = s.at(i, j);
      if (!v || !y[j]) continue;
      acc = F.add(acc, F.mul(F.mul(x[i], v), y[j]));
    }
  }
  return acc;
}

Vec axpy(const gf::FiniteField& F, const Vec& x, uint32_t c, const Vec& y) {
  Vec r = x;
  for (size_t i = 0; i < r.size(); ++i) r[i] = F.add(r[i], F.mul(c, y[i]));
  return r;
}

bool is_zero_vec(const Vec& v) {
  for (uint32_t x : v)
    if (x) return false;
  return true;
}

bool is_symmetric(const Matrix& s) {
  for (uint32_t i = 0; i < s.dim(); ++i)
    for (uint32_t j = i + 1; j < s.dim(); ++j)
      if (s.at(i, j) != s.at(j, i)) return false;
  return true;
}

bool is_alternating(const Matrix& s) {
  for (uint32_t i = 0; i < s.dim(); ++i)
    if (s.at(i, i) != 0) return false;
  return true;
}

// square root in characteristic 2 (Frobenius is bijective)
uint32_t sqrt_char2(const gf::FiniteField& F, uint32_t x) {
  if (F.k == 1) return x;  // GF(2)
  return F.frobenius(x, F.k - 1);
}

std::vector<Matrix> sl_elements(const gf::FiniteField& F, uint32_t d) {
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

std::pair<Matrix, Matrix> congruence_diagonalize(const Matrix& s) {
  const auto& F = s.field();
  const uint32_t d = s.dim();
  require(is_symmetric(s), Err::shape_mismatch, "input must be symmetric");

  std::vector<Vec> finished;  // pairwise orthogonal, nonzero B(u,u)
  std::vector<Vec> remaining;
  for (uint32_t i = 0; i < d; ++i) {
    Vec e(d, 0);
    e[i] = 1;
    remaining.push_back(e);
  }

  auto orthogonalize_remaining = [&](const Vec& u) {
    uint32_t a = bilinear(s, u, u);
    uint32_t ainv = F.inv(a);
    for (auto& r : remaining) {
      uint32_t c = bilinear(s, r, u);
      if (c) r = axpy(F, r, F.neg(F.mul(c, ainv)), u);
    }
  };

  std::vector<Vec> null_rows;
  while (!remaining.empty()) {
    // anisotropic single?
    int found = -1;
    for (size_t i = 0; i < remaining.size() && found < 0; ++i)
      if (bilinear(s, remaining[i], remaining[i]) != 0) found = static_cast<int>(i);
    if (found >= 0) {
      Vec u = remaining[found];
      remaining.erase(remaining.begin() + found);
      orthogonalize_remaining(u);
      finished.push_back(std::move(u));
      continue;
    }
    // anisotropic pair? (only possible in odd characteristic)
    bool done = false;
    if (F.p != 2) {
      for (size_t i = 0; i < remaining.size() && !done; ++i)
        for (size_t j = i + 1; j < remaining.size() && !done; ++j) {
          Vec v = axpy(F, remaining[i], 1, remaining[j]);
          if (bilinear(s, v, v) != 0) {
            remaining[i] = v;
            Vec u = remaining[i];
            remaining.erase(remaining.begin() + i);
            orthogonalize_remaining(u);
            finished.push_back(std::move(u));
            done = true;
          }
        }
      if (done) continue;
    }
    // the form restricted to the remaining space is alternating; if it is zero
    // we are finished, otherwise recombine a hyperbolic pair with an earlier
    // anisotropic vector (characteristic 2 only)
    size_t hi = remaining.size(), hj = remaining.size();
    for (size_t i = 0; i < remaining.size() && hi == remaining.size(); ++i)
      for (size_t j = i + 1; j < remaining.size(); ++j)
        if (bilinear(s, remaining[i], remaining[j]) != 0) {
          hi = i;
          hj = j;
          break;
        }
    if (hi == remaining.size()) {
      for (auto& r : remaining) null_rows.push_back(r);
      remaining.clear();
      break;
    }
    require(F.p == 2 && !finished.empty(), Err::shape_mismatch,
            "alternating part cannot be diagonalized");
    Vec u = finished.back();
    finished.pop_back();
    Vec ri = remaining[hi], rj = remaining[hj];
    remaining.erase(remaining.begin() + hj);
    remaining.erase(remaining.begin() + hi);
    uint32_t a = bilinear(s, u, u);
    uint32_t b = bilinear(s, ri, rj);
    uint32_t e = F.div(a, b);
    Vec u1 = axpy(F, u, 1, ri);
    Vec u2 = axpy(F, u, e, rj);
    Vec u3 = axpy(F, u1, e, rj);
    for (Vec* nu : {&u1, &u2, &u3}) {
      orthogonalize_remaining(*nu);
      finished.push_back(*nu);
    }
  }

  Matrix M(F, d);
  uint32_t row = 0;
  for (const auto& u : finished) {
    for (uint32_t j = 0; j < d; ++j) M.at(row, j) = u[j];
    ++row;
  }
  for (const auto& u : null_rows) {
    for (uint32_t j = 0; j < d; ++j) M.at(row, j) = u[j];
    ++row;
  }
  // normalize to SL; scaling a row only squares one diagonal entry
  uint32_t det = M.det();
  require(det != 0, Err::singular, "diagonalizing basis degenerated");
  if (det != 1) {
    uint32_t c = F.inv(det);
    for (uint32_t j = 0; j < d; ++j) M.at(0, j) = F.mul(M.at(0, j), c);
  }
  Matrix C = M * s * M.transpose();
  for (uint32_t i = 0; i < d; ++i)
    for (uint32_t j = 0; j < d; ++j)
      require(i == j || C.at(i, j) == 0, Err::shape_mismatch, "diagonalization failed");
  return {M, C};
}

mat::Matrix symmetric_generator(const gf::FiniteField& f, uint32_t d, int which) {
  std::vector<uint32_t> diag(d, 0);
  if (f.p > 3) {
    if (which == 1) {
      diag[0] = 1;
    } else {
      for (uint32_t i = 1; i < d; ++i) diag[i] = 1;
    }
  } else if (f.p == 3) {
    if (which == 1) {
      diag[0] = 1;
      if (d >= 2) diag[1] = 1;
    } else {
      for (uint32_t i = 1; i < d; ++i) diag[i] = 1;
      if (d % 2 == 0) diag[0] = 1;
    }
  } else {  // p == 2
    if (which == 1) {
      for (uint32_t i = 0; i < std::min(d, 3u); ++i) diag[i] = 1;
    } else {
      for (uint32_t i = 1; i < d; ++i) diag[i] = 1;
    }
  }
  return Matrix::diagonal(f, diag);
}

uint32_t symmetric_term_bound(const gf::FiniteField& f, uint32_t d) {
  if (f.p > 3) return 8;
  if (f.p == 3) return 24;
  if (d == 2) return 3;
  return 4 * d + 8;
}

const std::vector<Matrix>& six_term_table_gf3(uint32_t pattern) {
  static std::mutex mu;
  static std::vector<Matrix> tables[4];
  std::lock_guard<std::mutex> lock(mu);
  require(pattern < 4, Err::parse_error, "pattern index 0..3");
  if (!tables[pattern].empty()) return tables[pattern];

  const auto& F = gf::make_field(3, 1);
  auto sl = sl_elements(F, 2);
  std::vector<Matrix> prods;
  for (const auto& a : sl) prods.push_back(a * a.transpose());
  // meet in the middle over sums of three
  std::map<std::vector<uint32_t>, std::array<uint32_t, 3>> half;
  for (uint32_t i = 0; i < sl.size(); ++i)
    for (uint32_t j = i; j < sl.size(); ++j)
      for (uint32_t k = j; k < sl.size(); ++k) {
        Matrix sum = prods[i] + prods[j] + prods[k];
        half.emplace(sum.raw(), std::array<uint32_t, 3>{i, j, k});
      }
  for (uint32_t pat = 0; pat < 4; ++pat) {
    Matrix target(F, 2);
    target.at(0, 0) = pat & 1;
    target.at(1, 1) = (pat >> 1) & 1;
    bool found = false;
    for (const auto& [sumraw, ijk] : half) {
      Matrix sum(F, 2);
      sum.at(0, 0) = sumraw[0];
      sum.at(0, 1) = sumraw[1];
      sum.at(1, 0) = sumraw[2];
      sum.at(1, 1) = sumraw[3];
      auto it = half.find((target - sum).raw());
      if (it != half.end()) {
        for (uint32_t x : ijk) tables[pat].push_back(sl[x]);
        for (uint32_t x : it->second) tables[pat].push_back(sl[x]);
        found = true;
        break;
      }
    }
    require(found, Err::search_exhausted, "no six-term pattern found");
  }
  return tables[pattern];
}

const std::vector<Matrix>& four_term_table_gf2() {
  static std::mutex mu;
  static std::vector<Matrix> table;
  std::lock_guard<std::mutex> lock(mu);
  if (!table.empty()) return table;

  const auto& F = gf::make_field(2, 1);
  auto sl = sl_elements(F, 3);
  std::vector<Matrix> prods;
  for (const auto& a : sl) prods.push_back(a * a.transpose());
  std::map<std::vector<uint32_t>, std::array<uint32_t, 2>> half;
  for (uint32_t i = 0; i < sl.size(); ++i)
    for (uint32_t j = i; j < sl.size(); ++j)
      half.emplace((prods[i] + prods[j]).raw(), std::array<uint32_t, 2>{i, j});
  Matrix target(F, 3);
  target.at(0, 0) = 1;
  for (const auto& [sumraw, ij] : half) {
    Matrix sum(F, 3);
    for (uint32_t i = 0; i < 3; ++i)
      for (uint32_t j = 0; j < 3; ++j) sum.at(i, j) = sumraw[i * 3 + j];
    auto it = half.find((target - sum).raw());
    if (it != half.end()) {
      table = {sl[ij[0]], sl[ij[1]], sl[it->second[0]], sl[it->second[1]]};
      return table;
    }
  }
  fail(Err::search_exhausted, "no four-term pattern found");
}

namespace {

// embed a small block matrix into SL(d,q) at the given coordinates, identity
// elsewhere
Matrix embed(const gf::FiniteField& F, uint32_t d, const Matrix& block,
             const std::vector<uint32_t>& coords) {
  Matrix m = Matrix::identity(F, d);
  for (uint32_t i = 0; i < block.dim(); ++i)
    for (uint32_t j = 0; j < block.dim(); ++j) m.at(coords[i], coords[j]) = block.at(i, j);
  return m;
}

// GF(3) codes embed into GF(3^e) as constants, GF(2) codes likewise
Matrix lift(const gf::FiniteField& F, uint32_t d, const Matrix& m) {
  Matrix r(F, d);
  for (uint32_t i = 0; i < d; ++i)
    for (uint32_t j = 0; j < d; ++j) r.at(i, j) = m.at(i, j);
  return r;
}

void factor_case_odd_large(const Matrix& C, const Matrix& Minv,
                           SymmetricCombination& out) {
  // characteristic > 3: four nonzero squares per diagonal entry
  const auto& F = C.field();
  const uint32_t d = C.dim();
  if (C.at(0, 0) != 0) {
    auto bs = four_squares(F, C.at(0, 0));
    for (uint32_t t = 0; t < 4; ++t) {
      std::vector<uint32_t> diag(d, 1);
      diag[0] = bs[t];
      diag[d - 1] = F.inv(bs[t]);
      out.terms.push_back({Minv * Matrix::diagonal(F, diag), "D1"});
    }
  }
  bool rest = false;
  for (uint32_t j = 1; j < d; ++j)
    if (C.at(j, j) != 0) rest = true;
  if (rest) {
    std::vector<std::array<uint32_t, 4>> bs(d);
    for (uint32_t j = 1; j < d; ++j) bs[j] = four_squares(F, C.at(j, j));
    for (uint32_t t = 0; t < 4; ++t) {
      std::vector<uint32_t> diag(d, 1);
      uint32_t prod = 1;
      for (uint32_t j = 1; j < d; ++j) {
        diag[j] = bs[j][t];
        prod = F.mul(prod, bs[j][t]);
      }
      diag[0] = F.inv(prod);
      out.terms.push_back({Minv * Matrix::diagonal(F, diag), "D2"});
    }
  }
}

void factor_case_char3(const Matrix& C, const Matrix& Minv, SymmetricCombination& out) {
  const auto& F = C.field();
  const uint32_t d = C.dim();
  std::vector<uint32_t> alpha(d), beta(d);
  for (uint32_t j = 0; j < d; ++j) {
    auto ab = two_squares(F, C.at(j, j));
    alpha[j] = ab[0];
    beta[j] = ab[1];
  }

  auto emit = [&](const std::vector<uint32_t>& vals) {
    // vals[j] = contribution sqrt at coordinate j (zero = absent)
    // D1 group covers coordinate 0, D2 group the rest
    if (vals[0] != 0) {
      // six-term pattern diag(1,0) on coordinates (0,1), scaled by vals[0]
      std::vector<uint32_t> rd(d, 1);
      rd[0] = vals[0];
      rd[1] = F.inv(vals[0]);
      Matrix R = Matrix::diagonal(F, rd);
      for (const auto& A : six_term_table_gf3(1)) {
        Matrix Ahat = embed(F, d, lift(F, 2, A), {0, 1});
        out.terms.push_back({Minv * R * Ahat, "D1"});
      }
    }
    bool rest = false;
    for (uint32_t j = 1; j < d; ++j)
      if (vals[j]) rest = true;
    if (!rest) return;
    // pair the D2-coordinates; delta = 1 exactly when d is even
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    for (uint32_t start = (d % 2 == 0) ? 0 : 1; start + 1 < d; start += 2)
      pairs.push_back({start, start + 1});
    std::vector<uint32_t> rd(d, 1);
    uint32_t prod = 1;
    for (uint32_t j = 1; j < d; ++j)
      if (vals[j]) {
        rd[j] = vals[j];
        prod = F.mul(prod, vals[j]);
      }
    rd[0] = F.inv(prod);
    Matrix R = Matrix::diagonal(F, rd);
    for (uint32_t t = 0; t < 6; ++t) {
      Matrix Ahat = Matrix::identity(F, d);
      for (auto [a, b] : pairs) {
        uint32_t pat = (a >= 1 && vals[a] ? 1 : 0) | (vals[b] ? 2 : 0);
        const Matrix& blk = six_term_table_gf3(pat)[t];
        Ahat.at(a, a) = blk.at(0, 0);
        Ahat.at(a, b) = blk.at(0, 1);
        Ahat.at(b, a) = blk.at(1, 0);
        Ahat.at(b, b) = blk.at(1, 1);
      }
      out.terms.push_back({Minv * R * Ahat, "D2"});
    }
  };

  std::vector<uint32_t> avals(alpha), bvals(beta);
  bool any_a = false, any_b = false;
  for (uint32_t j = 0; j < d; ++j) {
    if (avals[j]) any_a = true;
    if (bvals[j]) any_b = true;
  }
  if (any_a) emit(avals);
  if (any_b) emit(bvals);
}

void factor_case_char2_large(const Matrix& s, SymmetricCombination& out) {
  // split an alternating matrix into non-alternating summands, diagonalize
  // each, then hit every diagonal entry with the four-term 3x3 pattern
  const auto& F = s.field();
  const uint32_t d = s.dim();
  std::vector<Matrix> summands;
  if (is_alternating(s)) {
    Matrix e00(F, d), e11(F, d);
    e00.at(0, 0) = 1;
    e11.at(1, 1) = 1;
    summands = {e00, e11, s + e00 + e11};
  } else {
    summands = {s};
  }
  for (const auto& part : summands) {
    bool zero = true;
    for (uint32_t v : part.raw())
      if (v) zero = false;
    if (zero) continue;
    auto [M, C] = congruence_diagonalize(part);
    Matrix Minv = M.inverse();
    for (uint32_t j = 0; j < d; ++j) {
      uint32_t lam = C.at(j, j);
      if (!lam) continue;
      uint32_t mu = sqrt_char2(F, lam);
      std::vector<uint32_t> coords = {j, 0, 0};
      uint32_t fill = 0;
      for (uint32_t c = 1; c < 3; ++c) {
        while (fill == j) ++fill;
        coords[c] = fill++;
      }
      // sigma carries D1's support {0,1,2} onto the target coordinates
      std::vector<uint32_t> img(d);
      std::vector<bool> taken(d, false);
      for (uint32_t c = 0; c < 3; ++c) {
        img[c] = coords[c];
        taken[coords[c]] = true;
      }
      uint32_t next = 0;
      for (uint32_t c = 3; c < d; ++c) {
        while (taken[next]) ++next;
        img[c] = next;
        taken[next] = true;
      }
      Matrix P = Matrix::permutation(F, perm::Permutation(img));
      std::vector<uint32_t> rd(d, 1);
      rd[j] = mu;
      rd[coords[1]] = F.inv(mu);
      Matrix R = Matrix::diagonal(F, rd);
      for (const auto& A : four_term_table_gf2()) {
        Matrix Ahat = P * embed(F, d, lift(F, 3, A), {0, 1, 2});
        out.terms.push_back({Minv * R * Ahat, "D1"});
      }
    }
  }
}

void factor_case_char2_d2(const Matrix& s, SymmetricCombination& out) {
  // rank-one assembly over D2 = diag(0,1): A*D2*A^T = (second column)(..)^T
  const auto& F = s.field();
  auto push_rank1 = [&](uint32_t v0, uint32_t v1) {
    if (v0 == 0 && v1 == 0) return;
    Matrix A(F, 2);
    A.at(0, 1) = v0;
    A.at(1, 1) = v1;
    if (v1 != 0) {
      A.at(0, 0) = F.inv(v1);
      A.at(1, 0) = 0;
    } else {
      A.at(0, 0) = 0;
      A.at(1, 0) = F.inv(v0);
    }
    out.terms.push_back({A, "D2"});
  };
  uint32_t a = s.at(0, 0), b = s.at(0, 1), c = s.at(1, 1);
  uint32_t junk0 = 0, junk1 = 0;
  if (b != 0) {
    push_rank1(1, b);  // contributes diag(1, b^2) plus the off-diagonal b
    junk0 = 1;
    junk1 = F.mul(b, b);
  }
  uint32_t r0 = F.sub(a, junk0), r1 = F.sub(c, junk1);
  if (r0) push_rank1(sqrt_char2(F, r0), 0);
  if (r1) push_rank1(0, sqrt_char2(F, r1));
}

}  // namespace

SymmetricCombination symmetric_module_factor(const Matrix& s) {
  const auto& F = s.field();
  const uint32_t d = s.dim();
  require(d >= 2, Err::dimension_too_small, "need d >= 2");
  require(is_symmetric(s), Err::shape_mismatch, "input must be symmetric");

  SymmetricCombination out;
  out.target = s;
  out.bound = symmetric_term_bound(F, d);

  bool zero = true;
  for (uint32_t v : s.raw())
    if (v) zero = false;
  if (zero) return out;
  if (s == symmetric_generator(F, d, 1)) {
    out.terms.push_back({Matrix::identity(F, d), "D1"});
    return out;
  }
  if (s == symmetric_generator(F, d, 2)) {
    out.terms.push_back({Matrix::identity(F, d), "D2"});
    return out;
  }

  if (F.p == 2) {
    if (d == 2)
      factor_case_char2_d2(s, out);
    else
      factor_case_char2_large(s, out);
    return out;
  }

  auto [M, C] = congruence_diagonalize(s);
  Matrix Minv = M.inverse();
  if (F.p == 3)
    factor_case_char3(C, Minv, out);
  else
    factor_case_odd_large(C, Minv, out);
  return out;
}

bool verify_symmetric_combination(const SymmetricCombination& c) {
  const auto& F = c.target.field();
  const uint32_t d = c.target.dim();
  if (c.terms.size() > c.bound) return false;
  Matrix acc(F, d);
  for (const auto& [A, tag] : c.terms) {
    if (A.det() != 1) return false;
    if (tag != "D1" && tag != "D2") return false;
    Matrix D = symmetric_generator(F, d, tag == "D1" ? 1 : 2);
    acc = acc + A * D * A.transpose();
  }
  return acc == c.target;
}

}  // namespace unifac::forms
