#include "unifac/sl_factor.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "unifac/bruhat.hpp"
#include "unifac/config.hpp"
#include "unifac/generic_sequence.hpp"
#include "unifac/perm_factor.hpp"

namespace unifac::mat {

namespace {

uint64_t pow_u64(uint64_t b, uint32_t e) {
  uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

Matrix from_vkey(const gf::FiniteField& F, uint32_t d, uint64_t v) {
  Matrix m(F, d);
  for (uint32_t i = 0; i < d; ++i)
    for (uint32_t j = 0; j < d; ++j) {
      m.at(i, j) = static_cast<uint32_t>(v % F.q);
      v /= F.q;
    }
  return m;
}

// invertible d x d matrices sorted by their entry code, cached per (field, d)
const std::vector<Matrix>& invertible_list(const gf::FiniteField& F, uint32_t d) {
  static std::mutex mu;
  static std::map<std::pair<const gf::FiniteField*, uint32_t>, std::vector<Matrix>*> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(&F, d);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  auto* list = new std::vector<Matrix>();
  uint64_t total = pow_u64(F.q, d * d);
  for (uint64_t v = 0; v < total; ++v) {
    Matrix m = from_vkey(F, d, v);
    if (m.invertible()) list->push_back(std::move(m));
  }
  cache[key] = list;
  return *list;
}

// rank factorization s = P * (I_r + 0) * Q with P, Q invertible
uint32_t rank_factor(const Matrix& s, Matrix& P, Matrix& Q) {
  const auto& F = s.field();
  const uint32_t d = s.dim();
  Matrix m = s;
  Matrix left = Matrix::identity(F, d), right = Matrix::identity(F, d);
  uint32_t r = 0;
  for (uint32_t step = 0; step < d; ++step) {
    uint32_t pi = d, pj = d;
    for (uint32_t i = r; i < d && pi == d; ++i)
      for (uint32_t j = r; j < d; ++j)
        if (m.at(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == d) break;
    if (pi != r)
      for (uint32_t j = 0; j < d; ++j) {
        std::swap(m.at(pi, j), m.at(r, j));
        std::swap(left.at(pi, j), left.at(r, j));
      }
    if (pj != r)
      for (uint32_t i = 0; i < d; ++i) {
        std::swap(m.at(i, pj), m.at(i, r));
        std::swap(right.at(i, pj), right.at(i, r));
      }
    uint32_t inv = F.inv(m.at(r, r));
    for (uint32_t j = 0; j < d; ++j) {
      m.at(r, j) = F.mul(m.at(r, j), inv);
      left.at(r, j) = F.mul(left.at(r, j), inv);
    }
    for (uint32_t i = r + 1; i < d; ++i) {
      uint32_t f = m.at(i, r);
      if (!f) continue;
      for (uint32_t j = 0; j < d; ++j) {
        m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
        left.at(i, j) = F.sub(left.at(i, j), F.mul(f, left.at(r, j)));
      }
    }
    for (uint32_t j = r + 1; j < d; ++j) {
      uint32_t f = m.at(r, j);
      if (!f) continue;
      for (uint32_t i = 0; i < d; ++i) {
        m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(i, r)));
        right.at(i, j) = F.sub(right.at(i, j), F.mul(f, right.at(i, r)));
      }
    }
    ++r;
  }
  P = left.inverse();
  Q = right.inverse();
  return r;
}

}  // namespace

std::pair<Matrix, Matrix> split_nonsingular(const Matrix& s) {
  const auto& F = s.field();
  const uint32_t d = s.dim();

  bool zero = true;
  for (uint32_t v : s.raw())
    if (v) {
      zero = false;
      break;
    }
  if (zero) {
    Matrix i = Matrix::identity(F, d), ni(F, d);
    for (uint32_t x = 0; x < d; ++x) ni.at(x, x) = F.neg(1);
    return {i, ni};
  }

  if (d == 1) {
    for (uint32_t a = 1; a < F.q; ++a) {
      uint32_t b = F.sub(s.at(0, 0), a);
      if (b != 0) {
        Matrix m1(F, 1), m2(F, 1);
        m1.at(0, 0) = a;
        m2.at(0, 0) = b;
        return {m1, m2};
      }
    }
    fail(Err::no_split, "1x1 over GF(2) with entry 1 has no invertible split");
  }

  const uint64_t space = pow_u64(F.q, d * d);
  if (space <= limits().pair_table_cap) {
    for (const Matrix& s1 : invertible_list(F, d)) {
      Matrix s2 = s - s1;
      if (s2.invertible()) return {s1, s2};
    }
    fail(Err::no_split, "exhaustive scan found no split");  // cannot happen for d >= 2
  }

  // constructive route: s = P D_r Q; split D_r against a cycle or companion matrix
  Matrix P(F, d), Q(F, d);
  uint32_t r = rank_factor(s, P, Q);
  if (r == d) {
    // companion matrix of x^d - x^(d-1) - 1: both C and I - C are invertible
    Matrix C(F, d);
    for (uint32_t i = 0; i + 1 < d; ++i) C.at(i + 1, i) = 1;
    C.at(0, d - 1) = 1;
    C.at(d - 1, d - 1) = 1;
    Matrix first = s * C;
    return {first, s - first};
  }
  // cycle permutation matrix sigma; D_r - sigma has a forced full-cycle expansion
  Matrix sigma(F, d);
  for (uint32_t i = 0; i + 1 < d; ++i) sigma.at(i + 1, i) = 1;
  sigma.at(0, d - 1) = 1;
  Matrix Dr(F, d);
  for (uint32_t i = 0; i < r; ++i) Dr.at(i, i) = 1;
  Matrix first = P * sigma * Q;
  return {first, P * (Dr - sigma) * Q};
}

bool is_step_s_letter(const Matrix& g) {
  const uint32_t n = g.dim();
  for (uint32_t i = 0; i + 1 < n; ++i)
    if (g.at(i, n - 1) != 0 || g.at(n - 1, i) != 0) return false;
  if (g.at(n - 1, n - 1) != 1) return false;
  return g.det() == 1;
}

bool is_step_t_letter(const Matrix& g) {
  const uint32_t n = g.dim();
  for (uint32_t i = 1; i < n; ++i)
    if (g.at(i, 0) != 0 || g.at(0, i) != 0) return false;
  if (g.at(0, 0) != 1) return false;
  return g.det() == 1;
}

bool is_gamma_letter(const Matrix& g) {
  const uint32_t n = g.dim(), h = n / 2;
  const auto& F = g.field();
  for (uint32_t i = 0; i < h; ++i)
    for (uint32_t j = h; j < n; ++j)
      if (g.at(i, j) != 0 || g.at(j, i) != 0) return false;
  Matrix a(F, h), b(F, h);
  for (uint32_t i = 0; i < h; ++i)
    for (uint32_t j = 0; j < h; ++j) {
      a.at(i, j) = g.at(i, j);
      b.at(i, j) = g.at(h + i, h + j);
    }
  return a.det() == 1 && b.det() == 1;
}

Matrix step_weyl_connective(const gf::FiniteField& f, uint32_t n) {
  Matrix w = Matrix::identity(f, n);
  w.at(n - 2, n - 2) = 0;
  w.at(n - 1, n - 1) = 0;
  w.at(n - 1, n - 2) = 1;
  w.at(n - 2, n - 1) = f.neg(1);
  return w;
}

namespace {

// monomial S-letter for a permutation of {0..d-1}: permutation matrix with the
// sign folded into the first moved column so the block determinant is 1
Matrix step_monomial(const gf::FiniteField& F, uint32_t n, const perm::Permutation& psi) {
  Matrix m(F, n);
  m.at(n - 1, n - 1) = 1;
  for (uint32_t j = 0; j + 1 < n; ++j) m.at(psi(j), j) = 1;
  if (!psi.even()) m.at(psi(0), 0) = F.neg(1);
  return m;
}

struct UHW {
  Matrix u1, H, u2;                  // phi = u1 * H * Wprod * u2
  std::vector<MatWitness::Letter> weyl;  // letters whose product is Wprod
  Matrix wprod;
};

// Common Bruhat-based normal form phi = u1 * H * (weyl letters) * u2, with the
// Weyl letters supplied by the caller for the permutation part.
UHW normal_form(const Matrix& phi,
                const std::function<std::vector<MatWitness::Letter>(const perm::Permutation&)>&
                    weyl_letters) {
  const auto& F = phi.field();
  const uint32_t n = phi.dim();
  auto br = bruhat_decompose(phi);

  // b1 = u1 * h1, b2 = h2 * u2
  std::vector<uint32_t> d1(n), d2(n);
  for (uint32_t i = 0; i < n; ++i) {
    d1[i] = br.b1.at(i, i);
    d2[i] = br.b2.at(i, i);
  }
  Matrix h1 = Matrix::diagonal(F, d1), h2 = Matrix::diagonal(F, d2);
  Matrix u1 = br.b1 * h1.inverse();
  Matrix u2 = h2.inverse() * br.b2;

  UHW out{Matrix(F, n), Matrix(F, n), Matrix(F, n), {}, Matrix(F, n)};
  out.u1 = u1;
  out.u2 = u2;
  out.weyl = weyl_letters(br.sigma);
  Matrix wprod = Matrix::identity(F, n);
  for (const auto& l : out.weyl) wprod = wprod * l.element;
  out.wprod = wprod;

  // w = wprod * R with R diagonal; fold R into the diagonal part
  Matrix R = wprod.inverse() * br.w;
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j)
      require(i == j || R.at(i, j) == 0, Err::degree_mismatch,
              "Weyl letters do not match the permutation part");
  Matrix h2p = R * h2;
  Matrix h2pp = wprod * h2p * wprod.inverse();
  out.H = h1 * h2pp;
  return out;
}

void push_if_nontrivial(std::vector<MatWitness::Letter>& letters, Matrix m,
                        const std::string& tag) {
  if (!m.is_identity()) letters.push_back({std::move(m), tag});
}

}  // namespace

MatWitness sl_step_factor(const Matrix& phi) {
  const auto& F = phi.field();
  const uint32_t n = phi.dim();
  require(n >= 3, Err::dimension_too_small, "step factorization needs dimension >= 3");
  require(phi.det() == 1, Err::singular, "phi must lie in SL");

  MatWitness w;
  w.target = phi;
  if (phi.is_identity()) return w;
  if (is_step_s_letter(phi)) {
    w.letters.push_back({phi, "S"});
    return w;
  }

  const Matrix theta = step_weyl_connective(F, n);

  auto weyl_letters = [&](const perm::Permutation& sigma) {
    std::vector<MatWitness::Letter> ls;
    if (sigma.is_identity()) return ls;
    if (sigma(n - 1) == n - 1) {
      ls.push_back({step_monomial(F, n, sigma), "S"});
      return ls;
    }
    // sigma = psi1 * (n-2 n-1) * psi3 with psi1, psi3 fixing the last point
    const uint32_t a = sigma.inverse()(n - 1);
    perm::Permutation psi3(n);
    if (a != n - 2) {
      std::vector<uint32_t> img(n);
      for (uint32_t i = 0; i < n; ++i) img[i] = i;
      img[a] = n - 2;
      img[n - 2] = a;
      psi3 = perm::Permutation(img);
    }
    perm::Permutation theta_perm =
        perm::Permutation::from_transpositions(n, {{n - 2, n - 1}});
    perm::Permutation psi1 = sigma * psi3.inverse() * theta_perm;
    push_if_nontrivial(ls, step_monomial(F, n, psi1), "S");
    ls.push_back({theta, "w"});
    push_if_nontrivial(ls, step_monomial(F, n, psi3), "S");
    return ls;
  };

  UHW nf = normal_form(phi, weyl_letters);

  auto unipotent_letters = [&](const Matrix& u, std::vector<MatWitness::Letter>& ls) {
    // u = psi * theta_u * [X, Y] with psi in T, theta_u in S and the corner
    // entry produced by one commutator
    Matrix psi = Matrix::identity(F, n);
    Matrix th = Matrix::identity(F, n);
    for (uint32_t i = 1; i + 1 < n; ++i) {
      for (uint32_t j = i; j + 1 < n; ++j) psi.at(i, j) = u.at(i, j);
      psi.at(i, n - 1) = u.at(i, n - 1);
    }
    for (uint32_t j = 1; j + 1 < n; ++j) th.at(0, j) = u.at(0, j);
    push_if_nontrivial(ls, psi, "T");
    push_if_nontrivial(ls, th, "S");
    uint32_t z = u.at(0, n - 1);
    if (z != 0) {
      Matrix X = Matrix::identity(F, n), Y = Matrix::identity(F, n);
      X.at(0, 1) = z;
      Y.at(1, n - 1) = 1;
      Matrix Xi = Matrix::identity(F, n), Yi = Matrix::identity(F, n);
      Xi.at(0, 1) = F.neg(z);
      Yi.at(1, n - 1) = F.neg(1);
      ls.push_back({X, "S"});
      ls.push_back({Y, "T"});
      ls.push_back({Xi, "S"});
      ls.push_back({Yi, "T"});
    }
  };

  auto diagonal_letters = [&](const Matrix& H, std::vector<MatWitness::Letter>& ls) {
    std::vector<uint32_t> lam(n);
    for (uint32_t i = 0; i < n; ++i) lam[i] = H.at(i, i);
    std::vector<uint32_t> e1(n, 1), e2(n, 1);
    e1[0] = lam[0];
    e1[1] = F.inv(lam[0]);
    e2[1] = F.mul(lam[0], lam[1]);
    for (uint32_t i = 2; i < n; ++i) e2[i] = lam[i];
    push_if_nontrivial(ls, Matrix::diagonal(F, e1), "S");
    push_if_nontrivial(ls, Matrix::diagonal(F, e2), "T");
  };

  unipotent_letters(nf.u1, w.letters);
  diagonal_letters(nf.H, w.letters);
  for (auto& l : nf.weyl) w.letters.push_back(l);
  unipotent_letters(nf.u2, w.letters);
  return w;
}

DoubleConnectives double_connectives(const gf::FiniteField& f, uint32_t n) {
  const uint32_t h = n / 2, qr = n / 4;
  DoubleConnectives c{{}, Matrix(f, n), Matrix(f, n)};
  // block units J1=[I 0;0 0], J2=[0 0;0 I], J3=[0 I;0 0], J4=[0 0;I 0]
  static constexpr uint32_t kBlockRow[4] = {0, 1, 0, 1};
  static constexpr uint32_t kBlockCol[4] = {0, 1, 1, 0};
  for (uint32_t which = 0; which < 4; ++which) {
    Matrix t = Matrix::identity(f, n);
    for (uint32_t x = 0; x < qr; ++x)
      t.at(kBlockRow[which] * qr + x, h + kBlockCol[which] * qr + x) = 1;
    c.tau.push_back(t);
  }
  c.kappa = Matrix::identity(f, n);
  c.kappa.at(1, 1) = 0;
  c.kappa.at(h, h) = 0;
  c.kappa.at(h, 1) = 1;
  c.kappa.at(1, h) = f.neg(1);
  c.theta = Matrix::permutation(f, perm::uni2_theta(n / 8));
  return c;
}

MatWitness sl_double_factor(const Matrix& phi, uint64_t seed) {
  const auto& F = phi.field();
  const uint32_t n = phi.dim();
  require(n >= 8 && n % 8 == 0, Err::dimension_too_small,
          "doubling factorization needs dimension 8d");
  require(phi.det() == 1, Err::singular, "phi must lie in SL");
  const uint32_t h = n / 2, qr = n / 4;

  MatWitness w;
  w.target = phi;
  if (phi.is_identity()) return w;
  if (is_gamma_letter(phi)) {
    w.letters.push_back({phi, "Gamma"});
    return w;
  }

  const DoubleConnectives conn = double_connectives(F, n);

  auto weyl_letters = [&](const perm::Permutation& sigma) {
    std::vector<MatWitness::Letter> ls;
    if (sigma.is_identity()) return ls;
    perm::Permutation sp = sigma;
    bool odd = !sigma.even();
    if (odd) sp = sigma * perm::Permutation::from_transpositions(n, {{0, 1}});
    if (!sp.is_identity()) {
      auto uw = perm::uni2_factor(sp, n / 8, seed);
      for (const auto& l : uw.letters) {
        if (l.tag == "theta") {
          ls.push_back({conn.theta, "theta"});
        } else {
          push_if_nontrivial(ls, Matrix::permutation(F, l.element), "Gamma");
        }
      }
    }
    if (odd) {
      Matrix swap01 = Matrix::identity(F, n);
      swap01.at(0, 0) = 0;
      swap01.at(1, 1) = 0;
      swap01.at(1, 0) = 1;
      swap01.at(0, 1) = F.neg(1);
      ls.push_back({swap01, "Gamma"});
    }
    return ls;
  };

  UHW nf = normal_form(phi, weyl_letters);

  auto unipotent_letters = [&](const Matrix& u, std::vector<MatWitness::Letter>& ls) {
    Matrix v(F, n);  // [[V1,0],[0,V2]]
    for (uint32_t i = 0; i < h; ++i)
      for (uint32_t j = 0; j < h; ++j) {
        v.at(i, j) = u.at(i, j);
        v.at(h + i, h + j) = u.at(h + i, h + j);
      }
    push_if_nontrivial(ls, v, "Gamma");
    // S = V1^{-1} M where M is the off-diagonal block
    Matrix V1(F, h), M(F, h);
    for (uint32_t i = 0; i < h; ++i)
      for (uint32_t j = 0; j < h; ++j) {
        V1.at(i, j) = u.at(i, j);
        M.at(i, j) = u.at(i, h + j);
      }
    Matrix S = V1.inverse() * M;
    bool s_zero = true;
    for (uint32_t x : S.raw())
      if (x) {
        s_zero = false;
        break;
      }
    if (s_zero) return;

    // two split_nonsingular rounds per 2d x 2d block of S
    for (uint32_t bi = 0; bi < 2; ++bi)
      for (uint32_t bj = 0; bj < 2; ++bj) {
        Matrix block(F, qr);
        for (uint32_t i = 0; i < qr; ++i)
          for (uint32_t j = 0; j < qr; ++j) block.at(i, j) = S.at(bi * qr + i, bj * qr + j);
        auto [B, Bp] = split_nonsingular(block);
        uint32_t which = bi == 0 ? (bj == 0 ? 0 : 2) : (bj == 0 ? 3 : 1);
        for (const Matrix* part : {&B, &Bp}) {
          // C is hyperbolic block-diagonal so that C * J_which has the
          // invertible part at block (bi,bj) and zeros elsewhere
          Matrix C(F, h);
          Matrix pinv = part->inverse();
          const Matrix& top = (bi == 0) ? *part : pinv;
          const Matrix& bot = (bi == 0) ? pinv : *part;
          for (uint32_t i = 0; i < qr; ++i)
            for (uint32_t j = 0; j < qr; ++j) {
              C.at(i, j) = top.at(i, j);
              C.at(qr + i, qr + j) = bot.at(i, j);
            }
          Matrix G = Matrix::identity(F, n);
          for (uint32_t i = 0; i < h; ++i)
            for (uint32_t j = 0; j < h; ++j) G.at(i, j) = C.at(i, j);
          ls.push_back({G, "Gamma"});
          ls.push_back({conn.tau[which], which == 0 ? "J1" : which == 1 ? "J2"
                                          : which == 2 ? "J3" : "J4"});
          ls.push_back({G.inverse(), "Gamma"});
        }
      }
  };

  auto diagonal_letters = [&](const Matrix& H, std::vector<MatWitness::Letter>& ls) {
    Matrix L1(F, h), L2(F, h);
    for (uint32_t i = 0; i < h; ++i) {
      L1.at(i, i) = H.at(i, i);
      L2.at(i, i) = H.at(h + i, h + i);
    }
    uint32_t delta = L1.det();
    Matrix G = Matrix::identity(F, n);
    for (uint32_t i = 0; i < h; ++i) {
      G.at(i, i) = L1.at(i, i);
      G.at(h + i, h + i) = L2.at(i, i);
    }
    G.at(0, 0) = F.mul(L1.at(0, 0), F.inv(delta));
    G.at(h, h) = F.mul(L2.at(0, 0), delta);
    push_if_nontrivial(ls, G, "Gamma");
    if (delta != 1) {
      Matrix K = Matrix::identity(F, n);
      K.at(0, 0) = delta;
      K.at(1, 1) = F.inv(delta);
      ls.push_back({conn.kappa, "kappa"});
      ls.push_back({K, "Gamma"});
      ls.push_back({conn.kappa.inverse(), "kappa"});
    }
  };

  unipotent_letters(nf.u1, w.letters);
  diagonal_letters(nf.H, w.letters);
  for (auto& l : nf.weyl) w.letters.push_back(l);
  unipotent_letters(nf.u2, w.letters);
  return w;
}

std::vector<Matrix> sl_generic_sequence(uint32_t m, uint32_t p, uint32_t k, uint32_t t) {
  const auto& F = gf::make_field(p, k);
  auto seq = perm::generic_sequence(m, t);
  std::vector<Matrix> out;
  for (const auto& g : seq.elements) out.push_back(Matrix::permutation(F, g));
  return out;
}

}  // namespace unifac::mat
