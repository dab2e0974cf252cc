#include "unifac/class_cover.hpp"

#include <unordered_set>

#include "unifac/config.hpp"

namespace unifac::mat {

namespace {

uint64_t key_space(const gf::FiniteField& F, uint32_t n) {
  uint64_t s = 1;
  for (uint32_t i = 0; i < n * n; ++i) {
    s *= F.q;
    require(s <= (uint64_t(1) << 36), Err::group_too_large,
            "packed key space too large for dense BFS");
  }
  return s;
}

Matrix unkey(const gf::FiniteField& F, uint32_t n, uint64_t key) {
  Matrix m(F, n);
  for (uint32_t i = n; i-- > 0;)
    for (uint32_t j = n; j-- > 0;) {
      m.at(i, j) = static_cast<uint32_t>(key % F.q);
      key /= F.q;
    }
  return m;
}

std::vector<Matrix> sl_generators(const gf::FiniteField& F, uint32_t n) {
  // transvections I + a E_ij generate SL(n,q)
  std::vector<Matrix> gens;
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (uint32_t a = 1; a < F.q; ++a) {
        Matrix t = Matrix::identity(F, n);
        t.at(i, j) = a;
        gens.push_back(t);
      }
    }
  return gens;
}

bool is_scalar(const Matrix& g) {
  const uint32_t n = g.dim();
  uint32_t d = g.at(0, 0);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j)
      if (g.at(i, j) != (i == j ? d : 0u)) return false;
  return true;
}

uint32_t rank_of(const Matrix& m) {
  const auto& F = m.field();
  Matrix a = m;
  const uint32_t n = a.dim();
  uint32_t rank = 0;
  for (uint32_t col = 0; col < n && rank < n; ++col) {
    uint32_t pivot = rank;
    while (pivot < n && a.at(pivot, col) == 0) ++pivot;
    if (pivot == n) continue;
    for (uint32_t j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(rank, j));
    uint32_t inv = F.inv(a.at(rank, col));
    for (uint32_t i = rank + 1; i < n; ++i) {
      uint32_t f = F.mul(a.at(i, col), inv);
      if (!f) continue;
      for (uint32_t j = col; j < n; ++j)
        a.at(i, j) = F.sub(a.at(i, j), F.mul(f, a.at(rank, j)));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

Matrix involution_class_rep(const gf::FiniteField& f, uint32_t n) {
  std::vector<std::pair<uint32_t, uint32_t>> ts;
  for (uint32_t i = 0; i < 2 * n; ++i) ts.push_back({2 * i, 2 * i + 1});
  return Matrix::permutation(f, perm::Permutation::from_transpositions(4 * n, ts));
}

bool in_involution_class(const Matrix& g) {
  const auto& F = g.field();
  const uint32_t m = g.dim();
  if (m % 4 != 0) return false;
  const uint32_t half = m / 2;
  if (!(g * g).is_identity() || g.is_identity()) return false;
  Matrix gi = g - Matrix::identity(F, m);
  if (F.p == 2) {
    // unipotent: (g-1)^2 = 0 with rank m/2
    Matrix sq = gi * gi;
    for (uint32_t v : sq.raw())
      if (v) return false;
    return rank_of(gi) == half;
  }
  // semisimple: eigenvalues +1 and -1 with equal multiplicity
  Matrix gp = g + Matrix::identity(F, m);
  return rank_of(gi) == half && rank_of(gp) == half;
}

std::vector<Matrix> conjugacy_class(const Matrix& rep) {
  const auto& F = rep.field();
  const uint32_t n = rep.dim();
  auto gens = sl_generators(F, n);
  std::vector<Matrix> inv_gens;
  for (const auto& g : gens) inv_gens.push_back(g.inverse());

  std::unordered_set<uint64_t> seen = {rep.key()};
  std::vector<Matrix> frontier = {rep}, cls = {rep};
  while (!frontier.empty()) {
    std::vector<Matrix> next;
    for (const auto& x : frontier)
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        Matrix y = gens[gi] * x * inv_gens[gi];
        if (seen.insert(y.key()).second) {
          cls.push_back(y);
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  return cls;
}

CoverageProfile class_covering_radius(const Matrix& rep, uint32_t bound) {
  const auto& F = rep.field();
  const uint32_t n = rep.dim();
  require(!is_scalar(rep), Err::degree_mismatch, "class representative must be non-central");
  require(rep.det() == 1, Err::singular, "class representative must lie in SL");
  require(sl_order(n, F.q) <= limits().max_bfs_group, Err::group_too_large,
          "group too large for exhaustive BFS");

  const uint64_t space = key_space(F, n);
  auto cls = conjugacy_class(rep);

  CoverageProfile prof;
  prof.class_size = cls.size();
  prof.dist.assign(space, 255);

  std::vector<uint64_t> frontier = {Matrix::identity(F, n).key()};
  prof.dist[frontier[0]] = 0;
  prof.count_at.push_back(1);
  prof.group_size = 1;

  uint32_t d = 0;
  while (!frontier.empty()) {
    ++d;
    std::vector<uint64_t> next;
    for (uint64_t xk : frontier) {
      Matrix x = unkey(F, n, xk);
      for (const auto& c : cls) {
        uint64_t yk = (x * c).key();
        if (prof.dist[yk] == 255) {
          prof.dist[yk] = static_cast<uint8_t>(d);
          next.push_back(yk);
        }
      }
    }
    if (!next.empty()) {
      prof.count_at.push_back(next.size());
      prof.group_size += next.size();
      prof.radius = d;
    }
    frontier = std::move(next);
  }

  // non-central = everything except scalars in SL
  uint32_t rnc = 0;
  for (uint64_t k = 0; k < space; ++k) {
    if (prof.dist[k] == 255) continue;
    Matrix g = unkey(F, n, k);
    if (is_scalar(g)) continue;
    rnc = std::max(rnc, static_cast<uint32_t>(prof.dist[k]));
  }
  prof.radius_noncentral = rnc;

  if (bound > 0 && prof.radius_noncentral > bound)
    fail(Err::bound_exceeded, "covering radius " + std::to_string(prof.radius_noncentral) +
                                  " exceeds bound " + std::to_string(bound));
  return prof;
}

uint32_t sampled_covering_check(const Matrix& rep, uint32_t bound, uint32_t count,
                                uint64_t seed) {
  const auto& F = rep.field();
  const uint32_t n = rep.dim();
  require(!is_scalar(rep), Err::degree_mismatch, "class representative must be non-central");
  const uint64_t space = key_space(F, n);

  auto cls = conjugacy_class(rep);
  std::vector<Matrix> cls_inv;
  for (const auto& c : cls) cls_inv.push_back(c.inverse());

  // distance <= 2 bitmap
  std::vector<bool> c2(space, false), c1(space, false);
  for (const auto& a : cls) c1[a.key()] = true;
  for (const auto& a : cls)
    for (const auto& b : cls) c2[(a * b).key()] = true;

  auto dist_le3 = [&](const Matrix& g) {
    if (c1[g.key()] || c2[g.key()]) return true;
    for (const auto& ci : cls_inv)
      if (c2[(ci * g).key()]) return true;
    return false;
  };

  std::mt19937_64 rng(seed);
  uint32_t max_seen = 0;
  for (uint32_t i = 0; i < count; ++i) {
    Matrix g = random_sl(F, n, rng);
    if (is_scalar(g)) continue;
    if (g.is_identity()) continue;
    if (c1[g.key()]) {
      max_seen = std::max(max_seen, 1u);
      continue;
    }
    if (c2[g.key()]) {
      max_seen = std::max(max_seen, 2u);
      continue;
    }
    bool d3 = false;
    for (const auto& ci : cls_inv)
      if (c2[(ci * g).key()]) {
        d3 = true;
        break;
      }
    if (d3) {
      max_seen = std::max(max_seen, 3u);
      continue;
    }
    // escalate: distance 4, then 5
    bool d4 = false;
    for (const auto& ci : cls_inv) {
      Matrix h = ci * g;
      if (dist_le3(h)) {
        d4 = true;
        break;
      }
    }
    if (d4) {
      max_seen = std::max(max_seen, 4u);
      continue;
    }
    bool d5 = false;
    for (const auto& ci : cls_inv) {
      Matrix h = ci * g;
      for (const auto& cj : cls_inv)
        if (dist_le3(cj * h)) {
          d5 = true;
          break;
        }
      if (d5) break;
    }
    if (d5) {
      max_seen = std::max(max_seen, 5u);
      continue;
    }
    fail(Err::bound_exceeded, "sampled element beyond distance 5");
  }
  require(max_seen <= bound, Err::bound_exceeded, "sampled covering bound exceeded");
  return max_seen;
}

}  // namespace unifac::mat
