#include "unifac/pair_span.hpp"

namespace unifac::mat {

namespace {

using Vec = std::vector<uint32_t>;

uint32_t rank_of_rows(const gf::FiniteField& F, std::vector<Vec> rows) {
  uint32_t rank = 0;
  const size_t d = rows.empty() ? 0 : rows[0].size();
  for (size_t col = 0; col < d && rank < rows.size(); ++col) {
    size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    uint32_t inv = F.inv(rows[rank][col]);
    for (size_t i = rank + 1; i < rows.size(); ++i) {
      uint32_t f2 = F.mul(rows[i][col], inv);
      if (!f2) continue;
      for (size_t j = 0; j < d; ++j)
        rows[i][j] = F.sub(rows[i][j], F.mul(f2, rows[rank][j]));
    }
    ++rank;
  }
  return rank;
}

bool independent(const gf::FiniteField& F, const Vec& u, const Vec& v) {
  return rank_of_rows(F, {u, v}) == 2;
}

Vec sub_vec(const gf::FiniteField& F, const Vec& x, const Vec& y) {
  Vec r = x;
  for (size_t i = 0; i < r.size(); ++i) r[i] = F.sub(r[i], y[i]);
  return r;
}

Vec decode(const gf::FiniteField& F, uint32_t d, uint64_t code) {
  Vec v(d);
  for (uint32_t i = 0; i < d; ++i) {
    v[i] = static_cast<uint32_t>(code % F.q);
    code /= F.q;
  }
  return v;
}

// SL matrix sending a -> w1 and b -> w2; both pairs independent, d >= 3
Matrix sl_mapping(const gf::FiniteField& F, const Vec& a, const Vec& b, const Vec& w1,
                  const Vec& w2) {
  const uint32_t d = static_cast<uint32_t>(a.size());
  auto extend = [&](const Vec& u, const Vec& v) {
    std::vector<Vec> cols = {u, v};
    for (uint32_t e = 0; e < d && cols.size() < d; ++e) {
      Vec unit(d, 0);
      unit[e] = 1;
      cols.push_back(unit);
      if (rank_of_rows(F, cols) != cols.size()) cols.pop_back();
    }
    require(cols.size() == d, Err::dependent_pair, "could not extend to a basis");
    Matrix m(F, d);
    for (uint32_t i = 0; i < d; ++i)
      for (uint32_t j = 0; j < d; ++j) m.at(i, j) = cols[j][i];
    return m;
  };
  Matrix P = extend(a, b);
  Matrix W = extend(w1, w2);
  Matrix A = W * P.inverse();
  uint32_t det = A.det();
  if (det != 1) {
    // scaling the third image column keeps the prescribed images of a and b
    uint32_t c = F.inv(det);
    for (uint32_t i = 0; i < d; ++i) W.at(i, 2) = F.mul(W.at(i, 2), c);
    A = W * P.inverse();
  }
  return A;
}

}  // namespace

std::pair<Matrix, Matrix> pair_span_decompose(const Vec& x, const Vec& y, const Vec& a,
                                              const Vec& b, const gf::FiniteField& f) {
  const uint32_t d = static_cast<uint32_t>(a.size());
  require(d >= 3, Err::dimension_too_small, "need d >= 3");
  require(x.size() == d && y.size() == d && b.size() == d, Err::dimension_mismatch,
          "vector lengths differ");
  require(independent(f, a, b), Err::dependent_pair, "a, b must be independent");

  uint64_t total = 1;
  for (uint32_t i = 0; i < d; ++i) total *= f.q;
  for (uint64_t c1 = 0; c1 < total; ++c1) {
    Vec u1 = decode(f, d, c1);
    Vec w1 = sub_vec(f, x, u1);
    for (uint64_t c2 = 0; c2 < total; ++c2) {
      Vec u2 = decode(f, d, c2);
      if (!independent(f, u1, u2)) continue;
      Vec w2 = sub_vec(f, y, u2);
      if (!independent(f, w1, w2)) continue;
      Matrix B = sl_mapping(f, a, b, u1, u2);
      Matrix A = sl_mapping(f, a, b, w1, w2);
      return {A, B};
    }
  }
  fail(Err::search_exhausted, "no independent split found");
}

}  // namespace unifac::mat
