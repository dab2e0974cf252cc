#include "unifac/matrix.hpp"

#include <sstream>

namespace unifac::mat {

Matrix Matrix::identity(const gf::FiniteField& f, uint32_t n) {
  Matrix m(f, n);
  for (uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::permutation(const gf::FiniteField& f, const perm::Permutation& sigma) {
  Matrix m(f, sigma.degree());
  for (uint32_t j = 0; j < sigma.degree(); ++j) m.at(sigma(j), j) = 1;
  return m;
}

Matrix Matrix::diagonal(const gf::FiniteField& f, const std::vector<uint32_t>& d) {
  Matrix m(f, static_cast<uint32_t>(d.size()));
  for (uint32_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  require(x.f_ == y.f_ && x.n_ == y.n_, Err::dimension_mismatch, "matrix product shapes");
  const auto& F = *x.f_;
  const uint32_t n = x.n_;
  Matrix r(F, n);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t k = 0; k < n; ++k) {
      uint32_t xik = x.at(i, k);
      if (!xik) continue;
      for (uint32_t j = 0; j < n; ++j) {
        uint32_t ykj = y.at(k, j);
        if (!ykj) continue;
        r.at(i, j) = F.add(r.at(i, j), F.mul(xik, ykj));
      }
    }
  return r;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  require(x.f_ == y.f_ && x.n_ == y.n_, Err::dimension_mismatch, "matrix sum shapes");
  Matrix r(*x.f_, x.n_);
  for (uint64_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.f_->add(x.a_[i], y.a_[i]);
  return r;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
  require(x.f_ == y.f_ && x.n_ == y.n_, Err::dimension_mismatch, "matrix diff shapes");
  Matrix r(*x.f_, x.n_);
  for (uint64_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.f_->sub(x.a_[i], y.a_[i]);
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(*f_, n_);
  for (uint32_t i = 0; i < n_; ++i)
    for (uint32_t j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
  return r;
}

uint32_t Matrix::det() const {
  const auto& F = *f_;
  Matrix m = *this;
  uint32_t d = 1;
  for (uint32_t col = 0, row = 0; col < n_ && row < n_; ++col) {
    uint32_t pivot = row;
    while (pivot < n_ && m.at(pivot, col) == 0) ++pivot;
    if (pivot == n_) return 0;
    if (pivot != row) {
      for (uint32_t j = 0; j < n_; ++j) std::swap(m.at(pivot, j), m.at(row, j));
      d = F.neg(d);
    }
    d = F.mul(d, m.at(row, col));
    uint32_t inv = F.inv(m.at(row, col));
    for (uint32_t i = row + 1; i < n_; ++i) {
      uint32_t factor = F.mul(m.at(i, col), inv);
      if (!factor) continue;
      for (uint32_t j = col; j < n_; ++j)
        m.at(i, j) = F.sub(m.at(i, j), F.mul(factor, m.at(row, j)));
    }
    ++row;
  }
  return d;
}

bool Matrix::invertible() const { return det() != 0; }

Matrix Matrix::inverse() const {
  const auto& F = *f_;
  Matrix m = *this;
  Matrix r = identity(F, n_);
  for (uint32_t col = 0; col < n_; ++col) {
    uint32_t pivot = col;
    while (pivot < n_ && m.at(pivot, col) == 0) ++pivot;
    require(pivot < n_, Err::singular, "matrix is singular");
    if (pivot != col)
      for (uint32_t j = 0; j < n_; ++j) {
        std::swap(m.at(pivot, j), m.at(col, j));
        std::swap(r.at(pivot, j), r.at(col, j));
      }
    uint32_t inv = F.inv(m.at(col, col));
    for (uint32_t j = 0; j < n_; ++j) {
      m.at(col, j) = F.mul(m.at(col, j), inv);
      r.at(col, j) = F.mul(r.at(col, j), inv);
    }
    for (uint32_t i = 0; i < n_; ++i) {
      if (i == col) continue;
      uint32_t factor = m.at(i, col);
      if (!factor) continue;
      for (uint32_t j = 0; j < n_; ++j) {
        m.at(i, j) = F.sub(m.at(i, j), F.mul(factor, m.at(col, j)));
        r.at(i, j) = F.sub(r.at(i, j), F.mul(factor, r.at(col, j)));
      }
    }
  }
  return r;
}

bool Matrix::is_identity() const {
  for (uint32_t i = 0; i < n_; ++i)
    for (uint32_t j = 0; j < n_; ++j)
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

Matrix Matrix::frobenius_entrywise(uint64_t e) const {
  Matrix r(*f_, n_);
  for (uint64_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->frobenius(a_[i], e);
  return r;
}

bool Matrix::is_permutation_matrix(perm::Permutation* sigma) const {
  std::vector<uint32_t> img(n_, n_);
  for (uint32_t j = 0; j < n_; ++j) {
    uint32_t hits = 0, row = 0;
    for (uint32_t i = 0; i < n_; ++i) {
      if (at(i, j) == 0) continue;
      if (at(i, j) != 1) return false;
      ++hits;
      row = i;
    }
    if (hits != 1) return false;
    img[j] = row;
  }
  std::vector<bool> seen(n_, false);
  for (uint32_t v : img) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  if (sigma) *sigma = perm::Permutation(img);
  return true;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << n_ << "," << f_->p << "^" << f_->k << ";";
  for (uint32_t i = 0; i < n_; ++i) {
    if (i) os << "|";
    for (uint32_t j = 0; j < n_; ++j) {
      if (j) os << " ";
      os << f_->print(at(i, j));
    }
  }
  return os.str();
}

uint64_t Matrix::key() const {
  uint64_t k = 0;
  for (uint32_t v : a_) k = k * f_->q + v;
  return k;
}

Matrix parse_matrix(const std::string& text) {
  auto semi = text.find(';');
  require(semi != std::string::npos, Err::parse_error, "matrix format is d,q;row|row|...");
  auto comma = text.find(',');
  require(comma != std::string::npos && comma < semi, Err::parse_error, "missing dimension");
  uint32_t n = 0;
  const gf::FiniteField* f = nullptr;
  try {
    n = static_cast<uint32_t>(std::stoul(text.substr(0, comma)));
    std::string qtext = text.substr(comma + 1, semi - comma - 1);
    auto caret = qtext.find('^');
    uint32_t p, k = 1;
    if (caret == std::string::npos) {
      p = static_cast<uint32_t>(std::stoul(qtext));
    } else {
      p = static_cast<uint32_t>(std::stoul(qtext.substr(0, caret)));
      k = static_cast<uint32_t>(std::stoul(qtext.substr(caret + 1)));
    }
    f = &gf::make_field(p, k);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Err::parse_error, "bad matrix header: " + text.substr(0, semi));
  }
  Matrix m(*f, n);
  std::stringstream rows(text.substr(semi + 1));
  std::string row;
  uint32_t i = 0;
  while (std::getline(rows, row, '|')) {
    require(i < n, Err::parse_error, "too many rows");
    std::stringstream cells(row);
    std::string cell;
    uint32_t j = 0;
    while (cells >> cell) {
      require(j < n, Err::parse_error, "too many entries in row");
      auto e = gf::parse_element(cell);
      require(e.field == f, Err::parse_error, "entry field mismatch");
      m.at(i, j) = e.v;
      ++j;
    }
    require(j == n, Err::parse_error, "row has wrong length");
    ++i;
  }
  require(i == n, Err::parse_error, "wrong number of rows");
  return m;
}

Matrix random_sl(const gf::FiniteField& f, uint32_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<uint32_t> dist(0, f.q - 1);
  while (true) {
    Matrix m(f, n);
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = 0; j < n; ++j) m.at(i, j) = dist(rng);
    uint32_t d = m.det();
    if (!d) continue;
    uint32_t scale = f.inv(d);
    for (uint32_t j = 0; j < n; ++j) m.at(n - 1, j) = f.mul(m.at(n - 1, j), scale);
    return m;
  }
}

uint64_t gl_order(uint32_t n, uint64_t q) {
  uint64_t order = 1, qn = 1;
  for (uint32_t i = 0; i < n; ++i) qn *= q;
  uint64_t qi = 1;
  for (uint32_t i = 0; i < n; ++i) {
    order *= (qn - qi);
    qi *= q;
  }
  return order;
}

uint64_t sl_order(uint32_t n, uint64_t q) { return gl_order(n, q) / (q - 1); }

}  // namespace unifac::mat
