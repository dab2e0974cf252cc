#include "unifac/permutation.hpp"

#include <algorithm>
#include <sstream>

namespace unifac::perm {

Permutation::Permutation(std::vector<uint32_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (uint32_t v : img_) {
    require(v < img_.size() && !seen[v], Err::parse_error, "images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::from_transpositions(
    uint32_t n, const std::vector<std::pair<uint32_t, uint32_t>>& ts) {
  Permutation p(n);
  for (auto [a, b] : ts) {
    require(a < n && b < n && a != b && p.img_[a] == a && p.img_[b] == b,
            Err::parse_error, "transpositions overlap or out of range");
    std::swap(p.img_[a], p.img_[b]);
  }
  return p;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img_.resize(img_.size());
  for (uint32_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = i;
  return r;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  require(a.degree() == b.degree(), Err::degree_mismatch,
          "composing permutations of different degree");
  Permutation r;
  r.img_.resize(a.img_.size());
  for (uint32_t i = 0; i < a.img_.size(); ++i) r.img_[i] = a.img_[b.img_[i]];
  return r;
}

bool Permutation::is_identity() const {
  for (uint32_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

bool Permutation::even() const {
  std::vector<bool> seen(img_.size(), false);
  uint32_t transpositions = 0;
  for (uint32_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    uint32_t len = 0;
    for (uint32_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return (transpositions & 1) == 0;
}

std::map<uint32_t, uint32_t> Permutation::cycle_type() const {
  std::map<uint32_t, uint32_t> type;
  std::vector<bool> seen(img_.size(), false);
  for (uint32_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    uint32_t len = 0;
    for (uint32_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    ++type[len];
  }
  return type;
}

bool Permutation::is_fpf_involution() const {
  if (img_.empty() || (img_.size() & 1)) return false;
  for (uint32_t i = 0; i < img_.size(); ++i)
    if (img_[i] == i || img_[img_[i]] != i) return false;
  return true;
}

std::string Permutation::str() const {
  std::ostringstream os;
  std::vector<bool> seen(img_.size(), false);
  bool any = false;
  for (uint32_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) {
      seen[i] = true;
      continue;
    }
    os << "(";
    bool first = true;
    for (uint32_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      if (!first) os << " ";
      os << (j + 1);
      first = false;
    }
    os << ")";
    any = true;
  }
  if (!any) return "()";
  return os.str();
}

uint64_t Permutation::rank() const {
  require(img_.size() <= 20, Err::cap_exceeded, "Lehmer rank needs degree <= 20");
  uint64_t r = 0;
  uint32_t n = degree();
  for (uint32_t i = 0; i < n; ++i) {
    uint32_t smaller = 0;
    for (uint32_t j = i + 1; j < n; ++j)
      if (img_[j] < img_[i]) ++smaller;
    r = r * (n - i) + smaller;
  }
  return r;
}

Permutation Permutation::unrank(uint32_t n, uint64_t r) {
  require(n <= 20, Err::cap_exceeded, "Lehmer unrank needs degree <= 20");
  std::vector<uint32_t> digits(n, 0);
  for (uint32_t i = n; i-- > 0;) {
    digits[i] = static_cast<uint32_t>(r % (n - i));
    r /= (n - i);
  }
  std::vector<uint32_t> pool(n);
  for (uint32_t i = 0; i < n; ++i) pool[i] = i;
  std::vector<uint32_t> img(n);
  for (uint32_t i = 0; i < n; ++i) {
    img[i] = pool[digits[i]];
    pool.erase(pool.begin() + digits[i]);
  }
  return Permutation(std::move(img));
}

Permutation parse_cycles(const std::string& text, uint32_t degree) {
  Permutation result(degree);
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  require(pos < text.size(), Err::parse_error, "empty permutation literal");
  bool any_cycle = false;
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    require(text[pos] == '(', Err::parse_error, "expected '(' in cycle notation");
    ++pos;
    std::vector<uint32_t> cycle;
    while (true) {
      skip_ws();
      require(pos < text.size(), Err::parse_error, "unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      uint32_t v = 0;
      bool got = false;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        ++pos;
        got = true;
      }
      require(got, Err::parse_error, "expected point in cycle");
      require(v >= 1 && v <= degree, Err::parse_error,
              "point " + std::to_string(v) + " out of range 1.." + std::to_string(degree));
      cycle.push_back(v - 1);
    }
    any_cycle = true;
    if (cycle.size() >= 2) {
      std::vector<bool> seen(degree, false);
      for (uint32_t pt : cycle) {
        require(!seen[pt], Err::parse_error, "repeated point in cycle");
        seen[pt] = true;
      }
      std::vector<uint32_t> img(degree);
      for (uint32_t i = 0; i < degree; ++i) img[i] = i;
      for (size_t i = 0; i < cycle.size(); ++i)
        img[cycle[i]] = cycle[(i + 1) % cycle.size()];
      result = result * Permutation(std::move(img));
    }
  }
  require(any_cycle, Err::parse_error, "no cycles found");
  return result;
}

std::vector<std::vector<uint32_t>> orbit_decomposition(
    const std::vector<Permutation>& gens, uint32_t n) {
  for (const auto& g : gens)
    require(g.degree() == n, Err::degree_mismatch, "generator degree mismatch");
  std::vector<std::vector<uint32_t>> orbits;
  std::vector<bool> seen(n, false);
  for (uint32_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<uint32_t> orbit = {s};
    seen[s] = true;
    for (size_t head = 0; head < orbit.size(); ++head) {
      for (const auto& g : gens) {
        uint32_t y = g(orbit[head]);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace unifac::perm
