#include "unifac/group_family.hpp"

#include <algorithm>

#include "unifac/config.hpp"
#include "unifac/matrix.hpp"
#include "unifac/permutation.hpp"

namespace unifac::cover {

namespace {

uint64_t factorial(uint32_t n) {
  uint64_t f = 1;
  for (uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// Permutation groups use nibble-packed image arrays as element keys so that
// multiplication stays cheap even for windows like Sym(14); the canonical
// enumeration order is still Lehmer-rank order.
class SymGroup : public GroupRealization {
public:
  explicit SymGroup(uint32_t n) : n_(n) {
    require(n >= 1 && n <= 16, Err::cap_exceeded, "sym degree must be 1..16");
  }
  uint64_t size() const override { return factorial(n_); }
  uint64_t identity() const override {
    uint64_t k = 0;
    for (uint32_t i = 0; i < n_; ++i) k |= uint64_t(i) << (4 * i);
    return k;
  }
  uint64_t mul(uint64_t a, uint64_t b) const override {
    uint64_t r = 0;
    for (uint32_t i = 0; i < n_; ++i) {
      uint32_t bi = (b >> (4 * i)) & 15;
      uint32_t ai = (a >> (4 * bi)) & 15;
      r |= uint64_t(ai) << (4 * i);
    }
    return r;
  }
  uint64_t inv(uint64_t a) const override {
    uint64_t r = 0;
    for (uint32_t i = 0; i < n_; ++i) {
      uint32_t ai = (a >> (4 * i)) & 15;
      r |= uint64_t(i) << (4 * ai);
    }
    return r;
  }
  uint64_t element_at(uint64_t index) const override {
    return pack(perm::Permutation::unrank(n_, index));
  }
  std::string print(uint64_t a) const override { return unpack(a).str(); }
  uint64_t parse(const std::string& text) const override {
    return pack(perm::parse_cycles(text, n_));
  }
  std::string descriptor() const override { return "sym:" + std::to_string(n_); }

protected:
  uint64_t pack(const perm::Permutation& p) const {
    uint64_t k = 0;
    for (uint32_t i = 0; i < n_; ++i) k |= uint64_t(p(i)) << (4 * i);
    return k;
  }
  perm::Permutation unpack(uint64_t a) const {
    std::vector<uint32_t> img(n_);
    for (uint32_t i = 0; i < n_; ++i) img[i] = (a >> (4 * i)) & 15;
    return perm::Permutation(std::move(img));
  }
  uint32_t n_;
};

class AltGroup : public SymGroup {
public:
  explicit AltGroup(uint32_t n) : SymGroup(n) {
    require(n >= 3, Err::cap_exceeded, "alt degree must be >= 3");
  }
  uint64_t size() const override { return factorial(n_) / 2; }
  // exactly one of the Lehmer ranks {2i, 2i+1} is an even permutation
  uint64_t element_at(uint64_t index) const override {
    auto p = perm::Permutation::unrank(n_, 2 * index);
    if (p.even()) return pack(p);
    return pack(perm::Permutation::unrank(n_, 2 * index + 1));
  }
  uint64_t parse(const std::string& text) const override {
    auto p = perm::parse_cycles(text, n_);
    require(p.even(), Err::not_even, "element is odd: " + text);
    return pack(p);
  }
  std::string descriptor() const override { return "alt:" + std::to_string(n_); }
};

class CyclicGroup : public GroupRealization {
public:
  explicit CyclicGroup(uint64_t n) : n_(n) {
    require(n >= 1, Err::cap_exceeded, "cyclic order must be >= 1");
  }
  uint64_t size() const override { return n_; }
  uint64_t identity() const override { return 0; }
  uint64_t mul(uint64_t a, uint64_t b) const override { return (a + b) % n_; }
  uint64_t inv(uint64_t a) const override { return (n_ - a) % n_; }
  uint64_t element_at(uint64_t index) const override { return index; }
  std::string print(uint64_t a) const override { return std::to_string(a); }
  uint64_t parse(const std::string& text) const override {
    try {
      uint64_t v = std::stoull(text);
      require(v < n_, Err::parse_error, "residue out of range");
      return v;
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(Err::parse_error, "bad cyclic element: " + text);
    }
  }
  std::string descriptor() const override { return "cyclic:" + std::to_string(n_); }

private:
  uint64_t n_;
};

class SlGroup : public GroupRealization {
public:
  SlGroup(uint32_t d, uint32_t p, uint32_t k)
      : d_(d), f_(&gf::make_field(p, k)) {
    uint64_t space = 1;
    for (uint32_t i = 0; i < d * d; ++i) {
      space *= f_->q;
      require(space <= limits().pair_table_cap, Err::cap_exceeded,
              "SL window group too large");
    }
    for (uint64_t v = 0; v < space; ++v) {
      mat::Matrix m = unpack(v);
      if (m.det() == 1) elements_.push_back(v);
    }
  }
  uint64_t size() const override { return elements_.size(); }
  uint64_t identity() const override { return mat::Matrix::identity(*f_, d_).key(); }
  uint64_t mul(uint64_t a, uint64_t b) const override {
    return (unpack(a) * unpack(b)).key();
  }
  uint64_t inv(uint64_t a) const override { return unpack(a).inverse().key(); }
  uint64_t element_at(uint64_t index) const override { return elements_[index]; }
  std::string print(uint64_t a) const override { return unpack(a).str(); }
  uint64_t parse(const std::string& text) const override {
    auto m = mat::parse_matrix(text);
    require(m.dim() == d_ && &m.field() == f_, Err::parse_error, "wrong matrix shape");
    require(m.det() == 1, Err::parse_error, "matrix not in SL");
    return m.key();
  }
  std::string descriptor() const override {
    return "sl:" + std::to_string(d_) + "," + std::to_string(f_->q);
  }

private:
  mat::Matrix unpack(uint64_t key) const {
    mat::Matrix m(*f_, d_);
    for (uint32_t i = d_; i-- > 0;)
      for (uint32_t j = d_; j-- > 0;) {
        m.at(i, j) = static_cast<uint32_t>(key % f_->q);
        key /= f_->q;
      }
    return m;
  }
  uint32_t d_;
  const gf::FiniteField* f_;
  std::vector<uint64_t> elements_;
};

}  // namespace

std::shared_ptr<const GroupRealization> make_group(const std::string& descriptor) {
  auto colon = descriptor.find(':');
  require(colon != std::string::npos, Err::parse_error,
          "group descriptor is kind:params, got " + descriptor);
  std::string kind = descriptor.substr(0, colon);
  std::string params = descriptor.substr(colon + 1);
  try {
    if (kind == "sym") return std::make_shared<SymGroup>(std::stoul(params));
    if (kind == "alt") return std::make_shared<AltGroup>(std::stoul(params));
    if (kind == "cyclic") return std::make_shared<CyclicGroup>(std::stoull(params));
    if (kind == "sl") {
      auto comma = params.find(',');
      require(comma != std::string::npos, Err::parse_error, "sl descriptor is sl:d,q");
      uint32_t d = std::stoul(params.substr(0, comma));
      uint64_t q = std::stoull(params.substr(comma + 1));
      uint32_t p = 0, e = 0;
      for (uint32_t c = 2; uint64_t(c) * c <= q; ++c)
        if (q % c == 0) {
          p = c;
          break;
        }
      if (!p) p = static_cast<uint32_t>(q);
      uint64_t rest = q;
      while (rest > 1) {
        require(rest % p == 0, Err::non_prime, "q must be a prime power");
        rest /= p;
        ++e;
      }
      return std::make_shared<SlGroup>(d, p, e);
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Err::parse_error, "bad group descriptor: " + descriptor);
  }
  fail(Err::parse_error, "unknown group kind: " + kind);
}

GroupFamily make_family(const std::vector<std::string>& descriptors) {
  GroupFamily fam;
  for (const auto& d : descriptors) fam.groups.push_back(make_group(d));
  return fam;
}

}  // namespace unifac::cover
