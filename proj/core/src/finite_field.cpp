#include "unifac/finite_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <unordered_set>

#include "unifac/config.hpp"

namespace unifac {

const char* err_name(Err e) {
  switch (e) {
    case Err::non_prime: return "NonPrime";
    case Err::degree_too_large: return "DegreeTooLarge";
    case Err::no_zsigmondy: return "NoZsigmondy";
    case Err::degree_mismatch: return "DegreeMismatch";
    case Err::not_even: return "NotEven";
    case Err::search_exhausted: return "SearchExhausted";
    case Err::tail_regime: return "TailRegime";
    case Err::singular: return "Singular";
    case Err::dimension_too_small: return "DimensionTooSmall";
    case Err::dimension_mismatch: return "DimensionMismatch";
    case Err::no_split: return "NoSplit";
    case Err::group_too_large: return "GroupTooLarge";
    case Err::bound_exceeded: return "BoundExceeded";
    case Err::zero_lambda: return "ZeroLambda";
    case Err::odd_weight: return "OddWeight";
    case Err::not_in_l: return "NotInL";
    case Err::dependent_pair: return "DependentPair";
    case Err::shape_mismatch: return "ShapeMismatch";
    case Err::depth_explosion: return "DepthExplosion";
    case Err::hypothesis_violated: return "HypothesisViolated";
    case Err::parse_error: return "ParseError";
    case Err::lemma_unknown: return "LemmaUnknown";
    case Err::cap_exceeded: return "CapExceeded";
  }
  return "Error";
}

}  // namespace unifac

namespace unifac::gf {

namespace {

constexpr uint32_t kTableCap = 1024;  // dense mul/inv tables for fields up to this size

using Poly = std::vector<uint32_t>;  // coefficients mod p, least degree first

void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b over Z_p, b nonzero
Poly poly_mod(Poly a, const Poly& b, uint32_t p) {
  poly_trim(a);
  uint64_t binv = 1;
  {
    // inverse of b's leading coefficient mod p
    uint64_t lead = b.back(), e = p - 2, r = 1;
    while (e) {
      if (e & 1) r = r * lead % p;
      lead = lead * lead % p;
      e >>= 1;
    }
    binv = r;
  }
  while (a.size() >= b.size() && !a.empty()) {
    uint64_t c = a.back() * binv % p;
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      uint64_t t = a[shift + i] + (p - (c * b[i] % p));
      a[shift + i] = static_cast<uint32_t>(t % p);
    }
    poly_trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<uint32_t>((r[i + j] + uint64_t(a[i]) * b[j]) % p);
  }
  return poly_mod(std::move(r), m, p);
}

bool poly_is_irreducible(const Poly& f, uint32_t p) {
  // exhaustive trial division by monic polynomials of degree 1..deg/2
  uint32_t deg = static_cast<uint32_t>(f.size()) - 1;
  if (deg == 1) return true;
  for (uint32_t d = 1; 2 * d <= deg; ++d) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < d; ++i) count *= p;
    for (uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      uint64_t c = code;
      for (uint32_t i = 0; i < d; ++i) {
        g[i] = static_cast<uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

bool small_is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

void FiniteField::build() {
  // modulus: code-order least monic irreducible of degree k
  uint64_t count = 1;
  for (uint32_t i = 0; i < k; ++i) count *= p;
  for (uint64_t code = 0; code < count; ++code) {
    Poly f(k + 1, 0);
    uint64_t c = code;
    for (uint32_t i = 0; i < k; ++i) {
      f[i] = static_cast<uint32_t>(c % p);
      c /= p;
    }
    f[k] = 1;
    if (poly_is_irreducible(f, p)) {
      modulus.assign(f.begin(), f.end());
      break;
    }
  }

  if (q <= kTableCap) {
    mul_table_.assign(uint64_t(q) * q, 0);
    for (uint32_t a = 0; a < q; ++a)
      for (uint32_t b = a; b < q; ++b) {
        uint32_t r = mul_poly(a, b);
        mul_table_[uint64_t(a) * q + b] = r;
        mul_table_[uint64_t(b) * q + a] = r;
      }
    inv_table_.assign(q, 0);
    for (uint32_t a = 1; a < q; ++a) {
      if (inv_table_[a]) continue;
      for (uint32_t b = 1; b < q; ++b)
        if (mul_table_[uint64_t(a) * q + b] == 1) {
          inv_table_[a] = b;
          inv_table_[b] = a;
          break;
        }
    }
  }
}

std::vector<uint32_t> FiniteField::coeffs(uint32_t a) const {
  std::vector<uint32_t> c(k, 0);
  for (uint32_t i = 0; i < k; ++i) {
    c[i] = a % p;
    a /= p;
  }
  return c;
}

uint32_t FiniteField::from_coeffs(const std::vector<uint32_t>& c) const {
  require(c.size() == k, Err::parse_error, "coefficient count mismatch");
  uint64_t v = 0;
  for (uint32_t i = k; i-- > 0;) {
    require(c[i] < p, Err::parse_error, "coefficient out of range");
    v = v * p + c[i];
  }
  return static_cast<uint32_t>(v);
}

uint32_t FiniteField::add(uint32_t a, uint32_t b) const {
  if (k == 1) return (a + b) % p;
  uint32_t r = 0, mult = 1;
  for (uint32_t i = 0; i < k; ++i) {
    r += (a % p + b % p) % p * mult;
    a /= p;
    b /= p;
    mult *= p;
  }
  return r;
}

uint32_t FiniteField::neg(uint32_t a) const {
  if (k == 1) return (p - a) % p;
  uint32_t r = 0, mult = 1;
  for (uint32_t i = 0; i < k; ++i) {
    r += (p - a % p) % p * mult;
    a /= p;
    mult *= p;
  }
  return r;
}

uint32_t FiniteField::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t FiniteField::mul_poly(uint32_t a, uint32_t b) const {
  Poly pa = coeffs(a), pb = coeffs(b);
  poly_trim(pa);
  poly_trim(pb);
  Poly m(modulus.begin(), modulus.end());
  Poly r = poly_mulmod(pa, pb, m, p);
  r.resize(k, 0);
  return from_coeffs(r);
}

uint32_t FiniteField::mul(uint32_t a, uint32_t b) const {
  if (!mul_table_.empty()) return mul_table_[uint64_t(a) * q + b];
  return mul_poly(a, b);
}

uint32_t FiniteField::inv(uint32_t a) const {
  if (a == 0) fail(Err::singular, "inverse of zero in " + descriptor());
  if (!inv_table_.empty()) return inv_table_[a];
  return pow(a, q - 2);
}

uint32_t FiniteField::pow(uint32_t a, uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  e %= (q - 1);
  uint32_t r = 1, base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

uint32_t FiniteField::frobenius(uint32_t a, uint64_t e) const {
  if (k == 1) return a;
  e %= k;
  uint64_t exp = mod_pow(p, e, q - 1);
  if (a == 0) return 0;
  return pow(a, exp);
}

uint32_t FiniteField::conj(uint32_t a, uint64_t q0) const {
  require(q0 * q0 == q, Err::degree_mismatch,
          "conjugation needs a quadratic extension, q0^2 != q");
  if (a == 0) return 0;
  return pow(a, q0);
}

uint32_t FiniteField::generator() const {
  if (uint32_t g = gen_.load(std::memory_order_relaxed)) return g;
  auto fac = factor_u64(q - 1);
  std::vector<uint64_t> distinct(fac.begin(), fac.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (uint32_t g = 1; g < q; ++g) {
    bool ok = true;
    for (uint64_t ell : distinct)
      if (pow(g, (q - 1) / ell) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      gen_.store(g, std::memory_order_relaxed);
      return g;
    }
  }
  fail(Err::search_exhausted, "no multiplicative generator found");
}

uint64_t FiniteField::mul_order(uint32_t a) const {
  require(a != 0, Err::singular, "order of zero");
  uint64_t ord = q - 1;
  for (uint64_t ell : factor_u64(q - 1))
    if (pow(a, ord / ell) == 1) ord /= ell;
  return ord;
}

std::vector<uint32_t> FiniteField::subfield(uint64_t qsub) const {
  require(qsub >= 2 && (q - 1) % (qsub - 1) == 0, Err::degree_mismatch,
          "not a subfield size");
  std::vector<uint32_t> out = {0};
  if (qsub == q) {
    for (uint32_t a = 1; a < q; ++a) out.push_back(a);
    return out;
  }
  uint32_t g = generator();
  uint32_t h = pow(g, (q - 1) / (qsub - 1));
  uint32_t x = 1;
  for (uint64_t i = 0; i + 1 < qsub; ++i) {
    out.push_back(x);
    x = mul(x, h);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string FiniteField::print(uint32_t a) const {
  std::ostringstream os;
  os << p << "^" << k << ":";
  auto c = coeffs(a);
  for (uint32_t i = 0; i < k; ++i) {
    if (i) os << ",";
    os << c[i];
  }
  return os.str();
}

std::string FiniteField::descriptor() const {
  std::ostringstream os;
  os << p << "," << k << ",";
  for (size_t i = 0; i < modulus.size(); ++i) {
    if (i) os << " ";
    os << modulus[i];
  }
  return os.str();
}

const FiniteField& make_field(uint32_t p, uint32_t k) {
  require(k >= 1, Err::degree_too_large, "degree must be >= 1");
  require(small_is_prime(p), Err::non_prime, std::to_string(p) + " is not prime");
  uint64_t size = 1;
  for (uint32_t i = 0; i < k; ++i) {
    size *= p;
    require(size <= limits().max_field_size, Err::degree_too_large,
            "p^k exceeds the configured field cap");
  }

  static std::mutex mu;
  static std::map<std::pair<uint32_t, uint32_t>, FiniteField*> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, k);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  auto* f = new FiniteField();
  f->p = p;
  f->k = k;
  f->q = static_cast<uint32_t>(size);
  f->build();
  cache[key] = f;
  return *f;
}

FieldElement parse_element(const std::string& text) {
  auto caret = text.find('^');
  auto colon = text.find(':');
  require(caret != std::string::npos && colon != std::string::npos && caret < colon,
          Err::parse_error, "element format is p^k:c0,c1,...");
  try {
    uint32_t p = static_cast<uint32_t>(std::stoul(text.substr(0, caret)));
    uint32_t k = static_cast<uint32_t>(std::stoul(text.substr(caret + 1, colon - caret - 1)));
    const FiniteField& f = make_field(p, k);
    std::vector<uint32_t> c;
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ','))
      c.push_back(static_cast<uint32_t>(std::stoul(item)));
    return {f, f.from_coeffs(c)};
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Err::parse_error, "bad element literal: " + text);
  }
}

const FiniteField& parse_field_descriptor(const std::string& text) {
  std::stringstream ss(text);
  std::string sp, sk;
  require(static_cast<bool>(std::getline(ss, sp, ',')) &&
              static_cast<bool>(std::getline(ss, sk, ',')),
          Err::parse_error, "field descriptor is p,k[,modulus]");
  try {
    return make_field(static_cast<uint32_t>(std::stoul(sp)),
                      static_cast<uint32_t>(std::stoul(sk)));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Err::parse_error, "bad field descriptor: " + text);
  }
}

// ---- number theory ----

static uint64_t mul_mod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<__uint128_t>(a) * b % m);
}

uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t mod) {
  if (mod == 1) return 0;
  uint64_t r = 1;
  base %= mod;
  while (exp) {
    if (exp & 1) r = mul_mod_u64(r, base, mod);
    base = mul_mod_u64(base, base, mod);
    exp >>= 1;
  }
  return r;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
    if (n % sp == 0) return n == sp;
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  // deterministic Miller-Rabin witnesses for 64-bit inputs
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

static uint64_t pollard_rho(uint64_t n) {
  if ((n & 1) == 0) return 2;
  for (uint64_t c = 1;; ++c) {
    auto f = [&](uint64_t x) { return (mul_mod_u64(x, x, n) + c) % n; };
    uint64_t x = 2, y = 2, d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      uint64_t diff = x > y ? x - y : y - x;
      d = std::__gcd(diff, n);
    }
    if (d != n) return d;
  }
}

static void factor_rec(uint64_t n, std::vector<uint64_t>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  uint64_t d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

std::vector<uint64_t> factor_u64(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    while (n % sp == 0) {
      out.push_back(sp);
      n /= sp;
    }
  }
  factor_rec(n, out);
  std::sort(out.begin(), out.end());
  return out;
}

uint64_t zsigmondy_prime(uint64_t q, uint32_t m) {
  require(q >= 2 && m >= 2, Err::degree_too_large, "need q >= 2, m >= 2");
  // q^m - 1 must fit in 64 bits
  __uint128_t qm = 1;
  for (uint32_t i = 0; i < m; ++i) {
    qm *= q;
    require(qm <= (__uint128_t(1) << 62), Err::degree_too_large, "q^m too large");
  }
  uint64_t big = static_cast<uint64_t>(qm) - 1;

  // Every qualifying prime r has ord_r(q) = m exactly, hence r = 1 (mod m).
  // Enumerate prime divisors of q^m - 1 and take the least with full order.
  auto fac = factor_u64(big);
  fac.erase(std::unique(fac.begin(), fac.end()), fac.end());
  std::vector<uint64_t> mdiv = factor_u64(m);
  mdiv.erase(std::unique(mdiv.begin(), mdiv.end()), mdiv.end());
  for (uint64_t r : fac) {
    if (r <= 2) continue;
    if (mod_pow(q % r, m, r) != 1) continue;
    bool full = true;
    for (uint64_t ell : mdiv)
      if (mod_pow(q % r, m / ell, r) == 1) {
        full = false;
        break;
      }
    if (full) return r;
  }
  fail(Err::no_zsigmondy, "no primitive prime divisor of q^m - 1 for q=" +
                              std::to_string(q) + ", m=" + std::to_string(m));
}

FieldElement normal_basis_generator(uint64_t q, uint32_t d) {
  require(d >= 1, Err::degree_too_large, "d >= 1");
  // identify q = p^e
  uint64_t qq = q;
  uint32_t p = 0;
  for (uint32_t cand = 2; uint64_t(cand) * cand <= qq; ++cand)
    if (qq % cand == 0) {
      p = cand;
      break;
    }
  if (p == 0) p = static_cast<uint32_t>(qq);  // q prime
  uint32_t e = 0;
  while (qq > 1) {
    require(qq % p == 0, Err::non_prime, "q is not a prime power");
    qq /= p;
    ++e;
  }
  const FiniteField& K = make_field(p, e * d);
  if (d == 1) return {K, 1};

  std::vector<uint32_t> sub;
  if (e == 1) {
    sub.resize(p);
    for (uint32_t i = 0; i < p; ++i) sub[i] = i;  // prime subfield = constants
  } else {
    sub = K.subfield(q);
  }

  for (uint32_t tau = 1; tau < K.q; ++tau) {
    // Frobenius orbit over GF(q): tau^(q^j)
    std::vector<uint32_t> orbit(d);
    orbit[0] = tau;
    for (uint32_t j = 1; j < d; ++j) orbit[j] = K.pow(orbit[j - 1], q);
    // incremental span test over GF(q)
    std::unordered_set<uint32_t> span = {0};
    bool independent = true;
    for (uint32_t j = 0; j < d && independent; ++j) {
      if (span.count(orbit[j])) {
        independent = false;
        break;
      }
      std::vector<uint32_t> fresh(span.begin(), span.end());
      for (uint32_t c : sub) {
        if (c == 0) continue;
        uint32_t cv = K.mul(c, orbit[j]);
        for (uint32_t s : fresh) span.insert(K.add(s, cv));
      }
    }
    if (independent) return {K, tau};
  }
  fail(Err::search_exhausted, "no normal basis generator found");  // unreachable
}

}  // namespace unifac::gf
