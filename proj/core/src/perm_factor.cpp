#include "unifac/perm_factor.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <unordered_map>

#include "unifac/config.hpp"

namespace unifac::perm {

namespace {

Permutation three_cycle(uint32_t n, uint32_t a, uint32_t b, uint32_t c) {
  std::vector<uint32_t> img(n);
  for (uint32_t i = 0; i < n; ++i) img[i] = i;
  img[a] = b;
  img[b] = c;
  img[c] = a;
  return Permutation(std::move(img));
}

// All fixed-point-free involutions on {0..n-1}, n even, by recursive pairing.
void enumerate_fpf(uint32_t n, std::vector<uint32_t>& img, std::vector<bool>& used,
                   std::vector<Permutation>& out) {
  uint32_t a = 0;
  while (a < n && used[a]) ++a;
  if (a == n) {
    out.push_back(Permutation(img));
    return;
  }
  used[a] = true;
  for (uint32_t b = a + 1; b < n; ++b) {
    if (used[b]) continue;
    used[b] = true;
    img[a] = b;
    img[b] = a;
    enumerate_fpf(n, img, used, out);
    used[b] = false;
  }
  used[a] = false;
}

std::vector<Permutation> fpf_involutions(uint32_t n) {
  std::vector<uint32_t> img(n);
  std::vector<bool> used(n, false);
  std::vector<Permutation> out;
  enumerate_fpf(n, img, used, out);
  return out;
}

struct ClassProductTable {
  std::vector<Permutation> cls;                          // the conjugacy class C
  std::vector<uint64_t> keys;                            // sorted ranks of C*C
  std::unordered_map<uint64_t, std::pair<uint32_t, uint32_t>> pair_of;  // rank -> (i,j)
};

const ClassProductTable& class_table(uint32_t n4) {
  static std::mutex mu;
  static std::map<uint32_t, ClassProductTable*> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n4);
  if (it != cache.end()) return *it->second;
  auto* t = new ClassProductTable();
  t->cls = fpf_involutions(n4);
  t->pair_of.reserve(t->cls.size() * t->cls.size());
  for (uint32_t i = 0; i < t->cls.size(); ++i)
    for (uint32_t j = 0; j < t->cls.size(); ++j) {
      uint64_t key = (t->cls[i] * t->cls[j]).rank();
      t->pair_of.emplace(key, std::make_pair(i, j));
    }
  t->keys.reserve(t->pair_of.size());
  for (const auto& kv : t->pair_of) t->keys.push_back(kv.first);
  std::sort(t->keys.begin(), t->keys.end());
  cache[n4] = t;
  return *t;
}

Permutation random_fpf(uint32_t n, std::mt19937_64& rng) {
  std::vector<uint32_t> pts(n);
  for (uint32_t i = 0; i < n; ++i) pts[i] = i;
  std::shuffle(pts.begin(), pts.end(), rng);
  std::vector<uint32_t> img(n);
  for (uint32_t i = 0; i < n; i += 2) {
    img[pts[i]] = pts[i + 1];
    img[pts[i + 1]] = pts[i];
  }
  return Permutation(std::move(img));
}

// A permutation is a product of two fixed-point-free involutions exactly when
// every cycle length occurs an even number of times: paired cycles are swapped
// by the first involution, and a lone cycle would force a fixed point.
bool fully_pairable(const Permutation& p) {
  for (const auto& [len, count] : p.cycle_type())
    if (count % 2) return false;
  return true;
}

// psi = a * b with a, b fixed-point-free involutions: for each pair of equal
// length cycles (x_0 x_1 ...), (y_0 y_1 ...), a maps x_i <-> y_{-i} and then
// b = a * psi maps x_i <-> y_{-i-1}.
std::pair<Permutation, Permutation> pair_split(const Permutation& psi) {
  const uint32_t n = psi.degree();
  std::vector<std::vector<uint32_t>> cycles;
  std::vector<bool> seen(n, false);
  for (uint32_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<uint32_t> cyc;
    for (uint32_t x = s; !seen[x]; x = psi(x)) {
      seen[x] = true;
      cyc.push_back(x);
    }
    cycles.push_back(std::move(cyc));
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<uint32_t> img(n);
  for (size_t i = 0; i + 1 < cycles.size(); i += 2) {
    const auto& x = cycles[i];
    const auto& y = cycles[i + 1];
    require(x.size() == y.size(), Err::degree_mismatch, "cycles do not pair up");
    const uint32_t len = static_cast<uint32_t>(x.size());
    for (uint32_t k = 0; k < len; ++k) {
      img[x[k]] = y[(len - k) % len];
      img[y[(len - k) % len]] = x[k];
    }
  }
  Permutation a(std::move(img));
  return {a, a * psi};
}

}  // namespace

bool in_point_stabilizer_alt(const Permutation& g, uint32_t fixed_point) {
  return g(fixed_point) == fixed_point && g.even();
}

bool has_type_2_pow(const Permutation& g, uint32_t count) {
  return g.is_fpf_involution() && g.degree() == 2 * count;
}

bool in_gamma_split(const Permutation& g, uint32_t half) {
  for (uint32_t x = 0; x < half; ++x)
    if (g(x) >= half) return false;
  std::vector<uint32_t> lo(half), hi(g.degree() - half);
  for (uint32_t x = 0; x < half; ++x) lo[x] = g(x);
  for (uint32_t x = half; x < g.degree(); ++x) hi[x - half] = g(x) - half;
  return Permutation(std::move(lo)).even() && Permutation(std::move(hi)).even();
}

Permutation uni1_theta(uint32_t m) {
  require(m >= 3, Err::degree_too_large, "uni1 needs m >= 3");
  return Permutation::from_transpositions(m + 1, {{m - 3, m - 2}, {m - 1, m}});
}

PermWitness uni1_factor(const Permutation& phi, uint32_t m) {
  require(m >= 3, Err::degree_too_large, "uni1 needs m >= 3");
  require(phi.degree() == m + 1, Err::degree_mismatch, "phi must act on m+1 points");
  require(phi.even(), Err::not_even, "phi must lie in Alt(m+1)");

  const Permutation theta = uni1_theta(m);
  const Permutation id(m + 1);
  PermWitness w;
  w.target = phi;

  if (phi(m) == m) {
    w.letters = {{phi, "Alt(m)"}, {theta, "theta"}, {id, "Alt(m)"},
                 {theta, "theta"}, {id, "Alt(m)"}};
    return w;
  }

  // phi moves the last point. tau = theta psi2 theta is a 3-cycle through it,
  // and the double coset Alt(m) tau Alt(m) covers everything outside Alt(m).
  const Permutation psi2 = three_cycle(m + 1, m - 3, m - 2, m - 1);
  const Permutation tau = theta * psi2 * theta;
  const uint32_t a = phi.inverse()(m);
  Permutation psi3(m + 1);
  if (a != m - 3) {
    uint32_t b = 0;
    while (b == a || b == m - 3) ++b;
    psi3 = three_cycle(m + 1, a, m - 3, b);
  }
  const Permutation psi1 = phi * psi3.inverse() * tau.inverse();
  w.letters = {{psi1, "Alt(m)"}, {theta, "theta"}, {psi2, "Alt(m)"},
               {theta, "theta"}, {psi3, "Alt(m)"}};
  return w;
}

PermWitness brenner_factor(const Permutation& phi, uint32_t n, uint64_t seed) {
  require(n >= 2, Err::degree_too_large, "brenner needs n >= 2");
  const uint32_t deg = 4 * n;
  require(deg <= limits().max_perm_degree, Err::cap_exceeded,
          "degree beyond configured cap");
  require(phi.degree() == deg, Err::degree_mismatch, "phi must act on 4n points");
  require(phi.even(), Err::not_even, "phi must lie in Alt(4n)");

  PermWitness w;
  w.target = phi;

  if (deg <= 8) {
    const auto& t = class_table(deg);
    for (uint64_t key : t.keys) {
      const auto [i1, j1] = t.pair_of.at(key);
      const Permutation x = t.cls[i1] * t.cls[j1];
      auto it = t.pair_of.find((x.inverse() * phi).rank());
      if (it != t.pair_of.end()) {
        const auto [i2, j2] = it->second;
        w.letters = {{t.cls[i1], "C"}, {t.cls[j1], "C"},
                     {t.cls[i2], "C"}, {t.cls[j2], "C"}};
        return w;
      }
    }
    fail(Err::search_exhausted, "no 4-involution product found (table path)");
  }

  // sample the first two letters until the cofactor's cycle lengths all have
  // even multiplicity; then the remaining pair is built outright
  std::mt19937_64 rng(seed);
  for (uint64_t tries = 0; tries < limits().search_retry_cap; ++tries) {
    const Permutation p1 = random_fpf(deg, rng);
    const Permutation p2 = random_fpf(deg, rng);
    const Permutation psi = p2 * p1 * phi;  // p1 p2 psi = phi
    if (!fully_pairable(psi)) continue;
    auto [p3, p4] = pair_split(psi);
    w.letters = {{p1, "C"}, {p2, "C"}, {p3, "C"}, {p4, "C"}};
    return w;
  }
  fail(Err::search_exhausted, "randomized 4-involution search hit the retry cap");
}

Permutation uni2_theta(uint32_t n) {
  const uint32_t deg = 8 * n;
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  for (uint32_t j = 0; j < n; ++j) pairs.push_back({4 * j + 1, 4 * j + 3});
  for (uint32_t i = 0; i < 2 * n; ++i) pairs.push_back({2 * i, 4 * n + 2 * i + 1});
  for (uint32_t j = 0; j < n; ++j) pairs.push_back({4 * n + 4 * j, 4 * n + 4 * j + 2});
  return Permutation::from_transpositions(deg, pairs);
}

namespace {

// Even bijection of {0..2h-1} stabilizing each half and carrying the given
// source sets onto the given target sets (per half); parity is fixed inside
// the target sets, which must have at least 2 points each.
Permutation gamma_with_images(uint32_t deg, uint32_t half,
                              std::vector<uint32_t> src0, std::vector<uint32_t> dst0,
                              std::vector<uint32_t> src1, std::vector<uint32_t> dst1) {
  auto build_half = [](uint32_t lo, uint32_t hi, std::vector<uint32_t>& src,
                       std::vector<uint32_t>& dst, std::vector<uint32_t>& img) {
    std::sort(src.begin(), src.end());
    std::sort(dst.begin(), dst.end());
    std::vector<bool> in_src(hi - lo, false), in_dst(hi - lo, false);
    for (uint32_t s : src) in_src[s - lo] = true;
    for (uint32_t d : dst) in_dst[d - lo] = true;
    std::vector<uint32_t> src_c, dst_c;
    for (uint32_t x = lo; x < hi; ++x) {
      if (!in_src[x - lo]) src_c.push_back(x);
      if (!in_dst[x - lo]) dst_c.push_back(x);
    }
    for (size_t i = 0; i < src.size(); ++i) img[src[i]] = dst[i];
    for (size_t i = 0; i < src_c.size(); ++i) img[src_c[i]] = dst_c[i];
    // restriction parity
    std::vector<uint32_t> restr(hi - lo);
    for (uint32_t x = lo; x < hi; ++x) restr[x - lo] = img[x] - lo;
    if (!Permutation(restr).even()) {
      require(src.size() >= 2, Err::search_exhausted, "no room to fix parity");
      std::swap(img[src[0]], img[src[1]]);
    }
  };
  std::vector<uint32_t> img(deg);
  build_half(0, half, src0, dst0, img);
  build_half(half, deg, src1, dst1, img);
  return Permutation(std::move(img));
}

// 3-letter core: an involution pi of type 2^(4n) equals a * theta * b * theta * c
// with a, b, c in Gamma.
void involution_core(const Permutation& pi, uint32_t n, const Permutation& theta,
                     Permutation& a, Permutation& b, Permutation& c) {
  const uint32_t deg = 8 * n, half = 4 * n;
  std::vector<uint32_t> cross0;  // points of half0 sent into half1
  std::vector<uint32_t> inv0, inv1;
  for (uint32_t x = 0; x < half; ++x)
    (pi(x) < half ? inv0 : cross0).push_back(x);
  for (uint32_t x = half; x < deg; ++x)
    if (pi(x) >= half) inv1.push_back(x);
  const uint32_t t = static_cast<uint32_t>(cross0.size());

  std::vector<uint32_t> D, E;
  if (t >= 2 * n) {
    D.assign(cross0.begin(), cross0.begin() + 2 * n);  // 2n least crossing points
    for (uint32_t x : D) E.push_back(pi(x));
  } else {
    // pick n least pi-invariant pairs inside each half
    auto pick_pairs = [&](const std::vector<uint32_t>& inv, std::vector<uint32_t>& out) {
      std::vector<bool> taken(deg, false);
      uint32_t pairs = 0;
      for (uint32_t x : inv) {
        if (pairs == n) break;
        if (taken[x]) continue;
        taken[x] = true;
        taken[pi(x)] = true;
        out.push_back(x);
        out.push_back(pi(x));
        ++pairs;
      }
      require(pairs == n, Err::search_exhausted, "not enough invariant pairs");
    };
    pick_pairs(inv0, D);
    pick_pairs(inv1, E);
  }

  std::vector<uint32_t> odd_lo, odd_hi;  // Delta2 split by half
  for (uint32_t x = 1; x < half; x += 2) odd_lo.push_back(x);
  for (uint32_t x = half + 1; x < deg; x += 2) odd_hi.push_back(x);

  const Permutation psi1 = gamma_with_images(deg, half, D, odd_lo, E, odd_hi);
  const Permutation psi2 = theta * psi1 * pi * psi1.inverse() * theta;
  a = psi1.inverse();
  b = psi2;
  c = psi1;
}

}  // namespace

PermWitness uni2_factor(const Permutation& phi, uint32_t n, uint64_t seed) {
  require(n >= 1, Err::degree_too_large, "uni2 needs n >= 1");
  const uint32_t deg = 8 * n, half = 4 * n;
  require(phi.degree() == deg, Err::degree_mismatch, "phi must act on 8n points");
  require(phi.even(), Err::not_even, "phi must lie in Alt(8n)");

  const Permutation theta = uni2_theta(n);
  PermWitness bren = brenner_factor(phi, 2 * n, seed);

  Permutation a[4], b[4], c[4];
  for (int i = 0; i < 4; ++i)
    involution_core(bren.letters[i].element, n, theta, a[i], b[i], c[i]);

  std::vector<Permutation> psi = {a[0],        b[0], c[0] * a[1], b[1], c[1] * a[2],
                                  b[2],        c[2] * a[3], b[3], c[3]};
  PermWitness w;
  w.target = phi;
  for (size_t i = 0; i < psi.size(); ++i) {
    w.letters.push_back({psi[i], "Gamma"});
    if (i + 1 < psi.size()) w.letters.push_back({theta, "theta"});
  }
  (void)half;
  return w;
}

}  // namespace unifac::perm
