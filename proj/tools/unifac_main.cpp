// Command-line front end: factorize / verify / cover subcommands with
// machine-readable JSON reports. Exit codes: 0 ok, 1 validation failure,
// 2 usage or parse error, 3 cap or hypothesis error.
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "unifac/class_cover.hpp"
#include "unifac/cover.hpp"
#include "unifac/generic_sequence.hpp"
#include "unifac/pair_span.hpp"
#include "unifac/perm_factor.hpp"
#include "unifac/report.hpp"
#include "unifac/sl_factor.hpp"
#include "unifac/sp_word.hpp"
#include "unifac/su3.hpp"
#include "unifac/symmetric_module.hpp"
#include "unifac/torus.hpp"

using namespace unifac;

namespace {

int exit_code_for(Err code) {
  switch (code) {
    case Err::parse_error:
    case Err::lemma_unknown:
    case Err::non_prime: return 2;
    case Err::cap_exceeded:
    case Err::degree_too_large:
    case Err::dimension_too_small:
    case Err::group_too_large:
    case Err::depth_explosion:
    case Err::hypothesis_violated: return 3;
    default: return 1;
  }
}

struct Options {
  uint32_t m = 0, n = 0, d = 0;
  uint64_t q = 0;
  uint32_t bound = 0, depth = 3;
  uint64_t seed = 1, count = 1000;
  std::string m_range;
  std::string out;
  std::string profile = "full";
  bool timings = false;
};

CLI::App* g_parsed_sub = nullptr;

void fill_params(report::Report& rep) {
  if (!g_parsed_sub) return;
  for (const auto* o : g_parsed_sub->get_options()) {
    if (o->count() == 0 || o->results().empty()) continue;
    std::string name = o->get_name();
    if (name == "--out" || name == "--timings") continue;  // not part of the config echo
    rep.params.push_back({name, o->results()[0]});
  }
}

void emit(const report::Report& rep, const Options& opt) {
  std::string text = rep.to_json();
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(opt.out);
    f << text;
  }
}

std::pair<uint32_t, uint32_t> split_q(uint64_t q) {
  uint32_t p = 0;
  for (uint32_t c = 2; uint64_t(c) * c <= q; ++c)
    if (q % c == 0) {
      p = c;
      break;
    }
  if (!p) p = static_cast<uint32_t>(q);
  uint32_t e = 0;
  uint64_t rest = q;
  while (rest > 1) {
    require(rest % p == 0, Err::non_prime, "q must be a prime power");
    rest /= p;
    ++e;
  }
  require(e >= 1, Err::parse_error, "q must be at least 2");
  return {p, e};
}

std::pair<uint32_t, uint32_t> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    uint32_t v = std::stoul(text);
    return {v, v};
  }
  return {static_cast<uint32_t>(std::stoul(text.substr(0, dots))),
          static_cast<uint32_t>(std::stoul(text.substr(dots + 2)))};
}

std::vector<perm::Permutation> alt_elements(uint32_t deg) {
  std::vector<perm::Permutation> out;
  uint64_t total = 1;
  for (uint32_t i = 2; i <= deg; ++i) total *= i;
  for (uint64_t r = 0; r < total; ++r) {
    auto p = perm::Permutation::unrank(deg, r);
    if (p.even()) out.push_back(std::move(p));
  }
  return out;
}

// ---- witness serialization and reload validation ----

template <class G, class Parse, class TagOk>
bool witness_roundtrip_ok(const Witness<G>& w, const Parse& parse, const TagOk& tag_ok) {
  // serialize, parse back, re-multiply: the report's validated flag comes from
  // the reloaded copy
  Witness<G> reloaded;
  reloaded.target = parse(w.target.str());
  for (const auto& l : w.letters) reloaded.letters.push_back({parse(l.element.str()), l.tag});
  return reloaded.validate(tag_ok);
}

std::string perm_witness_payload(const perm::PermWitness& w) {
  std::vector<std::pair<std::string, std::string>> letters;
  for (const auto& l : w.letters) letters.push_back({l.element.str(), l.tag});
  return report::witness_json(w.target.str(), letters);
}

std::string mat_witness_payload(const mat::MatWitness& w) {
  std::vector<std::pair<std::string, std::string>> letters;
  for (const auto& l : w.letters) letters.push_back({l.element.str(), l.tag});
  return report::witness_json(w.target.str(), letters);
}

// ---- factorize ----

int cmd_factorize(const std::string& lemma, const std::string& target, Options& opt) {
  report::Report rep;
  rep.command = "factorize " + lemma;
  rep.seed = opt.seed;
  auto t0 = std::chrono::steady_clock::now();

  if (lemma == "uni1") {
    require(opt.m >= 3, Err::parse_error, "uni1 needs --m");
    auto phi = perm::parse_cycles(target, opt.m + 1);
    auto w = perm::uni1_factor(phi, opt.m);
    const auto theta = perm::uni1_theta(opt.m);
    bool ok = witness_roundtrip_ok(
        w, [&](const std::string& s) { return perm::parse_cycles(s, opt.m + 1); },
        [&](const perm::Permutation& g, const std::string& tag) {
          return tag == "theta" ? g == theta : perm::in_point_stabilizer_alt(g, opt.m);
        });
    rep.cases.push_back({target, perm_witness_payload(w), ok});
  } else if (lemma == "brenner") {
    require(opt.n >= 2, Err::parse_error, "brenner needs --n >= 2");
    auto phi = perm::parse_cycles(target, 4 * opt.n);
    auto w = perm::brenner_factor(phi, opt.n, opt.seed);
    bool ok = witness_roundtrip_ok(
        w, [&](const std::string& s) { return perm::parse_cycles(s, 4 * opt.n); },
        [&](const perm::Permutation& g, const std::string&) {
          return perm::has_type_2_pow(g, 2 * opt.n);
        });
    rep.cases.push_back({target, perm_witness_payload(w), ok});
  } else if (lemma == "uni2") {
    require(opt.n >= 1, Err::parse_error, "uni2 needs --n");
    auto phi = perm::parse_cycles(target, 8 * opt.n);
    auto w = perm::uni2_factor(phi, opt.n, opt.seed);
    const auto theta = perm::uni2_theta(opt.n);
    bool ok = witness_roundtrip_ok(
        w, [&](const std::string& s) { return perm::parse_cycles(s, 8 * opt.n); },
        [&](const perm::Permutation& g, const std::string& tag) {
          return tag == "theta" ? g == theta : perm::in_gamma_split(g, 4 * opt.n);
        });
    rep.cases.push_back({target, perm_witness_payload(w), ok});
  } else if (lemma == "sl-step" || lemma == "sl-double") {
    auto phi = mat::parse_matrix(target);
    const auto& F = phi.field();
    auto w = lemma == "sl-step" ? mat::sl_step_factor(phi)
                                : mat::sl_double_factor(phi, opt.seed);
    bool ok;
    if (lemma == "sl-step") {
      const auto theta = mat::step_weyl_connective(F, phi.dim());
      ok = witness_roundtrip_ok(
          w, [](const std::string& s) { return mat::parse_matrix(s); },
          [&](const mat::Matrix& g, const std::string& tag) {
            if (tag == "S") return mat::is_step_s_letter(g);
            if (tag == "T") return mat::is_step_t_letter(g);
            return g == theta;
          });
    } else {
      const auto conn = mat::double_connectives(F, phi.dim());
      ok = witness_roundtrip_ok(
          w, [](const std::string& s) { return mat::parse_matrix(s); },
          [&](const mat::Matrix& g, const std::string& tag) {
            if (tag == "Gamma") return mat::is_gamma_letter(g);
            if (tag == "J1") return g == conn.tau[0];
            if (tag == "J2") return g == conn.tau[1];
            if (tag == "J3") return g == conn.tau[2];
            if (tag == "J4") return g == conn.tau[3];
            if (tag == "kappa") return g == conn.kappa || g == conn.kappa.inverse();
            return g == conn.theta;
          });
    }
    rep.cases.push_back({target, mat_witness_payload(w), ok});
  } else if (lemma == "sp-word") {
    require(opt.d >= 1 && opt.q >= 2, Err::parse_error, "sp-word needs --d and --q");
    uint32_t lam = static_cast<uint32_t>(std::stoul(target));
    auto w = forms::sp_borel_torus_word(lam, opt.d, opt.q);
    auto s = forms::make_form_space(forms::FormKind::symplectic, opt.d, opt.q);
    bool ok = w.multiplies_back();
    for (const auto& l : w.letters) ok = ok && forms::is_isometry(s, l.element);
    rep.cases.push_back({target, mat_witness_payload(w), ok});
  } else if (lemma == "su3") {
    require(opt.q >= 2, Err::parse_error, "su3 needs --q");
    uint32_t lam = static_cast<uint32_t>(std::stoul(target));
    auto f = forms::su3_torus_factor(lam, opt.q);
    auto s = forms::make_form_space(forms::FormKind::hermitian_odd, 1, opt.q);
    bool ok = f.a1 * f.b * f.a2 == f.product && forms::is_isometry(s, f.a1) &&
              forms::is_isometry(s, f.b) && forms::is_isometry(s, f.a2);
    rep.cases.push_back(
        {target,
         report::witness_json(f.product.str(), {{f.a1.str(), "A1"},
                                                {f.b.str(), "B"},
                                                {f.a2.str(), "A2"}}),
         ok});
  } else if (lemma == "torus") {
    require(opt.q >= 2 && opt.n >= 1, Err::parse_error, "torus needs --q and --n");
    auto t = mat::regular_torus_factor(opt.q, opt.n);
    bool ok = t.pi1 * t.pi2 == t.psi && (t.pi1 * t.pi1).is_identity() &&
              (t.pi2 * t.pi2).is_identity() &&
              t.pi1 * t.psi * t.pi1.inverse() == t.psi.inverse();
    rep.cases.push_back(
        {"q=" + std::to_string(opt.q) + ",n=" + std::to_string(opt.n),
         report::witness_json(t.psi.str(), {{t.pi1.str(), "C"}, {t.pi2.str(), "C"}}), ok});
  } else {
    fail(Err::lemma_unknown, "no factorizer named " + lemma);
  }

  rep.total = rep.cases.size();
  for (const auto& c : rep.cases)
    if (!c.validated) ++rep.failures;
  if (opt.timings)
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
  fill_params(rep);
  emit(rep, opt);
  return rep.failures ? 1 : 0;
}

// ---- verify ----

int cmd_verify(const std::string& lemma, Options& opt) {
  report::Report rep;
  rep.command = "verify " + lemma;
  rep.seed = opt.seed;
  auto t0 = std::chrono::steady_clock::now();
  uint64_t total = 0, failures = 0;
  std::string first_failure;

  auto tally = [&](bool ok, const std::string& label) {
    ++total;
    if (!ok) {
      ++failures;
      if (first_failure.empty()) first_failure = label;
    }
  };

  if (lemma == "uni1") {
    auto [lo, hi] = parse_range(opt.m_range.empty() ? "3..5" : opt.m_range);
    for (uint32_t m = lo; m <= hi; ++m) {
      const auto theta = perm::uni1_theta(m);
      for (const auto& phi : alt_elements(m + 1)) {
        auto w = perm::uni1_factor(phi, m);
        bool ok = w.validate([&](const perm::Permutation& g, const std::string& tag) {
          return tag == "theta" ? g == theta : perm::in_point_stabilizer_alt(g, m);
        });
        tally(ok, "m=" + std::to_string(m) + " " + phi.str());
      }
    }
  } else if (lemma == "brenner") {
    require(opt.n >= 2, Err::parse_error, "brenner needs --n >= 2");
    auto check = [&](const perm::Permutation& phi) {
      auto w = perm::brenner_factor(phi, opt.n, opt.seed);
      bool ok = w.letters.size() == 4 &&
                w.validate([&](const perm::Permutation& g, const std::string&) {
                  return perm::has_type_2_pow(g, 2 * opt.n);
                });
      tally(ok, phi.str());
    };
    if (opt.n == 2) {
      for (const auto& phi : alt_elements(8)) check(phi);
    } else {
      std::mt19937_64 rng(opt.seed);
      for (uint64_t i = 0; i < opt.count; ++i) {
        auto p = perm::Permutation::unrank(4 * opt.n, rng() % 1000000);
        if (!p.even()) p = p * perm::Permutation::from_transpositions(4 * opt.n, {{0, 1}});
        check(p);
      }
    }
  } else if (lemma == "uni2") {
    require(opt.n == 1, Err::parse_error, "exhaustive uni2 runs at --n 1");
    const auto theta = perm::uni2_theta(1);
    for (const auto& phi : alt_elements(8)) {
      auto w = perm::uni2_factor(phi, 1, opt.seed);
      bool ok = w.letters.size() == 17 &&
                w.validate([&](const perm::Permutation& g, const std::string& tag) {
                  return tag == "theta" ? g == theta : perm::in_gamma_split(g, 4);
                });
      tally(ok, phi.str());
    }
  } else if (lemma == "saxl") {
    require(opt.n >= 1 && opt.q >= 2, Err::parse_error, "saxl needs --q and --n");
    auto [p, e] = split_q(opt.q);
    const auto& F = gf::make_field(p, e);
    auto rep_mat = mat::involution_class_rep(F, opt.n);
    uint32_t bound = opt.bound ? opt.bound : 5;
    if (mat::sl_order(4 * opt.n, opt.q) <= 1000000) {
      auto prof = mat::class_covering_radius(rep_mat);
      tally(prof.radius_noncentral <= bound, "radius_noncentral");
      tally(prof.radius <= 2 * bound, "radius");
      std::string profile = "[";
      for (size_t k = 0; k < prof.count_at.size(); ++k) {
        if (k) profile += ", ";
        profile += std::to_string(prof.count_at[k]);
      }
      profile += "]";
      rep.cases.push_back(
          {"bfs", "{\"group\": \"sl:" + std::to_string(4 * opt.n) + "," +
                      std::to_string(opt.q) + "\", \"class\": " +
                      std::to_string(prof.class_size) + ", \"profile\": " + profile +
                      ", \"radius\": " + std::to_string(prof.radius) + "}",
           prof.radius <= 2 * bound});
    } else {
      uint32_t seen =
          mat::sampled_covering_check(rep_mat, bound, static_cast<uint32_t>(opt.count), opt.seed);
      tally(seen <= bound, "sampled max distance " + std::to_string(seen));
      rep.cases.push_back({"sampled_max_distance", std::to_string(seen), seen <= bound});
    }
  } else if (lemma == "torus") {
    auto t = mat::regular_torus_factor(opt.q ? opt.q : 2, opt.n ? opt.n : 1);
    tally(t.pi1 * t.pi2 == t.psi, "product");
    tally((t.pi1 * t.pi1).is_identity() && (t.pi2 * t.pi2).is_identity(), "involutions");
    tally(t.pi1 * t.psi * t.pi1.inverse() == t.psi.inverse(), "inversion");
    tally(t.psi.det() == 1, "determinant");
  } else if (lemma == "sl-step") {
    require(opt.d >= 2 && opt.q >= 2, Err::parse_error, "sl-step needs --d and --q");
    auto [p, e] = split_q(opt.q);
    const auto& F = gf::make_field(p, e);
    const auto theta = mat::step_weyl_connective(F, opt.d + 1);
    auto check = [&](const mat::Matrix& phi) {
      auto w = mat::sl_step_factor(phi);
      tally(w.validate([&](const mat::Matrix& g, const std::string& tag) {
              if (tag == "S") return mat::is_step_s_letter(g);
              if (tag == "T") return mat::is_step_t_letter(g);
              return g == theta;
            }),
            phi.str());
    };
    uint64_t order = mat::sl_order(opt.d + 1, opt.q);
    if (order <= 25000) {
      uint64_t space = 1;
      for (uint32_t i = 0; i < (opt.d + 1) * (opt.d + 1); ++i) space *= F.q;
      for (uint64_t v = 0; v < space; ++v) {
        mat::Matrix m(F, opt.d + 1);
        uint64_t c = v;
        for (uint32_t i = 0; i < opt.d + 1; ++i)
          for (uint32_t j = 0; j < opt.d + 1; ++j) {
            m.at(i, j) = static_cast<uint32_t>(c % F.q);
            c /= F.q;
          }
        if (m.det() == 1) check(m);
      }
    } else {
      std::mt19937_64 rng(opt.seed);
      for (uint64_t i = 0; i < opt.count; ++i) check(mat::random_sl(F, opt.d + 1, rng));
    }
  } else if (lemma == "sl-double") {
    require(opt.d >= 1 && opt.q >= 2, Err::parse_error, "sl-double needs --d and --q");
    auto [p, e] = split_q(opt.q);
    const auto& F = gf::make_field(p, e);
    const auto conn = mat::double_connectives(F, 8 * opt.d);
    std::mt19937_64 rng(opt.seed);
    for (uint64_t i = 0; i < opt.count; ++i) {
      auto phi = mat::random_sl(F, 8 * opt.d, rng);
      auto w = mat::sl_double_factor(phi, opt.seed);
      tally(w.validate([&](const mat::Matrix& g, const std::string& tag) {
              if (tag == "Gamma") return mat::is_gamma_letter(g);
              if (tag == "J1") return g == conn.tau[0];
              if (tag == "J2") return g == conn.tau[1];
              if (tag == "J3") return g == conn.tau[2];
              if (tag == "J4") return g == conn.tau[3];
              if (tag == "kappa") return g == conn.kappa || g == conn.kappa.inverse();
              return g == conn.theta;
            }),
            "sample " + std::to_string(i));
    }
  } else if (lemma == "split") {
    require(opt.d >= 1 && opt.q >= 2, Err::parse_error, "split needs --d and --q");
    auto [p, e] = split_q(opt.q);
    const auto& F = gf::make_field(p, e);
    uint64_t space = 1;
    for (uint32_t i = 0; i < opt.d * opt.d; ++i) space *= F.q;
    require(space <= (1u << 22), Err::cap_exceeded, "exhaustive split sweep too large");
    for (uint64_t v = 0; v < space; ++v) {
      mat::Matrix s(F, opt.d);
      uint64_t c = v;
      for (uint32_t i = 0; i < opt.d; ++i)
        for (uint32_t j = 0; j < opt.d; ++j) {
          s.at(i, j) = static_cast<uint32_t>(c % F.q);
          c /= F.q;
        }
      if (opt.d == 1 && F.q == 2 && s.at(0, 0) == 1) continue;  // the known boundary
      auto [a, b] = mat::split_nonsingular(s);
      tally(a.invertible() && b.invertible() && a + b == s, s.str());
    }
  } else if (lemma == "symmod") {
    require(opt.d >= 2 && opt.q >= 2, Err::parse_error, "symmod needs --d and --q");
    auto [p, e] = split_q(opt.q);
    const auto& F = gf::make_field(p, e);
    uint32_t entries = opt.d * (opt.d + 1) / 2;
    uint64_t space = 1;
    for (uint32_t i = 0; i < entries; ++i) space *= F.q;
    require(space <= (1u << 22), Err::cap_exceeded, "exhaustive symmod sweep too large");
    for (uint64_t v = 0; v < space; ++v) {
      mat::Matrix s(F, opt.d);
      uint64_t c = v;
      for (uint32_t i = 0; i < opt.d; ++i)
        for (uint32_t j = i; j < opt.d; ++j) {
          uint32_t val = static_cast<uint32_t>(c % F.q);
          c /= F.q;
          s.at(i, j) = val;
          s.at(j, i) = val;
        }
      auto comb = forms::symmetric_module_factor(s);
      tally(forms::verify_symmetric_combination(comb), s.str());
    }
  } else if (lemma == "sp-word") {
    require(opt.d >= 1 && opt.q >= 2, Err::parse_error, "sp-word needs --d and --q");
    auto s = forms::make_form_space(forms::FormKind::symplectic, opt.d, opt.q);
    for (uint32_t lam = 1; lam < s.field->q; ++lam) {
      auto w = forms::sp_borel_torus_word(lam, opt.d, opt.q);
      bool ok = w.multiplies_back();
      for (const auto& l : w.letters) ok = ok && forms::is_isometry(s, l.element);
      tally(ok, "lambda=" + std::to_string(lam));
    }
  } else if (lemma == "su3") {
    require(opt.q >= 2, Err::parse_error, "su3 needs --q");
    auto s = forms::make_form_space(forms::FormKind::hermitian_odd, 1, opt.q);
    const auto& F = *s.field;
    for (uint32_t lam : forms::su3_norm_set(opt.q)) {
      auto f = forms::su3_torus_factor(lam, opt.q);
      tally(f.a1 * f.b * f.a2 == f.product && forms::is_isometry(s, f.a1) &&
                forms::is_isometry(s, f.b) && forms::is_isometry(s, f.a2),
            "identity lambda=" + std::to_string(lam));
    }
    for (uint32_t lam = 1; lam < F.q; ++lam) {
      auto [l1, l2] = forms::lambda_split(lam, opt.q);
      tally(forms::in_su3_norm_set(l1, opt.q) && forms::in_su3_norm_set(l2, opt.q) &&
                F.mul(l1, F.inv(F.conj(l2, opt.q))) == lam,
            "split lambda=" + std::to_string(lam));
    }
  } else if (lemma == "even-weight") {
    require(opt.d >= 2, Err::parse_error, "even-weight needs --d");
    require(opt.d <= 20, Err::cap_exceeded, "even-weight sweep cap");
    std::vector<uint32_t> v(opt.d, 0);
    for (uint32_t i = 0; i < opt.d / 2; ++i) v[i] = 1;
    for (uint32_t mask = 0; mask < (1u << opt.d); ++mask) {
      std::vector<uint32_t> u(opt.d);
      uint32_t wgt = 0;
      for (uint32_t i = 0; i < opt.d; ++i) {
        u[i] = (mask >> i) & 1;
        wgt += u[i];
      }
      if (wgt % 2) continue;
      auto [pi, phi] = forms::even_weight_decompose(u);
      bool ok = true;
      for (uint32_t i = 0; i < opt.d; ++i) {
        uint32_t x = 0, y = 0;
        for (uint32_t j = 0; j < opt.d; ++j) {
          if (pi(j) == i) x = v[j];
          if (phi(j) == i) y = v[j];
        }
        ok = ok && ((x ^ y) == u[i]);
      }
      tally(ok, "mask=" + std::to_string(mask));
    }
  } else if (lemma == "generic") {
    uint32_t m = opt.m ? opt.m : 4;
    uint32_t tmax = opt.n ? opt.n : 8;
    for (uint32_t t = 0; t <= tmax; ++t)
      tally(perm::is_generic(perm::generic_sequence(m, t).elements, m),
            "t=" + std::to_string(t));
    for (uint32_t t = 0; t + 1 < m - 1; ++t) {
      auto s = perm::generic_sequence(m, t);
      auto tau = perm::diagonal_centralizer_element(s);
      bool ok = tau.cycle_type() == std::map<uint32_t, uint32_t>{{2, 1u << (m - 1)}};
      for (const auto& g : perm::generated_elementary_abelian(s.elements))
        ok = ok && tau * g == g * tau;
      tally(ok, "dce t=" + std::to_string(t));
    }
  } else {
    fail(Err::lemma_unknown, "no verifier named " + lemma);
  }

  rep.total = total;
  rep.failures = failures;
  if (!first_failure.empty())
    rep.cases.push_back({first_failure, "first counterexample", false});
  if (opt.timings)
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
  fill_params(rep);
  emit(rep, opt);
  return failures ? 1 : 0;
}

// ---- cover ----

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  require(static_cast<bool>(f), Err::parse_error, "cannot open " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

int cmd_cover(const std::string& sub, const std::vector<std::string>& files, Options& opt) {
  report::Report rep;
  rep.command = "cover " + sub;
  rep.seed = opt.seed;

  if (sub == "star") {
    require(files.size() == 2, Err::parse_error, "cover star needs two files");
    auto [fam1, cs1] = cover::covers_from_json(slurp(files[0]));
    auto [fam2, cs2] = cover::covers_from_json(slurp(files[1]));
    require(cs1.size() == 1 && cs2.size() == 1, Err::parse_error,
            "star expects one cover per file");
    auto prod = cover::star(fam1, cs1[0], cs2[0]);
    cover::validate_cover(fam1, prod);
    bool bound_ok = true;
    for (uint32_t n = 0; n < fam1.window(); ++n)
      bound_ok = bound_ok &&
                 prod.sets[n].size() <= 2 * cs1[0].sets[n].size() * cs2[0].sets[n].size();
    rep.cases.push_back({"star", cover::cover_to_json(fam1, prod), bound_ok});
    rep.total = 1;
    rep.failures = bound_ok ? 0 : 1;
  } else if (sub == "escape") {
    require(files.size() == 1, Err::parse_error, "cover escape needs one file");
    auto [fam, cs] = cover::covers_from_json(slurp(files[0]));
    cover::BoundFunction f;
    auto esc = cover::escape_element(fam, cs, opt.depth, f);
    std::string gtxt = "[";
    for (uint32_t n = 0; n < fam.window(); ++n) {
      if (n) gtxt += ", ";
      gtxt += "\"" + fam.groups[n]->print(esc.g[n]) + "\"";
    }
    gtxt += "]";
    bool ok = !cover::covered_subgroup_contains(fam, cs, opt.depth, esc.g);
    rep.cases.push_back({"escape", "{\"g\": " + gtxt + ", \"depth\": " +
                                       std::to_string(opt.depth) + ", \"checked_covers\": " +
                                       std::to_string(esc.checked_covers) + "}",
                         ok});
    rep.total = 1;
    rep.failures = ok ? 0 : 1;
  } else if (sub == "closure") {
    require(files.size() == 1, Err::parse_error, "cover closure needs one file");
    auto [fam, cs] = cover::covers_from_json(slurp(files[0]));
    auto cl = cover::closure_enumerate(fam, cs, opt.depth);
    rep.cases.push_back({"closure", std::to_string(cl.size()) + " covers", true});
    rep.total = 1;
  } else {
    fail(Err::lemma_unknown, "no cover subcommand named " + sub);
  }
  fill_params(rep);
  emit(rep, opt);
  return rep.failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification workbench for finite-group factorization identities"};
  app.require_subcommand(1);
  Options opt;

  std::string lemma, target, cover_sub;
  std::vector<std::string> files;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--m", opt.m_range, "degree parameter m (or range a..b for verify)");
    sub->add_option("--n", opt.n, "block parameter n");
    sub->add_option("--d", opt.d, "dimension parameter d");
    sub->add_option("--q", opt.q, "field size (prime power)");
    sub->add_option("--bound", opt.bound, "covering bound");
    sub->add_option("--depth", opt.depth, "closure star-count bound");
    sub->add_option("--seed", opt.seed, "seed for randomized searches");
    sub->add_option("--count", opt.count, "sample count for sampled sweeps");
    sub->add_option("--profile", opt.profile, "quick | full | big");
    sub->add_option("--out", opt.out, "report path (stdout when absent)");
    sub->add_flag("--timings", opt.timings, "include wall-clock timings in reports");
  };

  auto* fac = app.add_subcommand("factorize", "factor one element, emit a validated witness");
  fac->add_option("lemma", lemma, "uni1|uni2|brenner|sl-step|sl-double|sp-word|su3|torus")
      ->required();
  fac->add_option("target", target, "target element (cycle notation / matrix / element code)");
  add_common(fac);

  auto* ver = app.add_subcommand("verify", "exhaustive or sampled sweeps");
  ver->add_option("lemma", lemma,
                  "uni1|uni2|brenner|saxl|torus|sl-step|sl-double|split|symmod|sp-word|su3|"
                  "even-weight|generic")
      ->required();
  add_common(ver);

  auto* cov = app.add_subcommand("cover", "cover algebra: star / escape / closure");
  cov->add_option("sub", cover_sub, "star|escape|closure")->required();
  cov->add_option("files", files, "cover JSON files");
  add_common(cov);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  g_parsed_sub = fac->parsed() ? fac : ver->parsed() ? ver : cov;
  try {
    if (fac->parsed()) {
      if (!opt.m_range.empty()) opt.m = parse_range(opt.m_range).first;
      return cmd_factorize(lemma, target, opt);
    }
    if (ver->parsed()) {
      if (!opt.m_range.empty()) opt.m = parse_range(opt.m_range).first;
      return cmd_verify(lemma, opt);
    }
    if (cov->parsed()) return cmd_cover(cover_sub, files, opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
