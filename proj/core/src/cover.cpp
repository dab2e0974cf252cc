#include "unifac/cover.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include <json.hpp>

#include "unifac/config.hpp"

namespace unifac::cover {

namespace {

using json = nlohmann::ordered_json;

std::vector<uint64_t> star_set(const GroupRealization& G, const std::vector<uint64_t>& a,
                               const std::vector<uint64_t>& b) {
  std::vector<uint64_t> out;
  out.reserve(2 * a.size() * b.size());
  for (uint64_t x : a)
    for (uint64_t y : b) {
      uint64_t p = G.mul(x, y);
      out.push_back(p);
      out.push_back(G.inv(p));
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// *-expressions over leaf covers, enumerated by star count then shape; since
// children precede parents in the table, evaluations memoize cleanly
struct ExprTable {
  // expr i: leaf (children[i] = {-1, leaf}) or node {left, right}
  std::vector<std::pair<int64_t, int64_t>> children;
  std::vector<uint32_t> stars;
  mutable std::vector<std::vector<std::vector<uint64_t>>> memo;  // [expr][n]

  uint64_t leaf_count = 0;

  std::vector<uint64_t> eval(const GroupFamily& fam, const std::vector<Cover>& C,
                             size_t expr, uint32_t n) const {
    if (memo.size() <= expr) memo.resize(expr + 1);
    if (memo[expr].empty()) memo[expr].resize(fam.window());
    if (!memo[expr][n].empty()) return memo[expr][n];
    std::vector<uint64_t> result;
    if (children[expr].first < 0) {
      result = C[children[expr].second].sets[n];
    } else {
      auto l = eval(fam, C, children[expr].first, n);
      auto r = eval(fam, C, children[expr].second, n);
      result = star_set(*fam.groups[n], l, r);
    }
    memo[expr][n] = result;
    return result;
  }
};

// builds the expression schedule and calls visit(expr_index) for every
// expression whose VALUE is new (dedup by per-index set hash)
template <class Visit>
uint64_t schedule_closure(const GroupFamily& fam, const std::vector<Cover>& C,
                          uint32_t depth, ExprTable& tab, const Visit& visit) {
  const uint32_t N = fam.window();
  std::vector<std::vector<size_t>> by_stars(depth + 1);
  std::unordered_set<uint64_t> seen_values;
  uint64_t scheduled = 0;

  auto value_hash = [&](size_t expr) {
    uint64_t h = 1469598103934665603ull;
    for (uint32_t n = 0; n < N; ++n) {
      for (uint64_t k : tab.eval(fam, C, expr, n)) {
        h ^= k + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
      }
      h ^= 0xabcdef1234567890ull;
      h *= 1099511628211ull;
    }
    return h;
  };

  auto consider = [&](size_t expr) {
    require(tab.children.size() <= limits().closure_result_cap, Err::depth_explosion,
            "closure cap exceeded");
    if (seen_values.insert(value_hash(expr)).second) {
      ++scheduled;
      visit(expr);
    }
  };

  for (size_t i = 0; i < C.size(); ++i) {
    tab.children.push_back({-1, static_cast<int64_t>(i)});
    tab.stars.push_back(0);
    by_stars[0].push_back(tab.children.size() - 1);
    consider(tab.children.size() - 1);
  }
  tab.leaf_count = C.size();

  for (uint32_t k = 1; k <= depth; ++k) {
    for (uint32_t a = 0; a < k; ++a) {
      uint32_t b = k - 1 - a;
      // snapshot sizes: expressions of star count a and b already complete
      auto lefts = by_stars[a];
      auto rights = by_stars[b];
      for (size_t el : lefts)
        for (size_t er : rights) {
          tab.children.push_back({static_cast<int64_t>(el), static_cast<int64_t>(er)});
          tab.stars.push_back(k);
          by_stars[k].push_back(tab.children.size() - 1);
          consider(tab.children.size() - 1);
        }
    }
  }
  return scheduled;
}

}  // namespace

void validate_cover(const GroupFamily& fam, const Cover& c) {
  require(c.sets.size() == fam.window(), Err::shape_mismatch,
          "cover has wrong window size");
  for (uint32_t n = 0; n < fam.window(); ++n) {
    const auto& G = *fam.groups[n];
    const auto& s = c.sets[n];
    require(!s.empty(), Err::shape_mismatch, "empty cover set");
    require(std::is_sorted(s.begin(), s.end()), Err::shape_mismatch,
            "cover sets must be sorted");
    require(std::binary_search(s.begin(), s.end(), G.identity()), Err::shape_mismatch,
            "cover set misses the identity");
    for (uint64_t a : s)
      require(std::binary_search(s.begin(), s.end(), G.inv(a)), Err::shape_mismatch,
              "cover set not inverse-closed");
  }
}

bool is_f_cover(const GroupFamily& fam, const Cover& c, const BoundFunction& f) {
  for (uint32_t n = 0; n < fam.window(); ++n)
    if (c.sets[n].size() > f(n)) return false;
  return true;
}

bool covers(const GroupFamily& fam, const Cover& c, const std::vector<uint64_t>& g) {
  require(g.size() == fam.window() && c.sets.size() == fam.window(), Err::shape_mismatch,
          "tuple/cover window mismatch");
  for (uint32_t n = 0; n < fam.window(); ++n)
    if (!std::binary_search(c.sets[n].begin(), c.sets[n].end(), g[n])) return false;
  return true;
}

Cover star(const GroupFamily& fam, const Cover& c1, const Cover& c2) {
  require(c1.sets.size() == fam.window() && c2.sets.size() == fam.window(),
          Err::shape_mismatch, "cover window mismatch");
  Cover out;
  for (uint32_t n = 0; n < fam.window(); ++n)
    out.sets.push_back(star_set(*fam.groups[n], c1.sets[n], c2.sets[n]));
  return out;
}

std::vector<Cover> closure_enumerate(const GroupFamily& fam, const std::vector<Cover>& C,
                                     uint32_t depth) {
  for (const auto& c : C) validate_cover(fam, c);
  std::vector<Cover> out;
  ExprTable tab;
  schedule_closure(fam, C, depth, tab, [&](size_t expr) {
    Cover v;
    for (uint32_t n = 0; n < fam.window(); ++n) v.sets.push_back(tab.eval(fam, C, expr, n));
    out.push_back(std::move(v));
    require(out.size() <= limits().closure_result_cap, Err::depth_explosion,
            "closure result cap exceeded");
  });
  return out;
}

bool covered_subgroup_contains(const GroupFamily& fam, const std::vector<Cover>& C,
                               uint32_t depth, const std::vector<uint64_t>& g) {
  require(g.size() == fam.window(), Err::shape_mismatch, "tuple window mismatch");
  bool found = false;
  ExprTable tab;
  schedule_closure(fam, C, depth, tab, [&](size_t expr) {
    if (found) return;
    bool all = true;
    for (uint32_t n = 0; n < fam.window() && all; ++n) {
      auto s = tab.eval(fam, C, expr, n);
      all = std::binary_search(s.begin(), s.end(), g[n]);
    }
    if (all) found = true;
  });
  return found;
}

EscapeResult escape_element(const GroupFamily& fam, const std::vector<Cover>& C,
                            uint32_t depth, const BoundFunction& f) {
  const uint32_t N = fam.window();
  for (const auto& c : C) {
    validate_cover(fam, c);
    require(is_f_cover(fam, c, f), Err::shape_mismatch, "input is not an f-cover");
  }
  // counting hypothesis |G_n| > 2^n f(n)^(n+1) at every window index
  for (uint32_t n = 0; n < N; ++n) {
    long double bound = 1;
    for (uint32_t i = 0; i <= n; ++i) bound *= static_cast<long double>(f(n));
    bound *= static_cast<long double>(uint64_t(1) << n);
    require(static_cast<long double>(fam.groups[n]->size()) > bound,
            Err::hypothesis_violated,
            "window index " + std::to_string(n) + " has too small a group");
  }

  std::vector<std::unordered_set<uint64_t>> blocked(N);
  std::vector<std::pair<size_t, uint32_t>> assignment;  // (expr, index)

  ExprTable tab;
  uint64_t scheduled = schedule_closure(fam, C, depth, tab, [&](size_t expr) {
    for (uint32_t n = 0; n < N; ++n) {
      auto s = tab.eval(fam, C, expr, n);
      uint64_t fresh = 0;
      for (uint64_t k : s)
        if (!blocked[n].count(k)) ++fresh;
      if (blocked[n].size() + fresh < fam.groups[n]->size()) {
        for (uint64_t k : s) blocked[n].insert(k);
        assignment.push_back({expr, n});
        return;
      }
    }
    fail(Err::hypothesis_violated, "no window index has room for a scheduled cover");
  });

  EscapeResult out;
  out.checked_covers = scheduled;
  for (uint32_t n = 0; n < N; ++n) {
    const auto& G = *fam.groups[n];
    uint64_t idx = 0;
    while (true) {
      require(idx < G.size(), Err::hypothesis_violated, "window group exhausted");
      uint64_t cand = G.element_at(idx);
      if (!blocked[n].count(cand)) {
        out.g.push_back(cand);
        break;
      }
      ++idx;
    }
  }

  // re-verify: every scheduled cover misses g at its assigned index
  for (auto [expr, n] : assignment) {
    auto s = tab.eval(fam, C, expr, n);
    require(!std::binary_search(s.begin(), s.end(), out.g[n]), Err::hypothesis_violated,
            "escape verification failed");
  }
  return out;
}

std::string cover_to_json(const GroupFamily& fam, const Cover& c) {
  json j;
  j["window"] = json::array();
  for (const auto& g : fam.groups) j["window"].push_back(g->descriptor());
  j["sets"] = json::array();
  for (uint32_t n = 0; n < fam.window(); ++n) {
    json row = json::array();
    for (uint64_t k : c.sets[n]) row.push_back(fam.groups[n]->print(k));
    j["sets"].push_back(row);
  }
  return j.dump(2);
}

std::pair<GroupFamily, std::vector<Cover>> covers_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    fail(Err::parse_error, std::string("bad cover JSON: ") + e.what());
  }
  require(j.contains("window") && j["window"].is_array(), Err::parse_error,
          "cover JSON needs a window array");
  std::vector<std::string> descriptors;
  for (const auto& w : j["window"]) descriptors.push_back(w.get<std::string>());
  GroupFamily fam = make_family(descriptors);

  auto parse_sets = [&](const json& sets) {
    require(sets.is_array() && sets.size() == fam.window(), Err::parse_error,
            "sets array must match the window");
    Cover c;
    for (uint32_t n = 0; n < fam.window(); ++n) {
      std::vector<uint64_t> keys;
      for (const auto& s : sets[n]) keys.push_back(fam.groups[n]->parse(s.get<std::string>()));
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      c.sets.push_back(std::move(keys));
    }
    validate_cover(fam, c);
    return c;
  };

  std::vector<Cover> covers;
  if (j.contains("sets")) {
    covers.push_back(parse_sets(j["sets"]));
  } else if (j.contains("covers")) {
    for (const auto& s : j["covers"]) covers.push_back(parse_sets(s));
  } else {
    fail(Err::parse_error, "cover JSON needs sets or covers");
  }
  return {std::move(fam), std::move(covers)};
}

}  // namespace unifac::cover
