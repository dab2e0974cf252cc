#include <doctest.h>

#include "unifac/generic_sequence.hpp"

using namespace unifac;
using namespace unifac::perm;

TEST_CASE("canonical sequences pass is_generic") {
  for (uint32_t m = 3; m <= 6; ++m)
    for (uint32_t t = 0; t <= 8; ++t) {
      auto s = generic_sequence(m, t);
      CHECK(is_generic(s.elements, m));
    }
}

TEST_CASE("canonical shapes") {
  auto s = generic_sequence(3, 0);
  CHECK(s.elements.size() == 1);
  CHECK(s.elements[0].cycle_type() == std::map<uint32_t, uint32_t>{{2, 4}});

  // three translations generate a regular elementary abelian group of order 8
  s = generic_sequence(3, 2);
  CHECK(orbit_decomposition(s.elements, 8).size() == 1);
  CHECK(orbit_decomposition(generic_sequence(3, 1).elements, 8).size() == 2);

  // the tail repeats element m-1
  s = generic_sequence(3, 5);
  for (uint32_t ell = 2; ell <= 5; ++ell) CHECK(s.elements[ell] == s.elements[2]);
}

TEST_CASE("is_generic rejects bad sequences") {
  auto s = generic_sequence(3, 1);
  // a 3-cycle is not an involution
  auto bad = s.elements;
  bad.push_back(parse_cycles("(1 2 3)", 8));
  CHECK_FALSE(is_generic(bad, 3));
  // two equal translations at t=1 < m-1: group order 2, not 4
  CHECK_FALSE(is_generic({s.elements[0], s.elements[0]}, 3));
  // the canonical pair is fine
  CHECK(is_generic(s.elements, 3));
}

TEST_CASE("diagonal centralizer element") {
  for (auto [m, t] : std::vector<std::pair<uint32_t, uint32_t>>{{3, 0}, {3, 1}, {4, 0}, {4, 1}, {4, 2}, {5, 2}}) {
    auto s = generic_sequence(m, t);
    auto tau = diagonal_centralizer_element(s);
    CHECK(tau.cycle_type() == std::map<uint32_t, uint32_t>{{2, 1u << (m - 1)}});
    for (const auto& g : generated_elementary_abelian(s.elements))
      CHECK(tau * g == g * tau);
    // tau extends the sequence generically
    auto ext = s.elements;
    ext.push_back(tau);
    CHECK(is_generic(ext, m));
  }
  // tail regime boundary
  auto s = generic_sequence(3, 2);
  CHECK_THROWS_AS(diagonal_centralizer_element(s), Error);
}

TEST_CASE("extend_generic walks the whole ladder") {
  GenericSequence s = generic_sequence(5, 0);
  for (uint32_t len = 2; len <= 8; ++len) {
    s = extend_generic(s);
    CHECK(s.elements.size() == len);
    CHECK(is_generic(s.elements, 5));
  }
  // tail extension repeats the last independent element
  auto t = generic_sequence(3, 2);
  t = extend_generic(t);
  CHECK(t.elements.size() == 4);
  CHECK(t.elements[3] == t.elements[2]);
  CHECK(is_generic(t.elements, 3));
  // one step from a length-1 sequence on 16 points
  auto u = extend_generic(generic_sequence(4, 0));
  CHECK(is_generic(u.elements, 4));
}
