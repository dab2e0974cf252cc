#include <doctest.h>

#include "unifac/permutation.hpp"

using namespace unifac;
using namespace unifac::perm;

TEST_CASE("composition convention matches the worked conjugation") {
  // (1 2 3)(1 3 5 7)(1 2 3)^-1 = (2 1 5 7)
  auto a = parse_cycles("(1 2 3)", 8);
  auto b = parse_cycles("(1 3 5 7)", 8);
  auto conj = a * b * a.inverse();
  CHECK(conj == parse_cycles("(2 1 5 7)", 8));
  CHECK(conj.str() == "(1 5 7 2)");  // same cycle, canonical form
}

TEST_CASE("cycle type and parity") {
  Permutation id(8);
  CHECK(id.cycle_type() == std::map<uint32_t, uint32_t>{{1, 8}});
  CHECK(id.even());
  CHECK(id.str() == "()");

  auto invol = parse_cycles("(1 2)(3 4)(5 6)(7 8)", 8);
  CHECK(invol.cycle_type() == std::map<uint32_t, uint32_t>{{2, 4}});
  CHECK(invol.even());
  CHECK(invol.is_fpf_involution());

  CHECK_FALSE(parse_cycles("(1 2)", 8).even());
  CHECK_FALSE(parse_cycles("(1 2 3)", 8).is_fpf_involution());
}

TEST_CASE("group axioms on samples") {
  auto a = parse_cycles("(1 4 2)(5 6)", 6);
  auto b = parse_cycles("(2 3)(4 5 6 1)", 6);
  auto c = parse_cycles("(1 6)(2 5)(3 4)", 6);
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * a.inverse() == Permutation(6));
  CHECK((a * b).inverse() == b.inverse() * a.inverse());
  // cycle type is conjugation invariant
  CHECK((c * a * c.inverse()).cycle_type() == a.cycle_type());
  CHECK_THROWS_AS(a * Permutation(5), Error);
}

TEST_CASE("parser errors") {
  CHECK_THROWS_AS(parse_cycles("(1 2 3", 8), Error);
  CHECK_THROWS_AS(parse_cycles("(1 9)", 8), Error);
  CHECK_THROWS_AS(parse_cycles("(1 1 2)", 8), Error);
  CHECK_THROWS_AS(parse_cycles("", 8), Error);
  CHECK(parse_cycles("()", 8) == Permutation(8));
}

TEST_CASE("printer round trip") {
  for (uint64_t r = 0; r < 120; ++r) {
    auto p = Permutation::unrank(5, r);
    CHECK(parse_cycles(p.str(), 5) == p);
    CHECK(Permutation::unrank(5, p.rank()) == p);
    CHECK(p.rank() == r);
  }
}

TEST_CASE("orbit decomposition") {
  // identity generators: all singletons
  auto orbits = orbit_decomposition({Permutation(5)}, 5);
  CHECK(orbits.size() == 5);

  auto g = parse_cycles("(1 2 3)(4 5)", 6);
  orbits = orbit_decomposition({g}, 6);
  REQUIRE(orbits.size() == 3);
  CHECK(orbits[0] == std::vector<uint32_t>{0, 1, 2});
  CHECK(orbits[1] == std::vector<uint32_t>{3, 4});
  CHECK(orbits[2] == std::vector<uint32_t>{5});
}
