#include "doctest.h"

#include "gaunt/checks.hpp"
#include "gaunt/constructions.hpp"
#include "gaunt/homotopy.hpp"
#include "gaunt/poset.hpp"

using namespace gaunt;

TEST_CASE("pi0 of standard shapes") {
  for (int n = 0; n <= 4; ++n) CHECK(poset_iso(pi0(oriental(n)), chain_poset(n)));
  for (int n = 0; n <= 3; ++n) CHECK(poset_iso(pi0(cube(n)), boolean_lattice(n)));
  CHECK(poset_iso(pi0(boundary_disk(1)), antichain(2)));
  CHECK(poset_iso(pi0(wedge({suspension(disk(0)), suspension(disk(0))})), chain_poset(2)));
}

TEST_CASE("pi1 of orientals is a Boolean lattice on the interior") {
  for (int n = 1; n <= 4; ++n) {
    const Complex x = oriental(n);
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        auto z = object_pair(x, std::to_string(i), std::to_string(j));
        CHECK(poset_iso(pi_n(x, z), boolean_lattice(j - i - 1)));
      }
  }
}

TEST_CASE("pi1 of oriental(2) between the ends") {
  const Complex x = oriental(2);
  ChainSolver s(x);
  auto h = pi_n(s, object_pair(x, "0", "2"));
  REQUIRE(h.poset.size() == 2);
  auto a = h.class_of(parse_chain(x, 1, "02"));
  auto b = h.class_of(parse_chain(x, 1, "01+12"));
  REQUIRE(a);
  REQUIRE(b);
  CHECK(h.poset.less(*a, *b));
  CHECK_FALSE(h.poset.leq(*b, *a));
  // nothing runs backwards
  CHECK(pi_n(x, object_pair(x, "2", "0")).empty());
  CHECK(pi_n(x, object_pair(x, "1", "1")).size() == 1);
}

TEST_CASE("pi1 of cubes is the weak order") {
  auto corner = [](int n, char c) {
    std::string s(1, c);
    for (int i = 1; i < n; ++i) s += std::string(".") + c;
    return s;
  };
  for (int n = 1; n <= 3; ++n) {
    const Complex x = cube(n);
    CHECK(poset_iso(pi_n(x, object_pair(x, corner(n, '0'), corner(n, '1'))), weak_order(n)));
  }
}

TEST_CASE("rewriting agrees with chain feasibility") {
  const Complex o3 = oriental(3), c2 = cube(2), d1 = disk(1);
  ChainSolver s3(o3), sc(c2), sd(d1);
  auto r = pi1_rewriting(s3, 0, 3);
  CHECK(poset_iso(r, boolean_lattice(2)));
  CHECK(r.minimal().size() == 1);
  CHECK(r.label(r.minimal()[0]) == "[03]");
  CHECK(poset_iso(pi1_rewriting(sc, c2.at("0.0").index, c2.at("1.1").index), chain_poset(1)));
  // no 2-generators: discrete
  CHECK(poset_iso(pi1_rewriting(sd, 0, 1), antichain(1)));
  for (int i = 0; i <= 3; ++i)
    for (int j = i; j <= 3; ++j)
      CHECK(poset_iso(pi1_rewriting(s3, i, j), pi_n(s3, object_pair(o3, std::to_string(i), std::to_string(j))).poset));
}

TEST_CASE("identity parts") {
  const Complex x = oriental(2), d2 = disk(2);
  ChainSolver s(x), t(d2);
  CHECK(pi_prime_n(s, object_pair(x, "0", "0")).size() == 1);
  CHECK(pi_prime_n(s, object_pair(x, "0", "2")).empty());
  auto z = extend(object_pair(d2, "s0", "t0"), parse_chain(d2, 1, "s1"), parse_chain(d2, 1, "t1"));
  CHECK(pi_prime_n(t, z).empty());
  CHECK(pi_n(t, z).poset.size() == 1);
}

TEST_CASE("higher homotopy posets") {
  const Complex x = oriental(3);
  ChainSolver s(x);
  auto z = extend(object_pair(x, "0", "3"), parse_chain(x, 1, "03"), parse_chain(x, 1, "01+12+23"));
  auto h = pi_n(s, z);
  // the two composites of the 2-faces, related by the 3-cell
  CHECK(poset_iso(h.poset, chain_poset(1)));
  CHECK_THROWS_AS(pi_n(s, extend(object_pair(x, "0", "3"), parse_chain(x, 1, "03"), parse_chain(x, 1, "01"))),
                  InvalidBasepoint);
}

TEST_CASE("suspension, wedge and duality") {
  for (const Complex& x : {oriental(2), cube(2)})
    for (int k = 0; k <= 2; ++k)
      for (int m = 0; m <= k; ++m) {
        auto r = suspension_shift_check(x, k, m);
        CHECK_MESSAGE(r.ok(), x.name(), " k=", k, " m=", m);
      }
  CHECK(wedge_product_check({oriental(1), oriental(2)}, 1).ok());
  CHECK(wedge_product_check({oriental(2), disk(1), oriental(1)}, 2).ok());
  CHECK(dual_tensor_check(1, 2, false).ok());
  CHECK(dual_tensor_check(2, 1, true).ok());
}
