#include "doctest.h"

#include "gaunt/io.hpp"
#include "gaunt/poset.hpp"
#include "oracles.hpp"

using namespace gaunt;

namespace {

// Subsets of {1..n} as bitmasks, ordered by inclusion.
Poset subset_oracle(int n) {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq(1u << n, std::vector<bool>(1u << n));
  for (unsigned a = 0; a < (1u << n); ++a) {
    labels.push_back("m" + std::to_string(a));
    for (unsigned b = 0; b < (1u << n); ++b) leq[a][b] = (a & b) == a;
  }
  return Poset::from_matrix(labels, leq);
}

}  // namespace

TEST_CASE("closed forms") {
  CHECK(chain_poset(3).size() == 4);
  CHECK(chain_poset(3).covers().size() == 3);
  CHECK(antichain(3).covers().empty());
  CHECK(boolean_lattice(std::vector<std::string>{}).size() == 1);
  CHECK(empty_poset().empty());
  for (int n = 0; n <= 4; ++n) CHECK(poset_iso(boolean_lattice(n), subset_oracle(n)));
  CHECK(poset_iso(chain_poset(1), boolean_lattice(std::vector<std::string>{"x"})));
  // the product of n copies of the 2-chain is the Boolean lattice
  CHECK(poset_iso(poset_product({chain_poset(1), chain_poset(1), chain_poset(1)}), boolean_lattice(3)));
  auto p = poset_product(chain_poset(1), chain_poset(2));
  CHECK(p.size() == 6);
  CHECK(p.covers().size() == 7);
  CHECK(poset_product(chain_poset(2), empty_poset()).empty());
}

TEST_CASE("isomorphism reports a mismatch") {
  auto r = poset_iso(chain_poset(2), antichain(3));
  CHECK_FALSE(r);
  CHECK_FALSE(r.mismatch.empty());
  CHECK_FALSE(poset_iso(boolean_lattice(2), chain_poset(3)));
  auto s = poset_iso(chain_poset(3), chain_poset(3));
  REQUIRE(s);
  CHECK(is_order_isomorphism(chain_poset(3), chain_poset(3), *s.map));
  CHECK_FALSE(is_order_isomorphism(chain_poset(1), chain_poset(1), {1, 0}));
}

TEST_CASE("preorders collapse to posets") {
  auto p = Poset::from_preorder({"a", "b", "c"}, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(p.size() == 2);
  CHECK(p.condensed());
  CHECK(p.class_of()[0] == p.class_of()[1]);
  CHECK(p.leq(p.class_of()[0], p.class_of()[2]));
  CHECK(p.label(p.class_of()[1]) == "a");
}

TEST_CASE("weak order matches inversion-set containment") {
  for (int n = 1; n <= 4; ++n) {
    auto w = weak_order(n);
    auto o = oracle::inversion_order(n);
    REQUIRE(w.size() == o.labels.size());
    for (std::size_t a = 0; a < o.labels.size(); ++a)
      for (std::size_t b = 0; b < o.labels.size(); ++b)
        CHECK(w.leq(*w.find(o.labels[a]), *w.find(o.labels[b])) == o.leq[a][b]);
  }
  auto w3 = weak_order(3);
  CHECK(w3.size() == 6);
  CHECK(w3.covers().size() == 6);  // hexagon
  CHECK(w3.minimal() == std::vector<std::size_t>{*w3.find("123")});
  CHECK(w3.maximal() == std::vector<std::size_t>{*w3.find("321")});
  CHECK(poset_iso(weak_order(2), chain_poset(1)));
}

TEST_CASE("both readings of the generating relation") {
  // Swapping adjacent positions generates inversion-set containment exactly.
  for (int n = 1; n <= 5; ++n) CHECK(weak_order_generated(n, WeakOrderReading::AdjacentPositions) == weak_order(n));
  // Swapping the values ρ(i) and ρ(i)+1 whenever ρ(i) < ρ(i+1) is not
  // antisymmetric: 123 → 213 → 123 already for n = 3, so classes merge and
  // the result is not the weak order.
  for (int n = 1; n <= 2; ++n) CHECK(weak_order_generated(n, WeakOrderReading::AdjacentValues) == weak_order(n));
  auto v3 = weak_order_generated(3, WeakOrderReading::AdjacentValues);
  CHECK(v3.condensed());
  CHECK(v3.size() == 5);
  CHECK(v3.minimal().size() == 2);
  CHECK_FALSE(poset_iso(v3, weak_order(3)));
}

TEST_CASE("poset output") {
  auto p = boolean_lattice(2);
  auto q = poset_from_json(to_json(p));
  CHECK(q == p);
  const std::string dot = to_dot(chain_poset(1), "C");
  CHECK(dot.find("digraph \"C\"") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
}
