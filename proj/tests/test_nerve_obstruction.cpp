#include "doctest.h"

#include <set>

#include "gaunt/constructions.hpp"
#include "gaunt/io.hpp"
#include "gaunt/map.hpp"
#include "gaunt/nerve.hpp"
#include "gaunt/obstruction.hpp"
#include "oracles.hpp"

using namespace gaunt;

TEST_CASE("nerve simplex counts agree with direct enumeration") {
  for (const Complex& x : {disk(0), disk(1), oriental(1), oriental(2), cube(2), boundary_disk(2)}) {
    auto s = stratified_nerve(x, 3);
    CHECK(s.check().empty());
    for (int m = 0; m <= 3; ++m) CHECK_MESSAGE(s.count(m) == oracle::oriental_map_count(x, m, 1), x.name(), " m=", m);
  }
}

TEST_CASE("nerve of the arrow") {
  auto s = stratified_nerve(disk(1), 2);
  CHECK(s.counts() == std::vector<std::size_t>{2, 3, 4});
  for (int m = 0; m <= 2; ++m) {
    auto [thin, nonthin] = s.nondegenerate(m);
    CHECK(thin.empty());
    CHECK(nonthin.size() == std::vector<std::size_t>{2, 1, 0}[m]);
  }
  auto p = stratified_nerve(disk(0), 4);
  for (int m = 0; m <= 4; ++m) {
    CHECK(p.count(m) == 1);
    CHECK(p.degenerate(m, 0) == (m > 0));
  }
}

TEST_CASE("nondegenerate 2-simplices of the 2-simplex") {
  Nerve nv(oriental(2), 2);
  auto [thin, nonthin] = nv.simplicial_set().nondegenerate(2);
  REQUIRE(thin.size() == 1);
  CHECK(nv.describe(2, thin[0]) == "[0↦0; 1↦1; 01↦01; 2↦2; 02↦01+12; 12↦12; 012↦id]");
  // Besides the identity, the 2-generator also fills the triangles with one
  // collapsed edge: its long edge is 02 and the other two compose to 01+12.
  std::set<std::string> seen;
  for (auto k : nonthin) seen.insert(nv.describe(2, k));
  CHECK(seen == std::set<std::string>{
                    "[0↦0; 1↦0; 01↦id; 2↦2; 02↦02; 12↦01+12; 012↦012]",
                    "[0↦0; 1↦1; 01↦01; 2↦2; 02↦02; 12↦12; 012↦012]",
                    "[0↦0; 1↦2; 01↦01+12; 2↦2; 02↦02; 12↦id; 012↦012]",
                });
}

TEST_CASE("skeleta") {
  auto s = stratified_nerve(oriental(2), 3);
  auto sk1 = skeleton(s, 1);
  CHECK(sk1.check().empty());
  auto [thin, nonthin] = sk1.nondegenerate(2);
  CHECK(thin.empty());
  CHECK(nonthin.empty());
  CHECK(sk1.count(2) < s.count(2));
  CHECK(skeleton(s, 3).counts() == s.counts());
  auto sk0 = skeleton(s, 0);
  for (int m = 0; m <= 3; ++m) CHECK(sk0.count(m) == s.count(0));
  for (const Complex& x : {oriental(2), cube(2), disk(2)}) {
    auto n = stratified_nerve(x, 4);
    for (int k = 1; k <= 4; ++k) CHECK(verify_skeletal_pushout(n, k).ok());
  }
  CHECK(wedge_cofiber_profile(stratified_nerve(disk(1), 2), 1) == std::make_pair(std::size_t{1}, std::size_t{0}));
  CHECK(wedge_cofiber_profile(stratified_nerve(disk(1), 2), 5) == std::make_pair(std::size_t{0}, std::size_t{0}));
  CHECK(wedge_cofiber_profile(s, 2) == std::make_pair(std::size_t{3}, std::size_t{1}));
  auto j = to_json(stratified_nerve(disk(1), 1));
  CHECK(j["dimension"] == 1);
}

TEST_CASE("obstruction formula agrees with brute force") {
  const Complex o1 = oriental(1), o2 = oriental(2), d1 = disk(1), c2 = cube(2);
  {
    auto f = SkeletalMap::from_objects(o1, o2, {{"0", "0"}, {"1", "2"}});
    std::vector<ObstructionFactor> factors;
    auto p = obstruction_poset(f, &factors);
    CHECK(poset_iso(p, chain_poset(1)));
    CHECK(poset_iso(p, brute_force_extensions(f)));
    REQUIRE(factors.size() == 1);
    CHECK_FALSE(factors[0].thin);
  }
  {
    auto f = SkeletalMap::from_objects(o1, o2, {{"0", "2"}, {"1", "0"}});
    CHECK(obstruction_poset(f).empty());
    CHECK(brute_force_extensions(f).empty());
  }
  {
    auto f = SkeletalMap::from_objects(o1, d1, {{"0", "s0"}, {"1", "t0"}});
    CHECK(obstruction_poset(f).size() == 1);
    CHECK(brute_force_extensions(f).size() == 1);
  }
  // two arrows to extend at once: the product of the factors
  {
    auto f = SkeletalMap::from_objects(o2, c2, {{"0", "0.0"}, {"1", "0.1"}, {"2", "1.1"}});
    CHECK(poset_iso(obstruction_poset(f), brute_force_extensions(f)));
  }
  // one step higher, from a genuine map
  auto po1 = share(o1), po2 = share(o2), pc2 = share(c2);
  for (const auto& g : {oriental_map(po1, po2, {0, 2}), identity_map(po2)}) {
    auto f = SkeletalMap::from_map(g, 1);
    CHECK(poset_iso(obstruction_poset(f), brute_force_extensions(f)));
  }
}

TEST_CASE("incompatible skeletal data") {
  const Complex o1 = oriental(1), o2 = oriental(2);
  CHECK_THROWS_AS(SkeletalMap::from_objects(o1, o2, {{"0", "0"}}), IncompatibleF);
  CHECK_THROWS_AS(SkeletalMap::from_objects(o1, o2, {{"0", "0"}, {"1", "01"}}), IncompatibleF);
  auto nx = std::make_shared<Nerve>(o1, 2);
  auto ny = std::make_shared<Nerve>(o2, 3);
  auto id = [&](const std::string& g, int degree) { return ny->pool().intern(parse_chain(o2, degree, g)); };
  std::vector<std::map<std::size_t, SimplexData>> a(2);
  a[0][*nx->find(0, SimplexData{0, nx->pool().intern(parse_chain(o1, 0, "0"))})] = {0, id("0", 0)};
  a[0][*nx->find(0, SimplexData{0, nx->pool().intern(parse_chain(o1, 0, "1"))})] = {0, id("2", 0)};
  auto edge = nx->find(1, SimplexData{0, nx->pool().intern(parse_chain(o1, 0, "0")),
                                      nx->pool().intern(parse_chain(o1, 0, "1")),
                                      nx->pool().intern(parse_chain(o1, 1, "01"))});
  REQUIRE(edge);
  // the edge 01 of the target runs 0 → 1, not 0 → 2
  a[1][*edge] = {0, id("0", 0), id("1", 0), id("01", 1)};
  CHECK_THROWS_AS(SkeletalMap(nx, ny, 1, a), IncompatibleF);
  a[1][*edge] = {0, id("0", 0), id("2", 0), id("02", 1)};
  CHECK_NOTHROW(SkeletalMap(nx, ny, 1, a));
}
