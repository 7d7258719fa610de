#include "doctest.h"

#include "gaunt/checks.hpp"
#include "gaunt/constructions.hpp"
#include "gaunt/fibers.hpp"
#include "gaunt/truncation.hpp"

using namespace gaunt;

namespace {

std::size_t object_index(const PosetEnrichedCategory& c, const std::string& name) {
  auto it = std::find(c.objects.begin(), c.objects.end(), name);
  REQUIRE(it != c.objects.end());
  return static_cast<std::size_t>(it - c.objects.begin());
}

}  // namespace

TEST_CASE("truncations") {
  CHECK(poset_iso(truncate0(oriental(3)), chain_poset(3)));
  CHECK(truncate0(disk(0)).size() == 1);
  CHECK(poset_iso(truncate0(wedge({suspension(disk(0)), suspension(disk(0))})), chain_poset(2)));

  const Complex x = oriental(2);
  ChainSolver s(x);
  auto t = truncate1(s);
  CHECK(t.check_laws().empty());
  const auto a = object_index(t, "0"), b = object_index(t, "1"), c = object_index(t, "2");
  const auto& h02 = t.hom[a][c];
  CHECK(poset_iso(h02.poset, chain_poset(1)));
  auto f = t.hom[a][b].class_of(parse_chain(x, 1, "01"));
  auto g = t.hom[b][c].class_of(parse_chain(x, 1, "12"));
  REQUIRE(f);
  REQUIRE(g);
  const auto gf = t.compose(a, b, c, *f, *g);
  CHECK(h02.poset.maximal() == std::vector<std::size_t>{gf});
  CHECK(t.hom[c][a].poset.empty());

  const Complex d1 = disk(1), c2 = cube(2);
  ChainSolver sd(d1), sc(c2);
  auto td = truncate1(sd);
  CHECK(td.objects.size() == 2);
  CHECK(td.hom[object_index(td, "s0")][object_index(td, "t0")].poset.size() == 1);
  auto tc = truncate1(sc);
  CHECK(poset_iso(tc.hom[object_index(tc, "0.0")][object_index(tc, "1.1")].poset, chain_poset(1)));
  CHECK(enriched_isomorphic(td, td));
  CHECK_FALSE(enriched_isomorphic(td, t));
}

TEST_CASE("disk truncation follows the case split of the proof") {
  CHECK(disk_truncation(1, 3) == 2);
  CHECK(disk_truncation(2, 2) == 2);
  CHECK(disk_truncation(0, 5) == 1);
  for (int n = 0; n <= 8; ++n)
    for (int m = 0; m <= 8; ++m) CHECK(disk_truncation(m, n) == (m >= n - 1 ? n : m + 1));
}

TEST_CASE("predicates on the documented maps") {
  auto catalog = predicate_catalog();
  REQUIRE(catalog.size() == 4);
  MapAnalysis id(catalog[0].map), incl(catalog[1].map), collapse(catalog[2].map);
  for (int n = -1; n <= 2; ++n) {
    CHECK(id.is_connected(n));
    CHECK(id.is_truncated(n));
  }
  CHECK(incl.is_full(0));
  CHECK_FALSE(incl.is_full(1));
  CHECK(collapse.is_connected(-1));
  CHECK_FALSE(collapse.is_connected(0));
  CHECK(collapse.is_full(-5));
}

TEST_CASE("connectivity and truncatedness are monotone") {
  for (const auto& entry : extended_catalog()) {
    MapAnalysis a(entry.map);
    for (int n = -1; n <= 1; ++n) {
      if (a.is_connected(n)) CHECK_MESSAGE(a.is_connected(n - 1), entry.name);
      if (a.is_truncated(n)) CHECK_MESSAGE(a.is_truncated(n + 1), entry.name);
    }
  }
}

TEST_CASE("Whitehead on the extended catalog") {
  for (const auto& entry : extended_catalog()) {
    CHECK(is_generator_bijection(entry.map) == entry.isomorphism);
    MapAnalysis a(entry.map);
    for (int n = 0; n <= 1; ++n) CHECK_MESSAGE(a.is_equivalence(n) == entry.isomorphism, entry.name, " n=", n);
  }
  auto catalog = predicate_catalog();
  MapAnalysis collapse(catalog[2].map), face(catalog[3].map);
  CHECK_FALSE(collapse.is_equivalence(0));
  CHECK_FALSE(face.is_equivalence(0));
  CHECK_FALSE(face.equivalence_failure().empty());
}

TEST_CASE("oriented right fibers") {
  auto o1 = share(oriental(1)), o2 = share(oriental(2)), d0 = share(disk(0));
  {
    MapAnalysis a(identity_map(o1));
    auto p = oriented_right_fiber_pi0(a, "1").poset;
    auto lo = p.find("(0,01)"), hi = p.find("(1,id)");
    REQUIRE(lo);
    REQUIRE(hi);
    CHECK(p.size() == 2);
    CHECK(p.less(*lo, *hi));
  }
  MapAnalysis face(oriental_map(o1, o2, {0, 2}));
  {
    auto p = oriented_right_fiber_pi0(face, "2").poset;
    auto a = p.find("(0,02)"), b = p.find("(0,01+12)"), c = p.find("(1,id)");
    REQUIRE(a);
    REQUIRE(b);
    REQUIRE(c);
    CHECK(p.size() == 3);
    CHECK(p.less(*a, *b));
    CHECK(p.less(*a, *c));
    CHECK_FALSE(p.leq(*b, *c));
    CHECK_FALSE(p.leq(*c, *b));
  }
  {
    // transposed witnesses: 01+12 ⇒ 02 inside the fiber, and 02 ⇒ 01+12 lifts to (1,id)
    auto p = oriented_right_fiber_pi0(face, "2", FiberConvention::Lax).poset;
    auto a = p.find("(0,02)"), b = p.find("(0,01+12)"), c = p.find("(1,id)");
    REQUIRE(a);
    REQUIRE(b);
    REQUIRE(c);
    CHECK(p.less(*b, *a));
    CHECK(p.less(*a, *c));
    CHECK(poset_iso(p, chain_poset(2)));
  }
  for (const Complex& x : {oriental(2), cube(2), boundary_disk(1)}) {
    auto px = share(x);
    MapBuilder b(px, d0);
    for (std::size_t v = 0; v < x.count(0); ++v) b.set(x.generator_name(0, v), "d0");
    MapAnalysis a(b.build());
    CHECK(poset_iso(oriented_right_fiber_pi0(a, "d0").poset, pi0(x)));
  }
  CHECK_THROWS_AS(oriented_right_fiber_pi0(face, "7"), InvalidObject);
  CHECK_THROWS_AS(oriented_right_fiber_pi0(face, std::size_t{9}), InvalidObject);
}

TEST_CASE("exact sequence items at object basepoints") {
  auto o1 = share(oriental(1)), o2 = share(oriental(2)), d0 = share(disk(0));
  const std::vector<ComplexMap> maps{
      identity_map(o2),
      MapBuilder(o2, d0).set("0", "d0").set("1", "d0").set("2", "d0").build(),
      oriental_map(o1, o2, {0, 2}),
  };
  for (const auto& f : maps) {
    MapAnalysis a(f);
    for (const auto& z : enumerate_basepoints(a.source_solver(), 0)) {
      auto report = les_exactness_check(a, z);
      CHECK_MESSAGE(report.ok(1), f.source().name(), " at ", report.basepoint);
      CHECK_MESSAGE(report.ok(2), f.source().name(), " at ", report.basepoint);
      CHECK(std::find(report.skipped.begin(), report.skipped.end(), 3) != report.skipped.end());
    }
  }
  MapAnalysis face(maps[2]);
  auto report = les_exactness_check(face, object_pair(*o1, "0", "1"));
  CHECK(report.ok(1));
  std::size_t item1 = 0;
  for (const auto& e : report.entries) item1 += e.item == 1;
  CHECK(item1 <= 3);
}
