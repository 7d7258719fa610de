#include "doctest.h"

#include <set>

#include "gaunt/cells.hpp"
#include "gaunt/constructions.hpp"
#include "oracles.hpp"

using namespace gaunt;

namespace {

std::set<std::string> formatted(const Complex& x, const std::vector<Chain>& cs) {
  std::set<std::string> out;
  for (const auto& c : cs) out.insert(x.format(c));
  return out;
}

}  // namespace

TEST_CASE("documented boundary problems") {
  const Complex o2 = oriental(2);
  ChainSolver s(o2);
  CHECK(formatted(o2, s.solve(1, parse_chain(o2, 0, "2-0"))) == std::set<std::string>{"01+12", "02"});
  CHECK(formatted(o2, s.solve(1, o2.zero(0))) == std::set<std::string>{"0"});
  CHECK(formatted(o2, s.solve(2, o2.zero(1))) == std::set<std::string>{"0"});
  CHECK(s.solve(1, parse_chain(o2, 0, "0-2")).empty());
  const Complex c2 = cube(2);
  ChainSolver t(c2);
  CHECK(formatted(c2, t.solve(1, parse_chain(c2, 0, "1.1-0.0"))) == std::set<std::string>{"0.01+01.1", "01.0+1.01"});
}

TEST_CASE("solver agrees with exhaustive search") {
  // The solver runs at cap 1, so it searches up to 2; the oracle searches the
  // box [0,2]. When the solver answers, every solution has coefficients ≤ 1
  // and the two sets coincide; when it refuses, the box holds a solution
  // with a coefficient 2.
  for (const Complex& x : {oriental(2), oriental(3), cube(2), disk(2), suspension(oriental(2)),
                           wedge({disk(1), suspension(oriental(1))})}) {
    ChainSolver solver(x, 1);
    for (int n = 1; n <= x.top_degree(); ++n) {
      std::set<std::string> seen;
      oracle::for_each_box_chain(n, x.count(n), 2, [&](const Chain& c) {
        const Chain d = x.boundary_of(c);
        if (!seen.insert(x.format(d)).second) return;
        auto expected = oracle::positive_solutions(x, n, d, 2);
        bool needs_two = false;
        for (const auto& e : expected) needs_two = needs_two || e.find("2*") != std::string::npos;
        if (needs_two) {
          CHECK_THROWS_AS(solver.solve(n, d), UnsaturatedEnumeration);
        } else {
          CHECK(formatted(x, solver.solve(n, d)) == expected);
        }
        CHECK(formatted(x, enumerate_positive_solutions(x, n, d, 2)) == expected);
      });
    }
  }
}

TEST_CASE("unsaturated problems are reported") {
  const Complex x = disk(1);
  reset_solver_statistics();
  ChainSolver solver(x, 8);
  CHECK(solver.solve(1, parse_chain(x, 0, "8*t0-8*s0")).size() == 1);
  CHECK_THROWS_AS(solver.solve(1, parse_chain(x, 0, "9*t0-9*s0")), UnsaturatedEnumeration);
  auto stats = solver_statistics();
  CHECK(stats.checks == 2);
  CHECK(stats.saturated == 1);
  CHECK(stats.unsaturated == 1);
}

TEST_CASE("atom tables") {
  const Complex o2 = oriental(2);
  auto t = atom_table(o2, o2.at("012"));
  REQUIRE(t.dimension() == 2);
  CHECK(o2.format(t.minus(1)) == "02");
  CHECK(o2.format(t.plus(1)) == "01+12");
  CHECK(o2.format(t.minus(0)) == "0");
  CHECK(o2.format(t.plus(0)) == "2");
  CHECK(t.is_cell());
  const Complex c2 = cube(2);
  auto u = atom_table(c2, c2.at("01.01"));
  CHECK(c2.format(u.minus(1)) == "0.01+01.1");
  CHECK(c2.format(u.plus(1)) == "01.0+1.01");
  const Complex d3 = disk(3);
  auto v = atom_table(d3, d3.at("d3"));
  for (int k = 0; k < 3; ++k) {
    CHECK(d3.format(v.minus(k)) == "s" + std::to_string(k));
    CHECK(d3.format(v.plus(k)) == "t" + std::to_string(k));
  }
  // every atom of a valid complex is unital
  for (const Complex& x : {oriental(4), cube(3)})
    for (int d = 0; d <= x.top_degree(); ++d)
      for (std::size_t i = 0; i < x.count(d); ++i) CHECK_NOTHROW(check_table(x, atom_table(x, {d, i}), true));
}

TEST_CASE("basepoints and cells") {
  const Complex xd1 = disk(1), xb1 = boundary_disk(1), xo2 = oriental(2);
  ChainSolver d1(xd1), b1(xb1), o2(xo2);
  CHECK(enumerate_cells(d1, 1).size() == 3);
  CHECK(enumerate_cells(b1, 1).size() == 2);
  CHECK(enumerate_basepoints(o2, -1).size() == 1);
  CHECK(enumerate_basepoints(o2, 0).size() == 9);
  // 2-cells of oriental(2): an identity on each of the 7 one-cells (4 arrows,
  // 3 object identities) and the generator
  auto cells = enumerate_cells(o2, 2);
  std::size_t identities = 0;
  for (const auto& c : cells) identities += c.is_identity();
  CHECK(cells.size() == 8);
  CHECK(identities == 7);
  const Complex& x = o2.complex();
  CHECK_THROWS_AS(check_table(x, object_pair(x, "0", "2"), true), InvalidBasepoint);
  CHECK_NOTHROW(check_table(x, object_pair(x, "0", "2"), false));
  auto bad = extend(object_pair(x, "0", "2"), parse_chain(x, 1, "01"), parse_chain(x, 1, "02"));
  CHECK_THROWS_AS(check_table(x, bad, false), InvalidBasepoint);
}

TEST_CASE("atomic path decomposition") {
  const Complex x = oriental(3);
  auto path = atomic_path_decomposition(x, parse_chain(x, 1, "23+01+12"), 0, 3);
  REQUIRE(path.size() == 3);
  CHECK(x.generator_name(1, path[0]) == "01");
  CHECK(x.generator_name(1, path[1]) == "12");
  CHECK(x.generator_name(1, path[2]) == "23");
  CHECK(atomic_path_decomposition(x, x.zero(1), 2, 2).empty());
  CHECK_THROWS(atomic_path_decomposition(x, parse_chain(x, 1, "01+23"), 0, 3));
  CHECK(arrow_ends(x, x.at("13").index) == std::make_pair(std::size_t{1}, std::size_t{3}));
}
