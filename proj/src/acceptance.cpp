#include "gaunt/acceptance.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>

#include "gaunt/checks.hpp"
#include "gaunt/fibers.hpp"
#include "gaunt/nerve.hpp"
#include "gaunt/obstruction.hpp"
#include "gaunt/truncation.hpp"

namespace gaunt {

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::size_t cases = 0;

  void require(bool ok, const std::string& what) {
    ++cases;
    if (ok || !pass) {
      pass = pass && ok;
      return;
    }
    pass = false;
    detail = what;
  }
};

std::string text(std::size_t n, const char* noun) { return std::to_string(n) + " " + noun; }

std::vector<int> corner_coordinates(const Complex& c, std::size_t v) {
  std::vector<int> out;
  for (char ch : c.generator_name(0, v))
    if (ch == '0' || ch == '1') out.push_back(ch - '0');
  return out;
}

Outcome pi0_closed_form() {
  Outcome o;
  for (int n = 0; n <= 6; ++n)
    o.require(bool(poset_iso(pi0(oriental(n)), chain_poset(n))), "pi0(oriental(" + std::to_string(n) + "))");
  for (int n = 0; n <= 4; ++n)
    o.require(bool(poset_iso(pi0(cube(n)), boolean_lattice(n))), "pi0(cube(" + std::to_string(n) + "))");
  return o;
}

Outcome pi1_oriental() {
  Outcome o;
  for (int n = 0; n <= 5; ++n) {
    const Complex x = oriental(n);
    ChainSolver solver(x);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        Poset expected;
        if (i < j) {
          std::vector<std::string> atoms;
          for (int a = i + 1; a < j; ++a) atoms.push_back(std::to_string(a));
          expected = boolean_lattice(atoms);
        } else if (i == j) {
          expected = chain_poset(0);
        }
        auto p = pi_n(solver, object_pair(x, std::to_string(i), std::to_string(j))).poset;
        o.require(bool(poset_iso(p, expected)),
                  "pi1(oriental(" + std::to_string(n) + "),(" + std::to_string(i) + "," + std::to_string(j) + "))");
      }
  }
  return o;
}

Outcome pi1_cube() {
  Outcome o;
  for (int n = 1; n <= 4; ++n) {
    const Complex x = cube(n);
    ChainSolver solver(x);
    for (std::size_t a = 0; a < x.count(0); ++a)
      for (std::size_t b = 0; b < x.count(0); ++b) {
        auto d = corner_coordinates(x, a), e = corner_coordinates(x, b);
        bool below = true;
        int distance = 0;
        for (int k = 0; k < n; ++k) {
          below = below && d[k] <= e[k];
          distance += e[k] - d[k];
        }
        Poset expected = below ? weak_order(distance) : empty_poset();
        OrientedBasePoint z{{{x.generator(0, a), x.generator(0, b)}}};
        auto p = pi_n(solver, z).poset;
        o.require(bool(poset_iso(p, expected)),
                  "pi1(cube(" + std::to_string(n) + "),(" + x.generator_name(0, a) + "," + x.generator_name(0, b) + "))");
      }
  }
  const Complex c4 = cube(4);
  ChainSolver solver(c4);
  OrientedBasePoint corners{{{c4.generator(0, 0), c4.generator(0, c4.count(0) - 1)}}};
  const auto full = pi_n(solver, corners).poset.size();
  o.require(full == 24, "pi1(cube(4)) between opposite corners has " + text(full, "elements"));
  return o;
}

Outcome rewriting_agrees() {
  Outcome o;
  auto compare = [&](const Complex& x) {
    ChainSolver solver(x);
    for (std::size_t a = 0; a < x.count(0); ++a)
      for (std::size_t b = 0; b < x.count(0); ++b) {
        OrientedBasePoint z{{{x.generator(0, a), x.generator(0, b)}}};
        o.require(bool(poset_iso(pi1_rewriting(solver, a, b), pi_n(solver, z).poset)),
                  x.name() + " at (" + x.generator_name(0, a) + "," + x.generator_name(0, b) + ")");
      }
  };
  for (int n = 0; n <= 5; ++n) compare(oriental(n));
  for (int n = 1; n <= 4; ++n) compare(cube(n));
  return o;
}

Outcome weak_order_readings() {
  Outcome o;
  for (int n = 0; n <= 5; ++n)
    o.require(weak_order(n) == weak_order_generated(n, WeakOrderReading::AdjacentPositions),
              "weak_order(" + std::to_string(n) + ")");
  return o;
}

Outcome suspension_wedge() {
  Outcome o;
  CheckResult all;
  const std::vector<Complex> shapes{oriental(2), cube(2)};
  for (const auto& x : shapes)
    for (int k = 0; k <= 3; ++k)
      for (int m = 0; m <= k; ++m) all.merge(suspension_shift_check(x, k, m));
  for (int r = 1; r <= 3; ++r)
    for (int code = 0; code < (1 << r); ++code) {
      std::vector<Complex> factors;
      for (int i = 0; i < r; ++i) factors.push_back(shapes[(code >> i) & 1]);
      for (int k = 1; k <= 3; ++k) all.merge(wedge_product_check(factors, k));
    }
  o.cases = all.cases;
  o.pass = all.ok();
  if (!all.ok()) o.detail = all.failures.front();
  return o;
}

Outcome disk_truncation_table() {
  Outcome o;
  // rows m = 0..6, columns n = 0..6
  static const int table[7][7] = {
      {0, 1, 1, 1, 1, 1, 1}, {0, 1, 2, 2, 2, 2, 2}, {0, 1, 2, 3, 3, 3, 3}, {0, 1, 2, 3, 4, 4, 4},
      {0, 1, 2, 3, 4, 5, 5}, {0, 1, 2, 3, 4, 5, 6}, {0, 1, 2, 3, 4, 5, 6},
  };
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n)
      o.require(disk_truncation(m, n) == table[m][n],
                "disk_truncation(" + std::to_string(m) + "," + std::to_string(n) + ")");
  for (int n = 0; n <= 3; ++n) {
    const Complex x = disk(n), y0 = disk(disk_truncation(0, n)), y1 = disk(disk_truncation(1, n));
    o.require(bool(poset_iso(truncate0(x), truncate0(y0))), "truncate0(disk(" + std::to_string(n) + "))");
    ChainSolver sx(x), sy(y1);
    auto tx = truncate1(sx), ty = truncate1(sy);
    o.require(tx.check_laws().empty(), "composition laws of truncate1(disk(" + std::to_string(n) + "))");
    o.require(enriched_isomorphic(tx, ty), "truncate1(disk(" + std::to_string(n) + "))");
  }
  return o;
}

Outcome connectivity_table() {
  Outcome o;
  // full m=0..2 | faithful n=−1..2 | connected n=−2..1
  static const char* expected[] = {
      "TTT|TTTT|TTTT",  // identity oriental(2)
      "TFT|FFTT|TTFF",  // ∂𝔻¹ ↪ 𝔻¹
      "TFT|FFTT|TTFF",  // 𝔻¹ → 𝔻⁰
      "FFT|FFTT|TFFF",  // face 02 of 𝚫²
  };
  auto catalog = predicate_catalog();
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    MapAnalysis a(catalog[i].map);
    std::string row;
    for (int m = 0; m <= 2; ++m) row += a.is_full(m) ? 'T' : 'F';
    row += '|';
    for (int n = -1; n <= 2; ++n) row += a.is_faithful(n) ? 'T' : 'F';
    row += '|';
    for (int n = -2; n <= 1; ++n) row += a.is_connected(n) ? 'T' : 'F';
    o.require(row == expected[i], catalog[i].name + ": " + row + " expected " + expected[i]);
  }
  return o;
}

Outcome whitehead() {
  Outcome o;
  for (const auto& entry : whitehead_catalog()) {
    MapAnalysis a(entry.map);
    for (int n = 0; n <= 2; ++n)
      o.require(a.is_equivalence(n) == entry.isomorphism,
                entry.name + " at n=" + std::to_string(n) + (a.equivalence_failure().empty()
                                                                 ? std::string()
                                                                 : " (" + a.equivalence_failure() + ")"));
  }
  return o;
}

Outcome long_exact_sequence() {
  Outcome o;
  auto o1 = share(oriental(1)), o2 = share(oriental(2)), d0 = share(disk(0));
  const std::vector<ComplexMap> maps{
      identity_map(o2),
      MapBuilder(o2, d0).set("0", "d0").set("1", "d0").set("2", "d0").build(),
      oriental_map(o1, o2, {0, 2}),
  };
  for (const auto& f : maps) {
    MapAnalysis a(f);
    for (int d = 0; d <= 1; ++d)
      for (const auto& z : enumerate_basepoints(a.source_solver(), d)) {
        if (!z.is_cell() && d == 1) continue;
        auto report = les_exactness_check(a, z);
        for (int item = 1; item <= 3; ++item) {
          std::string why = f.source().name() + " -> " + f.target().name() + " item " + std::to_string(item) +
                            " at " + report.basepoint;
          for (const auto& e : report.entries)
            if (e.item == item && !e.holds()) {
              why += ": " + e.element + (e.in_image ? " is in the image" : " is not in the image");
              break;
            }
          o.require(report.ok(item), why);
        }
      }
  }
  // documented fiber of the 02 face over 2
  MapAnalysis face(maps[2]);
  auto fiber = oriented_right_fiber_pi0(face, "2");
  const auto& p = fiber.poset;
  auto a = p.find("(0,02)"), b = p.find("(0,01+12)"), c = p.find("(1,id)");
  bool shape = p.size() == 3 && a && b && c && p.less(*a, *b) && p.less(*a, *c) && !p.leq(*b, *c) && !p.leq(*c, *b);
  o.require(shape, "fiber of 𝚫¹ → 𝚫² over 2");
  return o;
}

Outcome skeletal_pushout() {
  Outcome o;
  std::vector<Complex> shapes;
  for (int k = 0; k <= 3; ++k) shapes.push_back(oriental(k));
  for (int k = 0; k <= 3; ++k) shapes.push_back(cube(k));
  for (const auto& x : shapes) {
    auto s = stratified_nerve(x, 4);
    o.require(s.check().empty(), "simplicial identities of N(" + x.name() + ")");
    for (int n = 0; n <= 4; ++n) {
      auto r = verify_skeletal_pushout(s, n);
      o.require(r.ok(), "pushout N(" + x.name() + ") at n=" + std::to_string(n));
    }
  }
  auto profile = wedge_cofiber_profile(stratified_nerve(oriental(2), 2), 2);
  o.require(profile == std::make_pair<std::size_t, std::size_t>(1, 1),
            "wedge_cofiber_profile(N(oriental(2)),2) = (" + std::to_string(profile.first) + "," +
                std::to_string(profile.second) + "), expected (1,1)");
  return o;
}

Outcome obstruction_examples() {
  Outcome o;
  const Complex o1 = oriental(1), o2 = oriental(2), d1 = disk(1);
  struct Example {
    std::string name;
    SkeletalMap f;
    Poset expected;
  };
  std::vector<Example> examples;
  examples.push_back({"0↦0, 1↦2 into 𝚫²", SkeletalMap::from_objects(o1, o2, {{"0", "0"}, {"1", "2"}}), chain_poset(1)});
  examples.push_back({"0↦2, 1↦0 into 𝚫²", SkeletalMap::from_objects(o1, o2, {{"0", "2"}, {"1", "0"}}), empty_poset()});
  examples.push_back({"0↦s0, 1↦t0 into 𝔻¹", SkeletalMap::from_objects(o1, d1, {{"0", "s0"}, {"1", "t0"}}), chain_poset(0)});
  for (auto& e : examples) {
    auto formula = obstruction_poset(e.f);
    auto brute = brute_force_extensions(e.f);
    o.require(bool(poset_iso(formula, brute)), e.name + ": formula and brute force disagree");
    o.require(bool(poset_iso(formula, e.expected)), e.name + ": unexpected shape");
  }
  return o;
}

}  // namespace

std::string format_result(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.pass ? "PASS" : "FAIL") << " " << r.id << " " << r.title << ": " << r.detail;
  return out.str();
}

std::vector<CriterionResult> run_acceptance(std::ostream* log) {
  reset_solver_statistics();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"pi0 closed forms", pi0_closed_form},
      {"pi1 of orientals", pi1_oriental},
      {"pi1 of cubes", pi1_cube},
      {"rewriting vs chain feasibility", rewriting_agrees},
      {"weak order readings", weak_order_readings},
      {"suspension and wedge shift", suspension_wedge},
      {"disk truncation", disk_truncation_table},
      {"connectivity predicates", connectivity_table},
      {"Whitehead", whitehead},
      {"long exact sequence", long_exact_sequence},
      {"skeletal pushout", skeletal_pushout},
      {"obstruction oracle", obstruction_examples},
  };
  std::vector<CriterionResult> results;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    CriterionResult r;
    r.id = static_cast<int>(i) + 1;
    r.title = criteria[i].first;
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = criteria[i].second();
      r.pass = o.pass;
      r.detail = o.pass ? text(o.cases, "checks") : o.detail;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (log) *log << format_result(r) << "\n" << std::flush;
    results.push_back(std::move(r));
  }
  const auto stats = solver_statistics();
  CriterionResult r;
  r.id = 13;
  r.title = "enumeration saturation";
  r.pass = stats.checks > 0 && stats.unsaturated == 0 && stats.saturated == stats.checks;
  r.detail = std::to_string(stats.saturated) + "/" + std::to_string(stats.checks) + " problems saturated, " +
             std::to_string(stats.unsaturated) + " unsaturated";
  if (log) *log << format_result(r) << "\n" << std::flush;
  results.push_back(std::move(r));
  return results;
}

}  // namespace gaunt
