#include "doctest.h"

#include "gaunt/constructions.hpp"
#include "gaunt/io.hpp"
#include "gaunt/validate.hpp"
#include "gaunt/nerve.hpp"

using namespace gaunt;

TEST_CASE("chain arithmetic and formatting") {
  const Complex x = oriental(2);
  Chain a = parse_chain(x, 1, "01+12");
  Chain b = parse_chain(x, 1, "02");
  CHECK(x.format(a) == "01+12");
  CHECK(x.format(a - b) == "01-02+12");
  CHECK(x.format(Integer(3) * b) == "3*02");
  CHECK((a - b).positive_part() == a);
  CHECK((a - b).negative_part() == b);
  CHECK(b.dominated_by(a + b));
  CHECK_FALSE(a.dominated_by(b));
  CHECK(x.format(x.zero(2)) == "0");
  CHECK(parse_chain(x, 2, "0").is_zero());
  // "0" is an object of the oriental, not the zero literal
  CHECK(x.format(parse_chain(x, 0, "0")) == "0");
  CHECK(parse_chain(x, 0, "0") == x.generator("0"));
  CHECK_THROWS_AS(parse_chain(x, 1, "012"), std::invalid_argument);
  CHECK_THROWS_AS(parse_chain(x, 1, "nope"), std::invalid_argument);
  CHECK_THROWS_AS(a + x.zero(2), std::invalid_argument);
}

TEST_CASE("large coefficients stay exact") {
  const Complex x = disk(1);
  Chain c = parse_chain(x, 1, "123456789012345678901234567890*d1");
  CHECK(x.format(x.boundary_of(c)) == "-123456789012345678901234567890*s0+123456789012345678901234567890*t0");
  auto j = to_json(ComplexBuilder("big").add(0, "a").add(0, "b").add(1, "f", {{Integer("99999999999999999999"), "b"}, {Integer("-99999999999999999999"), "a"}}).build());
  CHECK(j["differential"]["f"][0][0] == "-99999999999999999999");
  CHECK(complex_from_json(j).boundary(1, 0)[1] == Integer("99999999999999999999"));
}

TEST_CASE("builder rejects malformed input") {
  CHECK_THROWS_AS(ComplexBuilder("x").add(0, "a").add(0, "a").build(), std::invalid_argument);
  CHECK_THROWS_AS(ComplexBuilder("x").add(1, "f", {{1, "b"}}).build(), std::invalid_argument);
  CHECK_THROWS_AS(ComplexBuilder("x").add(0, "a").add(2, "g").build(), std::invalid_argument);
  CHECK_THROWS_AS(ComplexBuilder("x").add(0, "a", {{1, "a"}}), std::invalid_argument);
}

TEST_CASE("validation detects each defect") {
  SUBCASE("boundary squared") {
    auto x = ComplexBuilder("bad")
                 .add(0, "a").add(0, "b")
                 .add(1, "f", {{1, "b"}, {-1, "a"}})
                 .add(1, "g", {{1, "b"}, {-1, "a"}})
                 .add(2, "h", {{1, "f"}})
                 .build();
    CHECK(validate(x).has(ViolationKind::BoundarySquared));
  }
  SUBCASE("augmentation") {
    auto x = ComplexBuilder("bad").add(0, "a").add(0, "b").add(1, "f", {{1, "b"}}).build();
    CHECK(validate(x).has(ViolationKind::Augmentation));
  }
  SUBCASE("loop") {
    auto x = ComplexBuilder("loop")
                 .add(0, "a").add(0, "b")
                 .add(1, "f", {{1, "b"}, {-1, "a"}})
                 .add(1, "g", {{1, "a"}, {-1, "b"}})
                 .build();
    auto d = validate(x);
    CHECK(d.has(ViolationKind::LoopFreeness));
    CHECK_THROWS_AS(require_valid(x), InvalidComplex);
    // constructions still go through, so bad inputs can be inspected
    const Complex t = gray_tensor(x, oriental(1));
    CHECK(t.count(1) == 6);
    CHECK_FALSE(validate(t).ok());
  }
  SUBCASE("endomorphism loop") {
    auto x = ComplexBuilder("e").add(0, "a").add(1, "f").build();
    CHECK_FALSE(validate(x).ok());
  }
}

TEST_CASE("generator counts of the standard shapes") {
  auto binom = [](int n, int k) { return static_cast<std::size_t>(binomial(n, k)); };
  for (int n = 0; n <= 6; ++n) {
    const Complex x = oriental(n);
    CHECK(validate(x).ok());
    for (int k = 0; k <= n; ++k) CHECK(x.count(k) == binom(n + 1, k + 1));
  }
  for (int n = 0; n <= 4; ++n) {
    const Complex x = cube(n);
    CHECK(validate(x).ok());
    for (int k = 0; k <= n; ++k) CHECK(x.count(k) == binom(n, k) * (std::size_t{1} << (n - k)));
  }
  for (int n = 0; n <= 5; ++n) {
    const Complex x = disk(n);
    CHECK(validate(x).ok());
    CHECK(x.count(n) == 1);
    for (int k = 0; k < n; ++k) CHECK(x.count(k) == 2);
    CHECK(validate(boundary_disk(n)).ok());
    CHECK(boundary_disk(n).top_degree() == n - 1);
  }
}

TEST_CASE("oriental boundaries are alternating face sums") {
  const Complex x = oriental(3);
  CHECK(x.format(x.boundary(2, x.at("013").index)) == "01-03+13");
  CHECK(x.format(x.boundary(3, 0)) == "-012+013-023+123");
  CHECK(x.format(x.boundary_minus(3, 0)) == "012+023");
  CHECK(x.format(x.boundary_plus(3, 0)) == "013+123");
}

TEST_CASE("gray tensor of arrows is the square") {
  const Complex sq = gray_tensor(oriental(1), oriental(1));
  CHECK(sq == cube(2));
  CHECK(dump(to_json(sq)) == dump(to_json(cube(2))));
  const Complex top = cube(2);
  // ∂(e⊗e) = (1⊗e + e⊗0) − (0⊗e + e⊗1)
  CHECK(top.format(top.boundary(2, 0)) == "-0.01+01.0-01.1+1.01");
  CHECK(top.format(top.boundary_minus(2, 0)) == "0.01+01.1");
  CHECK(top.format(top.boundary_plus(2, 0)) == "01.0+1.01");
  CHECK(top.counts() == std::vector<std::size_t>{4, 4, 1});
}

TEST_CASE("gray tensor is associative and squares cubes") {
  const Complex a = oriental(1), b = oriental(2), c = disk(1);
  const Complex left = gray_tensor(gray_tensor(a, b), c);
  const Complex right = gray_tensor(a, gray_tensor(b, c));
  CHECK(isomorphic(left, right));
  CHECK(left.renamed("t") == right.renamed("t"));
  for (int p = 1; p <= 2; ++p)
    for (int q = 1; p + q <= 4; ++q) CHECK(gray_tensor(cube(p), cube(q)) == cube(p + q));
  // the point is a unit up to renaming
  for (int n = 0; n <= 3; ++n) {
    CHECK(isomorphic(gray_tensor(cube(0), cube(n)), cube(n)));
    CHECK(isomorphic(gray_tensor(oriental(n), cube(0)), oriental(n)));
  }
}

TEST_CASE("duals are involutions and reverse the tensor") {
  for (int n = 0; n <= 3; ++n) {
    CHECK(dual_op(dual_op(cube(n))) == cube(n));
    CHECK(dual_co(dual_co(oriental(n + 1))) == oriental(n + 1));
  }
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; a + b <= 3; ++b) {
      CHECK(isomorphic(dual_op(gray_tensor(cube(a), cube(b))), gray_tensor(dual_op(cube(b)), dual_op(cube(a)))));
      CHECK(isomorphic(dual_co(gray_tensor(cube(a), cube(b))), gray_tensor(dual_co(cube(b)), dual_co(cube(a)))));
    }
  // op reverses arrows
  const Complex arrow = dual_op(oriental(1));
  CHECK(arrow.format(arrow.boundary(1, 0)) == "0-1");
  CHECK_FALSE(isomorphic(oriental(2), disk(2)));
  CHECK(isomorphic(disk(1), oriental(1)));
}

TEST_CASE("suspension and wedge") {
  const Complex s = suspension(oriental(1));
  CHECK(validate(s).ok());
  CHECK(s.counts() == std::vector<std::size_t>{2, 2, 1});
  CHECK(s.format(s.boundary(2, 0)) == "-S0+S1");
  CHECK(s.endpoints().has_value());
  // S𝔻ⁿ = 𝔻ⁿ⁺¹ up to renaming
  for (int n = 0; n <= 3; ++n) CHECK(isomorphic(suspension(disk(n)), disk(n + 1)));
  const Complex w = wedge({disk(1), disk(1), disk(2)});
  CHECK(validate(w).ok());
  CHECK(w.count(0) == 4);
  CHECK(w.count(1) == 4);
  CHECK_THROWS_AS(wedge({oriental(2)}), std::invalid_argument);
}

TEST_CASE("core and boundary disks") {
  CHECK(core(oriental(3), 1).top_degree() == 1);
  CHECK(core(oriental(3), 1).count(1) == 6);
  CHECK(boundary_disk(2).counts() == std::vector<std::size_t>{2, 2});
}

TEST_CASE("maps") {
  auto o1 = share(oriental(1)), o2 = share(oriental(2));
  auto f = oriental_map(o1, o2, {0, 2});
  CHECK(validate_map(f).ok());
  CHECK(o2->format(f.image(1, 0)) == "02");
  auto s = oriental_map(o2, o1, {0, 0, 1});
  CHECK(validate_map(s).ok());
  CHECK(s.image(2, 0).is_zero());
  CHECK(o1->format(s.image(1, o2->at("12").index)) == "01");
  CHECK(s.image(1, o2->at("01").index).is_zero());
  auto g = s.after(f);
  CHECK(o1->format(g.image(1, 0)) == "01");
  CHECK_THROWS(f.after(f));
  // a map that is not a chain map
  auto bad = MapBuilder(o1, o2).set("0", "0").set("1", "2").set("01", "01").build();
  CHECK(validate_map(bad).has(ViolationKind::NotCommuting));
}

TEST_CASE("JSON round trips") {
  for (const Complex& x : {oriental(3), cube(2), suspension(disk(1)), wedge({disk(1), suspension(oriental(1))})}) {
    const Complex y = complex_from_json(to_json(x));
    CHECK(y == x);
    CHECK(dump(to_json(y)) == dump(to_json(x)));
  }
}
