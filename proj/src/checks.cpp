#include "gaunt/checks.hpp"

#include <memory>
#include <optional>
#include <set>

namespace gaunt {

void CheckResult::merge(const CheckResult& other) {
  cases += other.cases;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

Complex iterated_suspension(const Complex& x, int m) {
  Complex out = x;
  for (int i = 0; i < m; ++i) out = suspension(out);
  return out;
}

namespace {

// Moves a chain of `from` into `to` along a renaming of generators.
template <class Rename>
Chain transport(const Complex& from, const Chain& c, const Complex& to, int degree, Rename rename) {
  Chain out = to.zero(degree);
  for (std::size_t i = 0; i < c.width(); ++i) {
    if (c[i] == 0) continue;
    out += c[i] * to.generator(rename(from.generator_name(c.degree(), i)));
  }
  return out;
}

std::string repeat_s(int m) { return std::string(m, 'S'); }

}  // namespace

CheckResult suspension_shift_check(const Complex& x, int k, int m, int cap) {
  CheckResult result;
  if (m > k) return result;
  const Complex sx = iterated_suspension(x, m);
  ChainSolver base(x, cap), lifted(sx, cap);
  const std::string prefix = repeat_s(m);
  auto lift = [&](const Chain& c) {
    return transport(x, c, sx, c.degree() + m, [&](const std::string& n) { return prefix + n; });
  };
  for (const auto& zp : enumerate_basepoints(base, k - m - 1)) {
    OrientedBasePoint z;
    for (int j = 0; j < m; ++j)
      z.entries.emplace_back(sx.generator(repeat_s(j) + "bot"), sx.generator(repeat_s(j) + "top"));
    for (const auto& [lo, hi] : zp.entries) z.entries.emplace_back(lift(lo), lift(hi));
    ++result.cases;
    const auto lower = pi_n(base, zp);
    const auto upper = pi_n(lifted, z);
    std::vector<std::size_t> phi;
    bool mapped = lower.poset.size() == upper.poset.size();
    for (std::size_t i = 0; mapped && i < lower.representatives.size(); ++i) {
      auto cls = upper.class_of(lift(lower.representatives[i]));
      if (!cls) mapped = false;
      else phi.push_back(*cls);
    }
    if (!mapped || !is_order_isomorphism(lower.poset, upper.poset, phi))
      result.failures.push_back(sx.name() + " k=" + std::to_string(k) + " at " + format_table(sx, z));
  }
  return result;
}

CheckResult wedge_product_check(const std::vector<Complex>& factors, int k, int cap) {
  CheckResult result;
  std::vector<Complex> suspended;
  for (const auto& f : factors) suspended.push_back(suspension(f));
  const Complex w = wedge(suspended);
  ChainSolver solver(w, cap);
  std::vector<std::unique_ptr<ChainSolver>> factor_solvers;
  for (const auto& f : factors) factor_solvers.push_back(std::make_unique<ChainSolver>(f, cap));

  auto vertex = [&](const Chain& c) -> std::optional<std::size_t> {
    auto s = c.support();
    const auto& name = w.generator_name(0, s.at(0));
    if (name.size() < 2 || name[0] != 'v') return std::nullopt;
    return std::stoul(name.substr(1));
  };
  // the part of a wedge chain living in factor ℓ, one degree down
  auto restrict_to = [&](const Chain& c, std::size_t l) {
    const Complex& f = factors[l - 1];
    const std::string prefix = std::to_string(l) + ":S";
    Chain out = f.zero(c.degree() - 1);
    for (std::size_t i = 0; i < c.width(); ++i) {
      if (c[i] == 0) continue;
      const auto& name = w.generator_name(c.degree(), i);
      if (name.rfind(prefix, 0) == 0) out += c[i] * f.generator(name.substr(prefix.size()));
    }
    return out;
  };

  for (const auto& z : enumerate_basepoints(solver, k - 1)) {
    auto i = vertex(z.minus(0)), j = vertex(z.plus(0));
    if (!i || !j || *i > *j) continue;
    ++result.cases;
    std::vector<Poset> parts;
    for (std::size_t l = *i + 1; l <= *j; ++l) {
      OrientedBasePoint zl;
      for (int d = 1; d <= z.dimension(); ++d)
        zl.entries.emplace_back(restrict_to(z.minus(d), l), restrict_to(z.plus(d), l));
      parts.push_back(pi_n(*factor_solvers[l - 1], zl).poset);
    }
    const Poset expected = poset_product(parts);
    const Poset actual = pi_n(solver, z).poset;
    if (!poset_iso(actual, expected))
      result.failures.push_back(w.name() + " k=" + std::to_string(k) + " at " + format_table(w, z));
  }
  return result;
}

namespace {

std::vector<std::string> split_dots(const std::string& s) {
  std::vector<std::string> out{""};
  for (char ch : s) {
    if (ch == '.') out.emplace_back();
    else out.back() += ch;
  }
  return out;
}

std::string join_dots(const std::vector<std::string>& parts, std::size_t from, std::size_t to) {
  std::string out;
  for (std::size_t i = from; i < to; ++i) out += (i > from ? "." : "") + parts[i];
  return out;
}

}  // namespace

CheckResult dual_tensor_check(int a, int b, bool co, int cap) {
  CheckResult result;
  auto dual = [co](const Complex& x) { return co ? dual_co(x) : dual_op(x); };
  const Complex ca = cube(a), cb = cube(b);
  const Complex lhs = dual(gray_tensor(ca, cb));
  const Complex rhs = gray_tensor(dual(cb), dual(ca));
  // x.y ↦ y.x, with x carrying a tensor factors
  auto swap_name = [&](const std::string& n) {
    auto parts = split_dots(n);
    const auto cut = static_cast<std::size_t>(a);
    return join_dots(parts, cut, parts.size()) + "." + join_dots(parts, 0, cut);
  };
  ChainSolver sl(lhs, cap), sr(rhs, cap);
  const auto pl = pi0(sl), pr = pi0(sr);
  std::vector<std::size_t> phi;
  for (const auto& rep : pl.representatives) {
    auto cls = pr.class_of(transport(lhs, rep, rhs, 0, swap_name));
    if (!cls) break;
    phi.push_back(*cls);
  }
  ++result.cases;
  const std::string tag = std::string(co ? "co" : "op") + " cube(" + std::to_string(a) + ")⊗cube(" +
                          std::to_string(b) + ")";
  if (phi.size() != pl.poset.size() || pl.poset.size() != pr.poset.size() ||
      !is_order_isomorphism(pl.poset, pr.poset, phi))
    result.failures.push_back(tag + " pi0");
  for (std::size_t u = 0; u < lhs.count(0); ++u)
    for (std::size_t v = 0; v < lhs.count(0); ++v) {
      OrientedBasePoint zl{{{lhs.generator(0, u), lhs.generator(0, v)}}};
      OrientedBasePoint zr{{{transport(lhs, zl.minus(0), rhs, 0, swap_name),
                             transport(lhs, zl.plus(0), rhs, 0, swap_name)}}};
      ++result.cases;
      if (!poset_iso(pi_n(sl, zl).poset, pi_n(sr, zr).poset))
        result.failures.push_back(tag + " pi1 at " + format_table(lhs, zl));
    }
  return result;
}

bool is_generator_bijection(const ComplexMap& f) {
  const Complex& x = f.source();
  const Complex& y = f.target();
  if (x.counts() != y.counts()) return false;
  for (int d = 0; d <= x.top_degree(); ++d) {
    std::set<std::size_t> hit;
    for (std::size_t i = 0; i < x.count(d); ++i) {
      auto s = f.image(d, i).support();
      if (s.size() != 1 || f.image(d, i)[s[0]] != 1) return false;
      hit.insert(s[0]);
    }
    if (hit.size() != y.count(d)) return false;
  }
  return true;
}

namespace {

CatalogMap entry(std::string name, ComplexMap map) {
  bool iso = is_generator_bijection(map);
  return {std::move(name), std::move(map), iso};
}

}  // namespace

std::vector<CatalogMap> predicate_catalog() {
  auto o1 = share(oriental(1)), o2 = share(oriental(2));
  auto d0 = share(disk(0)), d1 = share(disk(1)), b1 = share(boundary_disk(1));
  std::vector<CatalogMap> out;
  out.push_back(entry("identity oriental(2)", identity_map(o2)));
  out.push_back(entry("boundary(1) -> disk(1)", MapBuilder(b1, d1).set("s0", "s0").set("t0", "t0").build()));
  out.push_back(entry("disk(1) -> disk(0)",
                      MapBuilder(d1, d0).set("s0", "d0").set("t0", "d0").set("d1", "0").build()));
  out.push_back(entry("oriental(1) -> oriental(2) face 02", oriental_map(o1, o2, {0, 2})));
  return out;
}

std::vector<CatalogMap> whitehead_catalog() {
  auto out = predicate_catalog();
  auto d1 = share(disk(1)), o1 = share(oriental(1));
  out.push_back(entry("disk(1) -> oriental(1)",
                      MapBuilder(d1, o1).set("s0", "0").set("t0", "1").set("d1", "01").build()));
  return out;
}

std::vector<CatalogMap> extended_catalog() {
  auto out = whitehead_catalog();
  auto o1 = share(oriental(1)), o2 = share(oriental(2)), o3 = share(oriental(3));
  auto d0 = share(disk(0)), c2 = share(cube(2));
  out.push_back(entry("oriental(2) -> disk(0)",
                      MapBuilder(o2, d0).set("0", "d0").set("1", "d0").set("2", "d0").build()));
  out.push_back(entry("oriental(1) -> oriental(2) face 01", oriental_map(o1, o2, {0, 1})));
  out.push_back(entry("oriental(2) -> oriental(1) s0", oriental_map(o2, o1, {0, 0, 1})));
  out.push_back(entry("oriental(2) -> oriental(3) face 013", oriental_map(o2, o3, {0, 1, 3})));
  out.push_back(entry("identity cube(2)", identity_map(c2)));
  return out;
}

}  // namespace gaunt
