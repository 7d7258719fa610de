#include "gaunt/truncation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace gaunt {

std::size_t PosetEnrichedCategory::compose(std::size_t a, std::size_t b, std::size_t c,
                                           std::size_t f, std::size_t g) const {
  Chain sum = hom[a][b].representatives.at(f) + hom[b][c].representatives.at(g);
  auto k = hom[a][c].class_of(sum);
  if (!k) throw std::logic_error("composite is not an enumerated cell");
  return *k;
}

std::vector<std::string> PosetEnrichedCategory::check_laws() const {
  std::vector<std::string> problems;
  const std::size_t n = objects.size();
  for (std::size_t a = 0; a < n; ++a) {
    const auto& self = hom[a][a];
    auto id = self.class_of(Chain(1, self.members.empty() ? 0 : self.members[0].width()));
    if (!id) {
      problems.push_back("no identity on " + objects[a]);
      continue;
    }
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t f = 0; f < hom[a][b].poset.size(); ++f)
        if (compose(a, a, b, *id, f) != f) problems.push_back("left unit fails at " + objects[a]);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const auto& p = hom[a][b].poset;
        const auto& q = hom[b][c].poset;
        for (std::size_t f = 0; f < p.size(); ++f)
          for (std::size_t f2 = 0; f2 < p.size(); ++f2)
            for (std::size_t g = 0; g < q.size(); ++g)
              for (std::size_t g2 = 0; g2 < q.size(); ++g2)
                if (p.leq(f, f2) && q.leq(g, g2) &&
                    !hom[a][c].poset.leq(compose(a, b, c, f, g), compose(a, b, c, f2, g2)))
                  problems.push_back("composition " + objects[a] + "→" + objects[b] + "→" +
                                     objects[c] + " is not monotone");
        for (std::size_t d = 0; d < n; ++d)
          for (std::size_t f = 0; f < p.size(); ++f)
            for (std::size_t g = 0; g < q.size(); ++g)
              for (std::size_t h = 0; h < hom[c][d].poset.size(); ++h)
                if (compose(a, c, d, compose(a, b, c, f, g), h) !=
                    compose(a, b, d, f, compose(b, c, d, g, h)))
                  problems.push_back("composition is not associative");
      }
  return problems;
}

Poset truncate0(const Complex& x, int cap) { return pi0(x, cap); }

PosetEnrichedCategory truncate1(ChainSolver& solver) {
  const Complex& x = solver.complex();
  PosetEnrichedCategory cat;
  const std::size_t n = x.count(0);
  for (std::size_t a = 0; a < n; ++a) cat.objects.push_back(x.generator_name(0, a));
  cat.hom.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      OrientedBasePoint z;
      z.entries.emplace_back(x.generator(0, a), x.generator(0, b));
      cat.hom[a].push_back(pi_n(solver, z));
    }
  return cat;
}

bool enriched_isomorphic(const PosetEnrichedCategory& a, const PosetEnrichedCategory& b) {
  const std::size_t n = a.objects.size();
  if (b.objects.size() != n) return false;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // objects a_i ↦ b_perm[i]; pick the hom isomorphisms, then test composition
    std::vector<std::vector<std::vector<std::size_t>>> iso(n, std::vector<std::vector<std::size_t>>(n));
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        auto r = poset_iso(a.hom[i][j].poset, b.hom[perm[i]][perm[j]].poset);
        if (!r) ok = false;
        else iso[i][j] = *r.map;
      }
    if (!ok) continue;
    // Only the first isomorphism per hom is tried, so homs with nontrivial
    // automorphisms can give false negatives.
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        for (std::size_t k = 0; k < n && ok; ++k)
          for (std::size_t f = 0; f < a.hom[i][j].poset.size() && ok; ++f)
            for (std::size_t g = 0; g < a.hom[j][k].poset.size() && ok; ++g)
              ok = iso[i][k][a.compose(i, j, k, f, g)] ==
                   b.compose(perm[i], perm[j], perm[k], iso[i][j][f], iso[j][k][g]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

int disk_truncation(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("disk truncation needs m, n ≥ 0");
  return m >= n - 1 ? n : m + 1;
}

MapAnalysis::MapAnalysis(const ComplexMap& f, int cap)
    : f_(f), cap_(cap), source_(f.source(), cap), target_(f.target(), cap) {
  auto diag = validate_map(f);
  if (!diag.ok()) throw std::invalid_argument("invalid map: " + diag.summary());
}

int MapAnalysis::top() const {
  return std::max(f_.source().top_degree(), f_.target().top_degree());
}

OrientedBasePoint MapAnalysis::image(const OrientedBasePoint& z) const {
  OrientedBasePoint out;
  for (const auto& [lo, hi] : z.entries) out.entries.emplace_back(f_.apply(lo), f_.apply(hi));
  return out;
}

bool MapAnalysis::lifts(int m, Lift mode) {
  if (m < 0) return true;
  auto key = std::make_pair(m, static_cast<int>(mode));
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  bool ok = true;
  if (m == 0) {
    const Complex& y = f_.target();
    for (std::size_t t = 0; t < y.count(0) && ok; ++t) {
      std::size_t hits = 0;
      for (std::size_t s = 0; s < f_.source().count(0); ++s)
        if (f_.image(0, s) == y.generator(0, t)) ++hits;
      ok = mode == Lift::Some ? hits >= 1 : hits == 1;
    }
  } else {
    for (const auto& z : enumerate_basepoints(source_, m - 1)) {
      auto fz = image(z);
      const auto& up = target_.solve(m, fz.plus(m - 1) - fz.minus(m - 1));
      const auto& here = source_.solve(m, z.plus(m - 1) - z.minus(m - 1));
      for (const auto& u : up) {
        std::size_t hits = 0;
        for (const auto& c : here)
          if (f_.apply(c) == u) ++hits;
        if (mode == Lift::Some ? hits == 0 : hits != 1) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
  }
  memo_[key] = ok;
  return ok;
}

bool MapAnalysis::is_full(int m) { return lifts(m, Lift::Some); }
bool MapAnalysis::has_unique_lifts(int m) { return lifts(m, Lift::Unique); }

bool MapAnalysis::is_faithful(int n) {
  // above top + 1 every basepoint has equal zero top entries on both sides
  for (int m = std::max(n + 1, 0); m <= top() + 1; ++m)
    if (!has_unique_lifts(m)) return false;
  return true;
}

bool MapAnalysis::is_connected(int n) {
  for (int m = 0; m <= n + 1; ++m)
    if (!is_full(m)) return false;
  return true;
}

bool MapAnalysis::is_truncated(int n) { return is_faithful(n + 1); }

bool MapAnalysis::is_equivalence(int n) {
  failure_.clear();
  for (int m = 0; m <= n; ++m) {
    for (const auto& z : enumerate_basepoints(source_, m - 1)) {
      auto p = pi_n(source_, z);
      auto q = pi_n(target_, image(z));
      std::vector<std::size_t> phi;
      bool ok = p.poset.size() == q.poset.size();
      for (std::size_t i = 0; i < p.poset.size() && ok; ++i) {
        auto k = q.class_of(f_.apply(p.representatives[i]));
        if (!k) ok = false;
        else phi.push_back(*k);
      }
      if (ok) ok = is_order_isomorphism(p.poset, q.poset, phi);
      if (!ok) {
        failure_ = "π" + std::to_string(m) + " at " + format_table(f_.source(), z);
        return false;
      }
    }
  }
  return true;
}

}  // namespace gaunt
