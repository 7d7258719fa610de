#include "gaunt/homotopy.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gaunt {

std::string cell_label(const Complex& x, const Chain& c) {
  return c.is_zero() ? "id" : x.format(c);
}

std::optional<std::size_t> HomotopyPoset::class_of(const Chain& c) const {
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i] == c) return poset.class_of()[i];
  return std::nullopt;
}

namespace {

HomotopyPoset build(ChainSolver& solver, int degree, std::vector<Chain> cells) {
  const Complex& x = solver.complex();
  std::vector<std::string> labels;
  for (const auto& c : cells) labels.push_back(degree == 0 ? x.format(c) : cell_label(x, c));
  const std::size_t n = cells.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      leq[i][j] = i == j || solver.solvable(degree + 1, cells[j] - cells[i]);
  HomotopyPoset h;
  h.degree = degree;
  h.poset = Poset::from_matrix(std::move(labels), std::move(leq));
  h.representatives.resize(h.poset.size());
  std::vector<bool> set(h.poset.size(), false);
  for (std::size_t i = 0; i < n; ++i) {
    auto c = h.poset.class_of()[i];
    if (!set[c]) h.representatives[c] = cells[i];
    set[c] = true;
  }
  h.members = std::move(cells);
  return h;
}

}  // namespace

HomotopyPoset pi0(ChainSolver& solver) {
  const Complex& x = solver.complex();
  std::vector<Chain> objects;
  for (std::size_t i = 0; i < x.count(0); ++i) objects.push_back(x.generator(0, i));
  return build(solver, 0, std::move(objects));
}

Poset pi0(const Complex& x, int cap) {
  ChainSolver solver(x, cap);
  return pi0(solver).poset;
}

HomotopyPoset pi_n(ChainSolver& solver, const OrientedBasePoint& z) {
  const Complex& x = solver.complex();
  check_table(x, z, false);
  if (z.dimension() < 0) return pi0(solver);
  const int n = z.dimension() + 1;
  return build(solver, n, solver.solve(n, z.plus(n - 1) - z.minus(n - 1)));
}

Poset pi_n(const Complex& x, const OrientedBasePoint& z, int cap) {
  ChainSolver solver(x, cap);
  return pi_n(solver, z).poset;
}

Poset pi1_rewriting(ChainSolver& solver, std::size_t a, std::size_t b) {
  const Complex& x = solver.complex();
  const auto& chains = solver.solve(1, x.generator(0, b) - x.generator(0, a));
  std::vector<std::vector<std::size_t>> paths;
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (const auto& c : chains) {
    index.emplace(atomic_path_decomposition(x, c, a, b), paths.size());
    paths.push_back(atomic_path_decomposition(x, c, a, b));
  }
  // Each 2-generator rewrites the path of its ∂⁻ into the path of its ∂⁺.
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> rules;
  for (std::size_t g = 0; g < x.count(2); ++g) {
    const Chain& lo = x.boundary_minus(2, g);
    const Chain& hi = x.boundary_plus(2, g);
    auto atom = atom_entries(x, {2, g});
    auto s = atom[0].first.support().at(0), t = atom[0].second.support().at(0);
    rules.emplace_back(atomic_path_decomposition(x, lo, s, t), atomic_path_decomposition(x, hi, s, t));
  }
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t p = 0; p < paths.size(); ++p) {
    const auto& path = paths[p];
    for (const auto& [from, to] : rules) {
      if (from.size() > path.size()) continue;
      for (std::size_t start = 0; start + from.size() <= path.size(); ++start) {
        if (!std::equal(from.begin(), from.end(), path.begin() + start)) continue;
        std::vector<std::size_t> next(path.begin(), path.begin() + start);
        next.insert(next.end(), to.begin(), to.end());
        next.insert(next.end(), path.begin() + start + from.size(), path.end());
        auto it = index.find(next);
        if (it == index.end())
          throw std::logic_error("rewrite left the enumerated path set");
        rel.emplace_back(p, it->second);
      }
    }
  }
  std::vector<std::string> labels;
  for (const auto& path : paths) {
    std::string l = "[";
    for (std::size_t i = 0; i < path.size(); ++i) l += (i ? "," : "") + x.generator_name(1, path[i]);
    labels.push_back(l + "]");
  }
  return Poset::from_preorder(std::move(labels), rel);
}

Poset pi_prime_n(ChainSolver& solver, const OrientedBasePoint& z) {
  if (z.dimension() < 0) return empty_poset();
  auto h = pi_n(solver, z);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < h.poset.size(); ++i)
    if (h.representatives[i].is_zero()) keep.push_back(i);
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq(keep.size(), std::vector<bool>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a) {
    labels.push_back(h.poset.label(keep[a]));
    for (std::size_t b = 0; b < keep.size(); ++b) leq[a][b] = h.poset.leq(keep[a], keep[b]);
  }
  return Poset::from_matrix(std::move(labels), std::move(leq));
}

}  // namespace gaunt
