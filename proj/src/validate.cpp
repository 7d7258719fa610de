#include "gaunt/validate.hpp"

#include <algorithm>
#include <sstream>

namespace gaunt {

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::BoundarySquared: return "boundary-squared";
    case ViolationKind::Augmentation: return "augmentation";
    case ViolationKind::NonUnitalAtom: return "non-unital-atom";
    case ViolationKind::LoopFreeness: return "loop-freeness";
    case ViolationKind::NotCommuting: return "not-commuting";
    case ViolationKind::NotPositive: return "not-positive";
    case ViolationKind::ShapeMismatch: return "shape-mismatch";
  }
  return "unknown";
}

bool Diagnostics::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

std::string Diagnostics::summary() const {
  if (ok()) return "pass";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << to_string(violations[i].kind) << ": " << violations[i].message;
  }
  return os.str();
}

InvalidComplex::InvalidComplex(const std::string& name, Diagnostics diagnostics)
    : std::runtime_error("complex '" + name + "' is not a valid Steiner complex: " +
                         diagnostics.summary()),
      diagnostics_(std::move(diagnostics)) {}

void require_valid(const Complex& x) {
  auto d = validate(x);
  if (!d.ok()) throw InvalidComplex(x.name(), std::move(d));
}

namespace {

// Flattened node numbering over all degrees.
struct Numbering {
  std::vector<std::size_t> offset;
  std::vector<GeneratorRef> refs;

  explicit Numbering(const Complex& x) {
    for (int d = 0; d <= x.top_degree(); ++d) {
      offset.push_back(refs.size());
      for (std::size_t i = 0; i < x.count(d); ++i) refs.push_back({d, i});
    }
  }
  std::size_t id(GeneratorRef g) const { return offset[g.degree] + g.index; }
};

std::vector<std::vector<std::size_t>> loop_free_graph(const Complex& x, const Numbering& num) {
  std::vector<std::vector<std::size_t>> adj(num.refs.size());
  for (int d = 1; d <= x.top_degree(); ++d) {
    for (std::size_t i = 0; i < x.count(d); ++i) {
      std::size_t b = num.id({d, i});
      for (auto j : x.boundary_minus(d, i).support()) adj[num.id({d - 1, j})].push_back(b);
      for (auto j : x.boundary_plus(d, i).support()) adj[b].push_back(num.id({d - 1, j}));
    }
  }
  return adj;
}

// Returns a cycle if one exists, else fills `order` with a topological order.
std::vector<std::size_t> find_cycle(const std::vector<std::vector<std::size_t>>& adj,
                                    std::vector<std::size_t>& order) {
  enum Color : char { White, Grey, Black };
  std::vector<Color> color(adj.size(), White);
  std::vector<std::size_t> parent(adj.size(), SIZE_MAX);
  for (std::size_t root = 0; root < adj.size(); ++root) {
    if (color[root] != White) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    color[root] = Grey;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < adj[v].size()) {
        std::size_t w = adj[v][next++];
        if (color[w] == Grey) {
          std::vector<std::size_t> cycle{w};
          for (std::size_t u = v; u != w; u = parent[u]) cycle.push_back(u);
          std::reverse(cycle.begin() + 1, cycle.end());
          return cycle;
        }
        if (color[w] == White) {
          color[w] = Grey;
          parent[w] = v;
          stack.emplace_back(w, 0);
        }
      } else {
        color[v] = Black;
        order.push_back(v);
        stack.pop_back();
      }
    }
  }
  std::reverse(order.begin(), order.end());
  return {};
}

}  // namespace

std::vector<GeneratorRef> loop_free_order(const Complex& x) {
  Numbering num(x);
  std::vector<std::size_t> order;
  if (!find_cycle(loop_free_graph(x, num), order).empty()) return {};
  std::vector<GeneratorRef> out;
  for (auto v : order) out.push_back(num.refs[v]);
  return out;
}

Diagnostics validate(const Complex& x) {
  Diagnostics diag;
  for (int d = 2; d <= x.top_degree(); ++d) {
    for (std::size_t i = 0; i < x.count(d); ++i) {
      if (!x.boundary_of(x.boundary(d, i)).is_zero())
        diag.violations.push_back({ViolationKind::BoundarySquared,
                                   "∂∂(" + x.generator_name(d, i) + ") ≠ 0",
                                   {x.generator_name(d, i)}});
    }
  }
  for (std::size_t i = 0; i < x.count(1); ++i) {
    if (x.augmentation(x.boundary(1, i)) != 0)
      diag.violations.push_back({ViolationKind::Augmentation,
                                 "ε∂(" + x.generator_name(1, i) + ") ≠ 0",
                                 {x.generator_name(1, i)}});
  }
  for (int d = 1; d <= x.top_degree(); ++d) {
    for (std::size_t i = 0; i < x.count(d); ++i) {
      auto atom = atom_entries(x, {d, i});
      if (x.augmentation(atom[0].first) != 1 || x.augmentation(atom[0].second) != 1)
        diag.violations.push_back(
            {ViolationKind::NonUnitalAtom,
             "atom of " + x.generator_name(d, i) + " has ε(x₀⁻) = " +
                 x.augmentation(atom[0].first).str() +
                 ", ε(x₀⁺) = " + x.augmentation(atom[0].second).str(),
             {x.generator_name(d, i)}});
    }
  }
  Numbering num(x);
  std::vector<std::size_t> order;
  auto cycle = find_cycle(loop_free_graph(x, num), order);
  if (!cycle.empty()) {
    Violation v{ViolationKind::LoopFreeness, "cycle ", {}};
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const auto& n = x.generator_name(num.refs[cycle[k]]);
      v.generators.push_back(n);
      v.message += n + "→";
    }
    v.message += x.generator_name(num.refs[cycle.front()]);
    diag.violations.push_back(std::move(v));
  }
  return diag;
}

}  // namespace gaunt
