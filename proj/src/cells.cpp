#include "gaunt/cells.hpp"

#include <algorithm>
#include <set>

#include "gaunt/validate.hpp"

namespace gaunt {

namespace {

std::atomic<std::uint64_t> g_checks{0}, g_saturated{0}, g_unsaturated{0};

struct VectorLess {
  bool operator()(const std::vector<Integer>& a, const std::vector<Integer>& b) const {
    return a < b;
  }
};

}  // namespace

UnsaturatedEnumeration::UnsaturatedEnumeration(const std::string& complex, int degree, int cap,
                                               std::size_t found, std::size_t found_doubled)
    : std::runtime_error("enumeration in " + complex + " (degree " + std::to_string(degree) +
                         ") is not saturated at cap " + std::to_string(cap) + ": " +
                         std::to_string(found) + " solutions, " + std::to_string(found_doubled) +
                         " at cap " + std::to_string(2 * cap)),
      cap_(cap) {}

SolverStatistics solver_statistics() {
  return {g_checks.load(), g_saturated.load(), g_unsaturated.load()};
}

void reset_solver_statistics() {
  g_checks = 0;
  g_saturated = 0;
  g_unsaturated = 0;
}

std::vector<Chain> enumerate_positive_solutions(const Complex& x, int n, const Chain& d,
                                                const Integer& limit) {
  if (n < 1 || n > x.top_degree() + 1) throw std::invalid_argument("boundary problem out of range");
  if (d.degree() != n - 1 || d.width() != x.count(n - 1))
    throw std::invalid_argument("boundary target has the wrong shape");
  std::vector<Chain> out;
  if (d.is_zero()) {
    out.push_back(x.zero(n));
    return out;
  }
  const std::size_t width = x.count(n);
  if (width == 0) return out;

  // Depth-first search from c = 0. A generator g may be added when ∂⁻g fits
  // under the negative part of the residual d − ∂c; in a strongly loop-free
  // complex every solution can be assembled this way, by repeatedly peeling
  // off a generator that is minimal in the loop-freeness order.
  std::set<std::vector<Integer>, VectorLess> seen;
  std::vector<std::pair<Chain, Chain>> stack;  // (c, residual)
  stack.emplace_back(x.zero(n), d);
  seen.insert(stack.back().first.coefficients());
  while (!stack.empty()) {
    auto [c, r] = std::move(stack.back());
    stack.pop_back();
    if (r.is_zero()) {
      out.push_back(c);
      continue;
    }
    for (std::size_t g = 0; g < width; ++g) {
      if (c[g] >= limit) continue;
      const Chain& minus = x.boundary_minus(n, g);
      bool fits = true;
      for (std::size_t j = 0; j < minus.width() && fits; ++j)
        if (minus[j] != 0 && -r[j] < minus[j]) fits = false;
      if (!fits) continue;
      Chain next = c;
      next[g] += 1;
      if (!seen.insert(next.coefficients()).second) continue;
      stack.emplace_back(std::move(next), r - x.boundary(n, g));
    }
  }
  return out;
}

ChainSolver::ChainSolver(const Complex& x, int cap) : x_(&x), cap_(cap) {
  if (cap < 1) throw std::invalid_argument("cap must be ≥ 1");
  require_valid(x);
}

const std::vector<Chain>& ChainSolver::solve(int n, const Chain& d) {
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(d);
    if (it != cache_.end()) return *it->second;
  }
  std::vector<Chain> all;
  if (n >= 1 && n <= x_->top_degree()) {
    all = enumerate_positive_solutions(*x_, n, d, 2 * cap_);
  } else if (d.is_zero()) {
    all.push_back(x_->zero(n));
  }
  std::vector<Chain> kept;
  for (auto& c : all)
    if (c.max_coefficient() <= cap_) kept.push_back(std::move(c));
  ++g_checks;
  if (kept.size() != all.size()) {
    ++g_unsaturated;
    throw UnsaturatedEnumeration(x_->name(), n, cap_, kept.size(), all.size());
  }
  ++g_saturated;
  std::sort(kept.begin(), kept.end(), [&](const Chain& a, const Chain& b) {
    return x_->format(a) < x_->format(b);
  });
  std::lock_guard lock(mutex_);
  auto [it, inserted] = cache_.emplace(d, nullptr);
  if (inserted) it->second = std::make_unique<std::vector<Chain>>(std::move(kept));
  return *it->second;
}

void check_table(const Complex& x, const CellTable& t, bool require_cell) {
  for (int k = 0; k <= t.dimension(); ++k) {
    for (const Chain* c : {&t.minus(k), &t.plus(k)}) {
      if (c->degree() != k || c->width() != x.count(k))
        throw InvalidBasepoint("entry " + std::to_string(k) + " has the wrong shape");
      if (!c->is_positive())
        throw InvalidBasepoint("entry " + std::to_string(k) + " is not positive");
      if (k == 0 && x.augmentation(*c) != 1)
        throw InvalidBasepoint("degree-0 entry with augmentation ≠ 1");
      if (k > 0 && x.boundary_of(*c) != t.plus(k - 1) - t.minus(k - 1))
        throw InvalidBasepoint("entry " + std::to_string(k) + " has the wrong boundary");
    }
  }
  if (require_cell && !t.is_cell()) throw InvalidBasepoint("top entries of a cell differ");
}

OrientedBasePoint object_pair(const Complex& x, std::string_view a, std::string_view b) {
  OrientedBasePoint z;
  z.entries.emplace_back(x.generator(a), x.generator(b));
  check_table(x, z, false);
  return z;
}

OrientedBasePoint extend(const OrientedBasePoint& z, Chain u, Chain v) {
  OrientedBasePoint out = z;
  out.entries.emplace_back(std::move(u), std::move(v));
  return out;
}

std::string format_table(const Complex& x, const CellTable& t) {
  std::string s = "(";
  for (int k = 0; k <= t.dimension(); ++k) {
    if (k) s += "; ";
    s += x.format(t.minus(k)) + ", " + x.format(t.plus(k));
  }
  return s + ")";
}

CellTable atom_table(const Complex& x, GeneratorRef g) {
  return CellTable{atom_entries(x, g)};
}

std::vector<OrientedBasePoint> enumerate_basepoints(ChainSolver& solver, int n) {
  const Complex& x = solver.complex();
  std::vector<OrientedBasePoint> level{OrientedBasePoint{}};
  for (int k = 0; k <= n; ++k) {
    std::vector<OrientedBasePoint> next;
    for (const auto& z : level) {
      std::vector<Chain> fillers;
      if (k == 0) {
        for (std::size_t i = 0; i < x.count(0); ++i) fillers.push_back(x.generator(0, i));
      } else {
        fillers = solver.solve(k, z.plus(k - 1) - z.minus(k - 1));
      }
      for (const auto& u : fillers)
        for (const auto& v : fillers) next.push_back(extend(z, u, v));
    }
    level = std::move(next);
  }
  return level;
}

std::vector<CellTable> enumerate_cells(ChainSolver& solver, int n) {
  const Complex& x = solver.complex();
  std::vector<CellTable> out;
  if (n < 0) return out;
  if (n == 0) {
    for (std::size_t i = 0; i < x.count(0); ++i)
      out.push_back(CellTable{{{x.generator(0, i), x.generator(0, i)}}});
    return out;
  }
  for (const auto& z : enumerate_basepoints(solver, n - 1))
    for (const auto& u : solver.solve(n, z.plus(n - 1) - z.minus(n - 1))) out.push_back(extend(z, u, u));
  return out;
}

std::pair<std::size_t, std::size_t> arrow_ends(const Complex& x, std::size_t g) {
  const Chain& lo = x.boundary_minus(1, g);
  const Chain& hi = x.boundary_plus(1, g);
  auto s = lo.support(), t = hi.support();
  if (s.size() != 1 || t.size() != 1 || lo[s[0]] != 1 || hi[t[0]] != 1)
    throw std::invalid_argument("degree-1 generator '" + x.generator_name(1, g) +
                                "' is not an arrow between two objects");
  return {s[0], t[0]};
}

std::vector<std::size_t> atomic_path_decomposition(const Complex& x, const Chain& c,
                                                   std::size_t a, std::size_t b) {
  if (c.degree() != 1 || c.width() != x.count(1) || !c.is_positive())
    throw std::invalid_argument("path decomposition needs a positive 1-chain");
  Chain remaining = c;
  std::vector<std::size_t> path;
  std::size_t here = a;
  while (!remaining.is_zero()) {
    bool moved = false;
    for (std::size_t g : remaining.support()) {
      auto [s, t] = arrow_ends(x, g);
      if (s != here) continue;
      path.push_back(g);
      remaining[g] -= 1;
      here = t;
      moved = true;
      break;
    }
    if (!moved)
      throw NonComposable("no generator of " + x.format(c) + " leaves " + x.generator_name(0, here));
  }
  if (here != b)
    throw NonComposable("path " + x.format(c) + " ends at " + x.generator_name(0, here) +
                        ", not " + x.generator_name(0, b));
  return path;
}

}  // namespace gaunt
