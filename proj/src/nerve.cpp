#include "gaunt/nerve.hpp"

#include "gaunt/homotopy.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace gaunt {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::size_t> StratifiedSimplicialSet::counts() const {
  std::vector<std::size_t> out;
  for (int m = 0; m <= dimension(); ++m) out.push_back(count(m));
  return out;
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> StratifiedSimplicialSet::nondegenerate(
    int n) const {
  std::pair<std::vector<std::size_t>, std::vector<std::size_t>> out;
  for (std::size_t k = 0; k < count(n); ++k) {
    if (degenerate(n, k)) continue;
    (thin(n, k) ? out.first : out.second).push_back(k);
  }
  return out;
}

std::vector<std::string> StratifiedSimplicialSet::check() const {
  std::vector<std::string> problems;
  auto where = [](int m, std::size_t k) {
    return "simplex " + std::to_string(k) + " of dimension " + std::to_string(m);
  };
  for (int m = 0; m <= dimension(); ++m) {
    for (std::size_t k = 0; k < count(m); ++k) {
      if (degenerate(m, k) && !thin(m, k)) problems.push_back(where(m, k) + " is degenerate but not thin");
      // d_i d_j = d_{j−1} d_i for i < j
      if (m >= 2)
        for (int j = 1; j <= m; ++j)
          for (int i = 0; i < j; ++i)
            if (face(m - 1, face(m, k, j), i) != face(m - 1, face(m, k, i), j - 1))
              problems.push_back(where(m, k) + ": d" + std::to_string(i) + "d" + std::to_string(j));
      if (m < dimension()) {
        for (int j = 0; j <= m; ++j) {
          std::size_t s = degeneracy(m, k, j);
          if (!thin(m + 1, s)) problems.push_back(where(m, k) + ": degeneracy not thin");
          // d_j s_j = d_{j+1} s_j = id
          if (face(m + 1, s, j) != k || face(m + 1, s, j + 1) != k)
            problems.push_back(where(m, k) + ": d s_" + std::to_string(j) + " ≠ id");
          if (m + 1 < dimension())
            for (int i = 0; i <= j; ++i)
              if (degeneracy(m + 1, s, i) != degeneracy(m + 1, degeneracy(m, k, i), j + 1))
                problems.push_back(where(m, k) + ": s" + std::to_string(i) + "s" + std::to_string(j));
        }
      }
    }
  }
  return problems;
}

StratifiedSimplicialSet skeleton(const StratifiedSimplicialSet& s, int n) {
  StratifiedSimplicialSet out;
  const int d = s.dimension();
  std::vector<std::vector<std::size_t>> renumber(d + 1);
  out.thin_.resize(d + 1);
  out.root_.resize(d + 1);
  out.origin_.resize(d + 1);
  out.faces_.resize(d + 1);
  out.degeneracies_.resize(d + 1);
  constexpr std::size_t gone = static_cast<std::size_t>(-1);
  for (int m = 0; m <= d; ++m) {
    renumber[m].assign(s.count(m), gone);
    for (std::size_t k = 0; k < s.count(m); ++k) {
      if (s.root_dimension(m, k) > n) continue;
      renumber[m][k] = out.thin_[m].size();
      out.thin_[m].push_back(s.thin(m, k));
      out.root_[m].push_back(s.root_dimension(m, k));
      out.origin_[m].push_back(s.origin(m, k));
    }
  }
  for (int m = 0; m <= d; ++m)
    for (std::size_t k = 0; k < s.count(m); ++k) {
      if (renumber[m][k] == gone) continue;
      std::vector<std::size_t> faces, degens;
      for (int j = 0; m >= 1 && j <= m; ++j) faces.push_back(renumber[m - 1][s.face(m, k, j)]);
      for (int j = 0; m < d && j <= m; ++j) degens.push_back(renumber[m + 1][s.degeneracy(m, k, j)]);
      out.faces_[m].push_back(std::move(faces));
      out.degeneracies_[m].push_back(std::move(degens));
    }
  return out;
}

std::uint32_t ChainPool::intern(const Chain& c) {
  auto it = ids_.find(c);
  if (it != ids_.end()) return it->second;
  auto id = static_cast<std::uint32_t>(chains_.size());
  chains_.push_back(c);
  ids_.emplace(c, id);
  return id;
}

std::uint32_t ChainPool::zero(int degree) { return intern(x_->zero(degree)); }

namespace {

std::string key_of(const SimplexData& s) {
  return std::string(reinterpret_cast<const char*>(s.data()), s.size() * sizeof(std::uint32_t));
}

// Vertices of a bitmask in increasing order.
std::vector<int> vertices(unsigned mask) {
  std::vector<int> v;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) v.push_back(i);
  return v;
}

}  // namespace

Nerve::Nerve(const Complex& x, int dimension, int cap)
    : complex_(std::make_shared<const Complex>(x)),
      solver_(std::make_shared<ChainSolver>(*complex_, cap)),
      pool_(std::make_shared<ChainPool>(*complex_)) {
  if (dimension < 0) throw std::invalid_argument("nerve dimension must be ≥ 0");
  if (dimension > 8) throw std::invalid_argument("nerve dimension above 8 is not supported");
  enumerate(dimension);
}

std::optional<std::size_t> Nerve::find(int m, const SimplexData& s) const {
  if (m < 0 || m >= static_cast<int>(index_.size())) return std::nullopt;
  auto it = index_[m].find(key_of(s));
  if (it == index_[m].end()) return std::nullopt;
  return it->second;
}

const Chain& Nerve::top(int m, std::size_t k) const {
  return pool_->at(simplices_[m][k][(1u << (m + 1)) - 1]);
}

std::string Nerve::describe(int m, std::size_t k) const {
  const auto& s = simplices_[m][k];
  std::string out = "[";
  for (unsigned mask = 1; mask < s.size(); ++mask) {
    if (mask > 1) out += "; ";
    std::string name;
    for (int v : vertices(mask)) name += std::to_string(v);
    const Chain& c = pool_->at(s[mask]);
    out += name + "↦" + (c.degree() == 0 ? complex().format(c) : cell_label(complex(), c));
  }
  return out + "]";
}

SimplexData Nerve::precompose(const SimplexData& s, const std::vector<int>& theta) {
  const int m2 = static_cast<int>(theta.size()) - 1;
  SimplexData out(std::size_t{1} << (m2 + 1), 0);
  for (unsigned tau = 1; tau < out.size(); ++tau) {
    unsigned image = 0;
    for (int v : vertices(tau)) image |= 1u << theta[v];
    if (std::popcount(image) == std::popcount(tau))
      out[tau] = s[image];
    else
      out[tau] = pool_->zero(std::popcount(tau) - 1);
  }
  return out;
}

void Nerve::enumerate(int dimension) {
  const Complex& x = complex();
  simplices_.resize(dimension + 1);
  index_.resize(dimension + 1);
  for (std::size_t v = 0; v < x.count(0); ++v) {
    SimplexData s{0, pool_->intern(x.generator(0, v))};
    index_[0].emplace(key_of(s), simplices_[0].size());
    simplices_[0].push_back(std::move(s));
  }
  for (int m = 1; m <= dimension; ++m)
    for (std::size_t base = 0; base < simplices_[m - 1].size(); ++base) extend(m, base);

  // faces, degeneracies, thinness, root dimension
  set_.faces_.resize(dimension + 1);
  set_.degeneracies_.resize(dimension + 1);
  set_.thin_.resize(dimension + 1);
  set_.root_.resize(dimension + 1);
  set_.origin_.resize(dimension + 1);
  for (int m = 0; m <= dimension; ++m) {
    for (std::size_t k = 0; k < simplices_[m].size(); ++k) {
      const auto& s = simplices_[m][k];
      std::vector<std::size_t> faces, degens;
      for (int j = 0; m >= 1 && j <= m; ++j) {
        std::vector<int> delta;
        for (int i = 0; i <= m; ++i)
          if (i != j) delta.push_back(i);
        auto f = find(m - 1, precompose(s, delta));
        if (!f) throw std::logic_error("face of a nerve simplex is missing");
        faces.push_back(*f);
      }
      for (int j = 0; m < dimension && j <= m; ++j) {
        std::vector<int> sigma;
        for (int i = 0; i <= m + 1; ++i) sigma.push_back(i <= j ? i : i - 1);
        auto d = find(m + 1, precompose(s, sigma));
        if (!d) throw std::logic_error("degeneracy of a nerve simplex is missing");
        degens.push_back(*d);
      }
      int degenerate_positions = 0;
      for (int i = 0; i < m; ++i) {
        std::vector<int> theta;
        for (int v = 0; v <= m; ++v) theta.push_back(v == i ? i + 1 : v);
        if (precompose(s, theta) == s) ++degenerate_positions;
      }
      set_.faces_[m].push_back(std::move(faces));
      set_.degeneracies_[m].push_back(std::move(degens));
      set_.thin_[m].push_back(m >= 1 && top(m, k).is_zero());
      set_.root_[m].push_back(m - degenerate_positions);
      set_.origin_[m].push_back(k);
    }
  }
}

void Nerve::extend(int m, std::size_t base) {
  const Complex& x = complex();
  const unsigned full = (1u << (m + 1)) - 1;
  const unsigned newest = 1u << m;
  std::vector<unsigned> masks;
  for (unsigned mask = newest; mask <= full; ++mask)
    if (mask & newest) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
  SimplexData s(full + 1, 0);
  const auto& b = simplices_[m - 1][base];
  for (unsigned mask = 1; mask < newest; ++mask) s[mask] = b[mask];

  std::function<void(std::size_t)> assign = [&](std::size_t pos) {
    if (pos == masks.size()) {
      index_[m].emplace(key_of(s), simplices_[m].size());
      simplices_[m].push_back(s);
      return;
    }
    const unsigned mask = masks[pos];
    const int k = std::popcount(mask) - 1;
    if (k == 0) {
      for (std::size_t v = 0; v < x.count(0); ++v) {
        s[mask] = pool_->intern(x.generator(0, v));
        assign(pos + 1);
      }
      return;
    }
    Chain d = x.zero(k - 1);
    auto vs = vertices(mask);
    for (int i = 0; i <= k; ++i) {
      const Chain& face = pool_->at(s[mask & ~(1u << vs[i])]);
      if (i % 2 == 0)
        d += face;
      else
        d -= face;
    }
    for (const auto& c : solver_->solve(k, d)) {
      s[mask] = pool_->intern(c);
      assign(pos + 1);
    }
  };
  assign(0);
}

StratifiedSimplicialSet stratified_nerve(const Complex& x, int dimension, int cap) {
  return Nerve(x, dimension, cap).simplicial_set();
}

bool PushoutReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.ok(); });
}

PushoutReport verify_skeletal_pushout(const StratifiedSimplicialSet& s, int n) {
  PushoutReport report;
  report.n = n;
  auto [thin, nonthin] = s.nondegenerate(n);
  report.thin_cells = thin.size();
  report.nonthin_cells = nonthin.size();
  auto upper = skeleton(s, n);
  auto lower = skeleton(s, n - 1);
  for (int m = 0; m <= s.dimension(); ++m) {
    PushoutRow row;
    row.m = m;
    row.new_total = upper.count(m) - lower.count(m);
    auto thin_count = [m](const StratifiedSimplicialSet& t) {
      std::size_t c = 0;
      for (std::size_t k = 0; k < t.count(m); ++k) c += t.thin(m, k);
      return c;
    };
    row.new_thin = thin_count(upper) - thin_count(lower);
    // Each attached n-simplex contributes one m-simplex per surjection [m] ↠ [n];
    // all of them are thin except the simplex itself when it is not thin.
    const std::uint64_t surjections = binomial(m, n);
    row.expected_total = (thin.size() + nonthin.size()) * surjections;
    row.expected_thin = thin.size() * surjections +
                        nonthin.size() * (surjections - (m == n ? 1 : 0));
    report.rows.push_back(row);
  }
  return report;
}

std::pair<std::size_t, std::size_t> wedge_cofiber_profile(const StratifiedSimplicialSet& s, int n) {
  auto [thin, nonthin] = s.nondegenerate(n);
  return {nonthin.size(), thin.size()};
}

}  // namespace gaunt
