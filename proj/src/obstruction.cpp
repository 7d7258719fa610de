#include "gaunt/obstruction.hpp"

#include <algorithm>
#include <bit>

#include "gaunt/constructions.hpp"

namespace gaunt {

namespace {

// Index of the surjection part: the nondegenerate simplex y and the monotone
// surjection θ with x = y∘θ, found by collapsing degenerate positions.
std::pair<std::size_t, std::vector<int>> eilenberg_zilber(Nerve& nerve, int m, std::size_t k) {
  const auto& set = nerve.simplicial_set();
  std::vector<int> theta(m + 1);
  for (int i = 0; i <= m; ++i) theta[i] = i;
  int dim = m;
  std::size_t current = k;
  // Peel off degeneracies: if current (dimension dim) is s_i of its face d_i,
  // replace it by d_i and record the collapse.
  bool changed = true;
  while (changed && dim > 0) {
    changed = false;
    for (int i = 0; i < dim; ++i) {
      std::size_t face = set.face(dim, current, i);
      if (dim - 1 < set.dimension() && set.degeneracy(dim - 1, face, i) == current) {
        for (int& t : theta)
          if (t > i) --t;
        current = face;
        --dim;
        changed = true;
        break;
      }
    }
  }
  return {current, theta};
}

}  // namespace

SkeletalMap::SkeletalMap(std::shared_ptr<Nerve> source, std::shared_ptr<Nerve> target, int n,
                         std::vector<std::map<std::size_t, SimplexData>> assignment)
    : source_(std::move(source)), target_(std::move(target)), n_(n), assignment_(std::move(assignment)) {
  assignment_.resize(n + 1);
  check();
}

SimplexData SkeletalMap::apply(int m, std::size_t k) {
  if (m > n_) throw std::out_of_range("skeletal map is defined up to dimension " + std::to_string(n_));
  auto [root, theta] = eilenberg_zilber(*source_, m, k);
  const int r = theta.back();
  auto it = assignment_.at(r).find(root);
  if (it == assignment_[r].end())
    throw IncompatibleF("no image for nondegenerate simplex " + source_->describe(r, root));
  return target_->precompose(it->second, theta);
}

void SkeletalMap::check() {
  const auto& sx = source_->simplicial_set();
  const auto& sy = target_->simplicial_set();
  for (int m = 0; m <= n_; ++m) {
    auto [thin, nonthin] = sx.nondegenerate(m);
    std::vector<std::size_t> all = nonthin;
    all.insert(all.end(), thin.begin(), thin.end());
    for (std::size_t k : all) {
      auto it = assignment_[m].find(k);
      if (it == assignment_[m].end())
        throw IncompatibleF("no image for nondegenerate simplex " + source_->describe(m, k));
      auto y = target_->find(m, it->second);
      if (!y)
        throw IncompatibleF("image of " + source_->describe(m, k) + " is not a simplex of the target");
      if (sx.thin(m, k) && !sy.thin(m, *y))
        throw IncompatibleF("thin simplex " + source_->describe(m, k) + " has a non-thin image");
      for (int j = 0; m >= 1 && j <= m; ++j) {
        auto face_image = target_->find(m - 1, apply(m - 1, sx.face(m, k, j)));
        if (!face_image || *face_image != sy.face(m, *y, j))
          throw IncompatibleF("image of " + source_->describe(m, k) + " does not respect face d" +
                              std::to_string(j));
      }
    }
  }
}

SkeletalMap SkeletalMap::from_objects(const Complex& x, const Complex& y,
                                      const std::map<std::string, std::string>& objects, int cap) {
  auto nx = std::make_shared<Nerve>(x, 1, cap);
  auto ny = std::make_shared<Nerve>(y, 2, cap);
  std::vector<std::map<std::size_t, SimplexData>> assignment(1);
  for (std::size_t v = 0; v < x.count(0); ++v) {
    auto it = objects.find(x.generator_name(0, v));
    if (it == objects.end()) throw IncompatibleF("object " + x.generator_name(0, v) + " has no image");
    auto g = y.find(it->second);
    if (!g || g->degree != 0) throw IncompatibleF("'" + it->second + "' is not an object of " + y.name());
    assignment[0][v] = SimplexData{0, ny->pool().intern(y.generator(0, g->index))};
  }
  return SkeletalMap(nx, ny, 0, std::move(assignment));
}

SkeletalMap SkeletalMap::from_map(const ComplexMap& g, int n, int cap) {
  auto diag = validate_map(g);
  if (!diag.ok()) throw IncompatibleF("invalid map: " + diag.summary());
  auto nx = std::make_shared<Nerve>(g.source(), n + 1, cap);
  auto ny = std::make_shared<Nerve>(g.target(), n + 2, cap);
  std::vector<std::map<std::size_t, SimplexData>> assignment(n + 1);
  for (int m = 0; m <= n; ++m)
    for (std::size_t k = 0; k < nx->simplicial_set().count(m); ++k) {
      if (nx->simplicial_set().degenerate(m, k)) continue;
      const auto& s = nx->simplex(m, k);
      SimplexData image(s.size(), 0);
      for (std::size_t mask = 1; mask < s.size(); ++mask)
        image[mask] = ny->pool().intern(g.apply(nx->pool().at(s[mask])));
      assignment[m][k] = std::move(image);
    }
  return SkeletalMap(nx, ny, n, std::move(assignment));
}

namespace {

// Boundary data of an attached (n+1)-simplex α: the chain F(α|σ) for every
// proper face σ, as a chain of the target.
std::vector<Chain> boundary_images(SkeletalMap& f, std::size_t alpha) {
  const int m = f.n() + 1;
  auto& nx = f.source_nerve();
  auto& ny = f.target_nerve();
  const unsigned full = (1u << (m + 1)) - 1;
  std::vector<Chain> out(full + 1);
  // the codimension-one faces determine everything below them
  for (int j = 0; j <= m; ++j) {
    std::size_t face = nx.simplicial_set().face(m, alpha, j);
    auto data = f.apply(m - 1, face);
    // face masks over [m−1] correspond to masks over [m] without vertex j
    for (unsigned tau = 1; tau < data.size(); ++tau) {
      unsigned up = 0;
      for (int v = 0, u = 0; v <= m; ++v) {
        if (v == j) continue;
        if (tau >> u & 1) up |= 1u << v;
        ++u;
      }
      out[up] = ny.pool().at(data[tau]);
    }
  }
  return out;
}

Chain boundary_target(const std::vector<Chain>& images, int m, const Complex& y) {
  const unsigned full = (1u << (m + 1)) - 1;
  Chain d = y.zero(m - 1);
  for (int i = 0; i <= m; ++i) {
    if (i % 2 == 0) d += images[full & ~(1u << i)];
    else d -= images[full & ~(1u << i)];
  }
  return d;
}

}  // namespace

Poset obstruction_poset(SkeletalMap& f, std::vector<ObstructionFactor>* factors) {
  const int m = f.n() + 1;
  auto& nx = f.source_nerve();
  auto& ny = f.target_nerve();
  const Complex& y = ny.complex();
  auto [thin, nonthin] = nx.simplicial_set().nondegenerate(m);
  std::vector<std::pair<std::size_t, bool>> cells;
  for (auto k : nonthin) cells.emplace_back(k, false);
  for (auto k : thin) cells.emplace_back(k, true);
  std::sort(cells.begin(), cells.end());
  std::vector<Poset> posets;
  const Complex top_shape = oriental(m);
  auto atom = atom_entries(top_shape, {m, 0});
  for (auto [alpha, is_thin] : cells) {
    auto images = boundary_images(f, alpha);
    // Z = F∘α applied to the atom table of the top simplex, minus its top entry
    OrientedBasePoint z;
    for (int k = 0; k < m; ++k) {
      auto image_of = [&](const Chain& c) {
        Chain out = y.zero(k);
        for (std::size_t i = 0; i < c.width(); ++i) {
          if (c[i] == 0) continue;
          unsigned mask = 0;
          for (char ch : top_shape.generator_name(k, i)) mask |= 1u << (ch - '0');
          out += c[i] * images[mask];
        }
        return out;
      };
      z.entries.emplace_back(image_of(atom[k].first), image_of(atom[k].second));
    }
    if (z.plus(m - 1) - z.minus(m - 1) != boundary_target(images, m, y))
      throw std::logic_error("atom boundary disagrees with the alternating face sum");
    Poset p = is_thin ? pi_prime_n(ny.solver(), z) : pi_n(ny.solver(), z).poset;
    if (factors) factors->push_back({nx.describe(m, alpha), is_thin, p});
    posets.push_back(std::move(p));
  }
  return poset_product(posets);
}

Poset brute_force_extensions(SkeletalMap& f) {
  const int m = f.n() + 1;
  auto& nx = f.source_nerve();
  auto& ny = f.target_nerve();
  const auto& sx = nx.simplicial_set();
  const auto& sy = ny.simplicial_set();
  auto [thin, nonthin] = sx.nondegenerate(m);
  std::vector<std::size_t> cells = thin;
  cells.insert(cells.end(), nonthin.begin(), nonthin.end());
  std::sort(cells.begin(), cells.end());

  std::vector<std::vector<std::size_t>> fillers;  // per cell, simplices of N(Y)
  for (std::size_t alpha : cells) {
    std::vector<std::optional<std::size_t>> faces;
    for (int j = 0; j <= m; ++j) faces.push_back(ny.find(m - 1, f.apply(m - 1, sx.face(m, alpha, j))));
    std::vector<std::size_t> ok;
    for (std::size_t b = 0; b < sy.count(m); ++b) {
      bool match = true;
      for (int j = 0; j <= m && match; ++j) match = faces[j] && sy.face(m, b, j) == *faces[j];
      if (match && sx.thin(m, alpha) && !sy.thin(m, b)) match = false;
      if (match) ok.push_back(b);
    }
    fillers.push_back(std::move(ok));
  }

  // all tuples, in lexicographic order
  std::vector<std::vector<std::size_t>> tuples{{}};
  for (const auto& choices : fillers) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& t : tuples)
      for (std::size_t b : choices) {
        auto u = t;
        u.push_back(b);
        next.push_back(std::move(u));
      }
    tuples = std::move(next);
  }
  std::vector<std::string> labels;
  for (const auto& t : tuples) {
    std::string l = "(";
    for (std::size_t i = 0; i < t.size(); ++i) l += (i ? "," : "") + cell_label(ny.complex(), ny.top(m, t[i]));
    labels.push_back(l + ")");
  }
  const std::size_t n = tuples.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      bool below = true;
      for (std::size_t i = 0; i < cells.size() && below; ++i)
        below = ny.solver().solvable(m + 1, ny.top(m, tuples[b][i]) - ny.top(m, tuples[a][i]));
      leq[a][b] = below;
    }
  return Poset::from_matrix(std::move(labels), std::move(leq));
}

}  // namespace gaunt
