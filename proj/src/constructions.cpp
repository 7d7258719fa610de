#include "gaunt/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>


namespace gaunt {

namespace {

std::vector<ComplexBuilder::Term> terms_of(const Complex& x, const Chain& c,
                                           const std::string& prefix = "",
                                           const Integer& sign = 1) {
  std::vector<ComplexBuilder::Term> out;
  for (std::size_t j = 0; j < c.width(); ++j)
    if (c[j] != 0) out.emplace_back(sign * c[j], prefix + x.generator_name(c.degree(), j));
  return out;
}

// Copies x with every boundary in degree d multiplied by sign(d).
template <typename SignFn>
Complex resigned(const Complex& x, std::string name, SignFn sign) {
  ComplexBuilder b(std::move(name));
  for (int d = 0; d <= x.top_degree(); ++d)
    for (std::size_t i = 0; i < x.count(d); ++i)
      b.add(d, x.generator_name(d, i), d == 0 ? std::vector<ComplexBuilder::Term>{}
                                              : terms_of(x, x.boundary(d, i), "", sign(d)));
  return b.build();
}

std::string strip_wrapper(const std::string& name, const std::string& wrapper) {
  const std::string open = wrapper + "(";
  if (name.size() > open.size() + 1 && name.compare(0, open.size(), open) == 0 &&
      name.back() == ')')
    return name.substr(open.size(), name.size() - open.size() - 1);
  return {};
}

std::optional<int> cube_dimension(const std::string& name) {
  if (name == "oriental(1)") return 1;
  if (name == "oriental(0)") return 0;
  auto inner = strip_wrapper(name, "cube");
  if (inner.empty() || !std::all_of(inner.begin(), inner.end(), ::isdigit)) return std::nullopt;
  return std::stoi(inner);
}

}  // namespace

std::string oriental_simplex_name(const std::vector<int>& vertices, int n) {
  std::string s;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i && n >= 10) s += ',';
    s += std::to_string(vertices[i]);
  }
  return s;
}

Complex empty_complex() { return ComplexBuilder("empty").build(); }

Complex disk(int n) {
  if (n < 0) throw std::invalid_argument("disk dimension must be ≥ 0");
  ComplexBuilder b("disk(" + std::to_string(n) + ")");
  if (n == 0) return b.add(0, "d0").build();
  for (int k = 0; k < n; ++k) {
    auto s = "s" + std::to_string(k), t = "t" + std::to_string(k);
    if (k == 0) {
      b.add(0, s).add(0, t);
    } else {
      auto ps = "s" + std::to_string(k - 1), pt = "t" + std::to_string(k - 1);
      b.add(k, s, {{1, pt}, {-1, ps}}).add(k, t, {{1, pt}, {-1, ps}});
    }
  }
  b.add(n, "d" + std::to_string(n),
        {{1, "t" + std::to_string(n - 1)}, {-1, "s" + std::to_string(n - 1)}});
  return b.endpoints("s0", "t0").build();
}

Complex boundary_disk(int n) {
  if (n < 0) throw std::invalid_argument("disk dimension must be ≥ 0");
  if (n == 0) return ComplexBuilder("boundary_disk(0)").build();
  return core(disk(n), n - 1).renamed("boundary_disk(" + std::to_string(n) + ")");
}

Complex oriental(int n) {
  if (n < 0) throw std::invalid_argument("oriental dimension must be ≥ 0");
  ComplexBuilder b("oriental(" + std::to_string(n) + ")");
  for (int k = 0; k <= n; ++k) {
    // subsets of size k+1 of {0..n} in lexicographic order
    std::vector<int> v(k + 1);
    std::iota(v.begin(), v.end(), 0);
    while (true) {
      std::vector<ComplexBuilder::Term> boundary;
      if (k > 0) {
        for (int i = 0; i <= k; ++i) {
          std::vector<int> face = v;
          face.erase(face.begin() + i);
          boundary.emplace_back(i % 2 == 0 ? 1 : -1, oriental_simplex_name(face, n));
        }
      }
      b.add(k, oriental_simplex_name(v, n), std::move(boundary));
      int i = k;
      while (i >= 0 && v[i] == n - k + i) --i;
      if (i < 0) break;
      ++v[i];
      for (int j = i + 1; j <= k; ++j) v[j] = v[j - 1] + 1;
    }
  }
  return b.build();
}

Complex cube(int n) {
  if (n < 0) throw std::invalid_argument("cube dimension must be ≥ 0");
  if (n == 0) return oriental(0).renamed("cube(0)");
  Complex c = oriental(1).renamed("cube(1)");
  const Complex arrow = c;
  for (int k = 2; k <= n; ++k) c = gray_tensor(c, arrow);
  return c;
}

Complex gray_tensor(const Complex& x, const Complex& y) {
  std::string name;
  auto dx = cube_dimension(x.name()), dy = cube_dimension(y.name());
  if (dx && dy)
    name = "cube(" + std::to_string(*dx + *dy) + ")";
  else
    name = "tensor(" + x.name() + "," + y.name() + ")";
  ComplexBuilder b(name);
  auto pair_name = [](const std::string& a, const std::string& c) { return a + "." + c; };
  // generators are added in name order within each degree, so the result
  // does not depend on how an iterated tensor is bracketed
  for (int n = 0; n <= x.top_degree() + y.top_degree(); ++n) {
    std::vector<std::pair<std::string, std::vector<ComplexBuilder::Term>>> level;
    for (int p = 0; p <= n; ++p) {
      const int q = n - p;
      for (std::size_t i = 0; i < x.count(p); ++i) {
        for (std::size_t j = 0; j < y.count(q); ++j) {
          std::vector<ComplexBuilder::Term> boundary;
          const std::string& xn = x.generator_name(p, i);
          const std::string& yn = y.generator_name(q, j);
          if (p > 0) {
            const Chain& bx = x.boundary(p, i);
            for (std::size_t k = 0; k < bx.width(); ++k)
              if (bx[k] != 0) boundary.emplace_back(bx[k], pair_name(x.generator_name(p - 1, k), yn));
          }
          if (q > 0) {
            const Chain& by = y.boundary(q, j);
            const Integer sign = p % 2 == 0 ? 1 : -1;
            for (std::size_t k = 0; k < by.width(); ++k)
              if (by[k] != 0)
                boundary.emplace_back(sign * by[k], pair_name(xn, y.generator_name(q - 1, k)));
          }
          level.emplace_back(pair_name(xn, yn), std::move(boundary));
        }
      }
    }
    std::sort(level.begin(), level.end(), [](const auto& a, const auto& c) { return a.first < c.first; });
    for (auto& [gen, boundary] : level) b.add(n, gen, std::move(boundary));
  }
  return b.build();
}

Complex suspension(const Complex& x) {
  ComplexBuilder b("S(" + x.name() + ")");
  b.add(0, "bot").add(0, "top");
  for (int d = 0; d <= x.top_degree(); ++d) {
    for (std::size_t i = 0; i < x.count(d); ++i) {
      if (d == 0)
        b.add(1, "S" + x.generator_name(d, i), {{1, "top"}, {-1, "bot"}});
      else
        b.add(d + 1, "S" + x.generator_name(d, i), terms_of(x, x.boundary(d, i), "S"));
    }
  }
  return b.endpoints("bot", "top").build();
}

Complex wedge(const std::vector<Complex>& factors) {
  if (factors.empty()) throw std::invalid_argument("wedge needs at least one factor");
  std::string name = "wedge(";
  for (std::size_t l = 0; l < factors.size(); ++l) {
    if (!factors[l].endpoints())
      throw std::invalid_argument("wedge factor '" + factors[l].name() + "' has no endpoints");
    name += (l ? "," : "") + factors[l].name();
  }
  ComplexBuilder b(name + ")");
  for (std::size_t v = 0; v <= factors.size(); ++v) b.add(0, "v" + std::to_string(v));
  for (std::size_t l = 0; l < factors.size(); ++l) {
    const Complex& f = factors[l];
    const auto ends = *f.endpoints();
    const std::string prefix = std::to_string(l + 1) + ":";
    auto object_name = [&](std::size_t i) {
      if (i == ends.bottom) return "v" + std::to_string(l);
      if (i == ends.top) return "v" + std::to_string(l + 1);
      return prefix + f.generator_name(0, i);
    };
    for (std::size_t i = 0; i < f.count(0); ++i)
      if (i != ends.bottom && i != ends.top) b.add(0, object_name(i));
    for (int d = 1; d <= f.top_degree(); ++d) {
      for (std::size_t i = 0; i < f.count(d); ++i) {
        std::vector<ComplexBuilder::Term> boundary;
        const Chain& c = f.boundary(d, i);
        for (std::size_t j = 0; j < c.width(); ++j) {
          if (c[j] == 0) continue;
          boundary.emplace_back(c[j], d == 1 ? object_name(j) : prefix + f.generator_name(d - 1, j));
        }
        b.add(d, prefix + f.generator_name(d, i), std::move(boundary));
      }
    }
  }
  return b.endpoints("v0", "v" + std::to_string(factors.size())).build();
}

Complex core(const Complex& x, int n) {
  if (n < 0) throw std::invalid_argument("core degree must be ≥ 0");
  if (n >= x.top_degree()) return x;
  ComplexBuilder b("core(" + x.name() + "," + std::to_string(n) + ")");
  for (int d = 0; d <= n; ++d)
    for (std::size_t i = 0; i < x.count(d); ++i)
      b.add(d, x.generator_name(d, i),
            d == 0 ? std::vector<ComplexBuilder::Term>{} : terms_of(x, x.boundary(d, i)));
  if (x.endpoints())
    b.endpoints(x.generator_name(0, x.endpoints()->bottom), x.generator_name(0, x.endpoints()->top));
  return b.build();
}

Complex dual_op(const Complex& x) {
  auto inner = strip_wrapper(x.name(), "op");
  Complex out = resigned(x, inner.empty() ? "op(" + x.name() + ")" : inner,
                         [](int d) { return Integer(d % 2 == 0 ? 1 : -1); });
  if (x.endpoints()) {
    // odd cells reverse, so the distinguished objects swap
    ComplexBuilder b(out.name());
    for (int d = 0; d <= out.top_degree(); ++d)
      for (std::size_t i = 0; i < out.count(d); ++i)
        b.add(d, out.generator_name(d, i),
              d == 0 ? std::vector<ComplexBuilder::Term>{} : terms_of(out, out.boundary(d, i)));
    b.endpoints(x.generator_name(0, x.endpoints()->top), x.generator_name(0, x.endpoints()->bottom));
    return b.build();
  }
  return out;
}

Complex dual_co(const Complex& x) {
  auto inner = strip_wrapper(x.name(), "co");
  Complex out = resigned(x, inner.empty() ? "co(" + x.name() + ")" : inner,
                         [](int d) { return Integer(d % 2 == 0 ? -1 : 1); });
  if (x.endpoints()) {
    ComplexBuilder b(out.name());
    for (int d = 0; d <= out.top_degree(); ++d)
      for (std::size_t i = 0; i < out.count(d); ++i)
        b.add(d, out.generator_name(d, i),
              d == 0 ? std::vector<ComplexBuilder::Term>{} : terms_of(out, out.boundary(d, i)));
    b.endpoints(x.generator_name(0, x.endpoints()->bottom), x.generator_name(0, x.endpoints()->top));
    return b.build();
  }
  return out;
}

ComplexMap oriental_map(const ComplexPtr& source, const ComplexPtr& target,
                        const std::vector<int>& vertex_map) {
  const int k = source->top_degree();
  const int m = target->top_degree();
  if (static_cast<int>(vertex_map.size()) != k + 1)
    throw std::invalid_argument("vertex map has the wrong length");
  for (std::size_t i = 0; i < vertex_map.size(); ++i) {
    if (vertex_map[i] < 0 || vertex_map[i] > m || (i && vertex_map[i] < vertex_map[i - 1]))
      throw std::invalid_argument("vertex map is not a monotone map into [" + std::to_string(m) + "]");
  }
  std::vector<std::vector<Chain>> images(k + 1);
  for (int d = 0; d <= k; ++d) {
    for (std::size_t i = 0; i < source->count(d); ++i) {
      // recover the vertex list from the generator name
      const std::string& nm = source->generator_name(d, i);
      std::vector<int> verts;
      if (k >= 10) {
        std::size_t pos = 0;
        while (pos <= nm.size()) {
          auto comma = nm.find(',', pos);
          if (comma == std::string::npos) comma = nm.size();
          verts.push_back(std::stoi(nm.substr(pos, comma - pos)));
          pos = comma + 1;
        }
      } else {
        for (char ch : nm) verts.push_back(ch - '0');
      }
      std::vector<int> img;
      for (int v : verts) img.push_back(vertex_map[v]);
      bool injective = std::adjacent_find(img.begin(), img.end()) == img.end();
      if (injective)
        images[d].push_back(target->generator(oriental_simplex_name(img, m)));
      else
        images[d].push_back(target->zero(d));
    }
  }
  return ComplexMap(source, target, std::move(images));
}

// --- structural isomorphism -------------------------------------------------

namespace {

struct Incidence {
  std::vector<GeneratorRef> refs;
  std::vector<std::size_t> offset;
  // (neighbour, coefficient, direction) ; direction 0 = in my boundary, 1 = I am in theirs
  std::vector<std::vector<std::tuple<std::size_t, Integer, int>>> adj;

  explicit Incidence(const Complex& x) {
    for (int d = 0; d <= x.top_degree(); ++d) {
      offset.push_back(refs.size());
      for (std::size_t i = 0; i < x.count(d); ++i) refs.push_back({d, i});
    }
    adj.resize(refs.size());
    for (int d = 1; d <= x.top_degree(); ++d) {
      for (std::size_t i = 0; i < x.count(d); ++i) {
        const Chain& b = x.boundary(d, i);
        std::size_t me = offset[d] + i;
        for (std::size_t j = 0; j < b.width(); ++j) {
          if (b[j] == 0) continue;
          std::size_t other = offset[d - 1] + j;
          adj[me].emplace_back(other, b[j], 0);
          adj[other].emplace_back(me, b[j], 1);
        }
      }
    }
  }
};

// Colour refinement run jointly on both complexes so colours are comparable.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine(const Incidence& a,
                                                                     const Incidence& b) {
  std::vector<std::size_t> ca(a.refs.size()), cb(b.refs.size());
  for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = a.refs[i].degree;
  for (std::size_t i = 0; i < cb.size(); ++i) cb[i] = b.refs[i].degree;
  std::size_t classes = 0;
  while (true) {
    std::map<std::pair<std::size_t, std::vector<std::tuple<std::size_t, std::string, int>>>, std::size_t>
        dict;
    auto signature = [](const Incidence& inc, const std::vector<std::size_t>& col, std::size_t v) {
      std::vector<std::tuple<std::size_t, std::string, int>> sig;
      for (const auto& [w, k, dir] : inc.adj[v]) sig.emplace_back(col[w], k.str(), dir);
      std::sort(sig.begin(), sig.end());
      return std::make_pair(col[v], sig);
    };
    std::vector<std::size_t> na(ca.size()), nb(cb.size());
    for (std::size_t v = 0; v < ca.size(); ++v)
      na[v] = dict.emplace(signature(a, ca, v), dict.size()).first->second;
    for (std::size_t v = 0; v < cb.size(); ++v)
      nb[v] = dict.emplace(signature(b, cb, v), dict.size()).first->second;
    ca = std::move(na);
    cb = std::move(nb);
    if (dict.size() == classes) break;
    classes = dict.size();
  }
  return {ca, cb};
}

}  // namespace

std::optional<std::vector<std::vector<std::size_t>>> find_isomorphism(const Complex& x,
                                                                      const Complex& y) {
  if (x.counts() != y.counts()) return std::nullopt;
  auto to_result = [&](const Incidence& ix, const std::vector<std::size_t>& phi) {
    std::vector<std::vector<std::size_t>> out(x.top_degree() + 1);
    for (int d = 0; d <= x.top_degree(); ++d)
      for (std::size_t i = 0; i < x.count(d); ++i) {
        std::size_t img = phi[ix.offset[d] + i];
        out[d].push_back(img - ix.offset[d]);
      }
    return out;
  };
  Incidence ix(x), iy(y);

  // Fast path: identical generator names.
  {
    bool names_match = true;
    std::vector<std::size_t> phi(ix.refs.size());
    for (std::size_t v = 0; v < ix.refs.size() && names_match; ++v) {
      auto g = y.find(x.generator_name(ix.refs[v]));
      if (!g || g->degree != ix.refs[v].degree) names_match = false;
      else phi[v] = iy.offset[g->degree] + g->index;
    }
    if (names_match) {
      bool ok = true;
      for (int d = 1; d <= x.top_degree() && ok; ++d)
        for (std::size_t i = 0; i < x.count(d) && ok; ++i) {
          const Chain& bx = x.boundary(d, i);
          const Chain& by = y.boundary(d, phi[ix.offset[d] + i] - iy.offset[d]);
          for (std::size_t j = 0; j < bx.width() && ok; ++j)
            ok = bx[j] == by[phi[ix.offset[d - 1] + j] - iy.offset[d - 1]];
        }
      if (ok) return to_result(ix, phi);
    }
  }

  auto [cx, cy] = refine(ix, iy);
  {
    auto hx = cx, hy = cy;
    std::sort(hx.begin(), hx.end());
    std::sort(hy.begin(), hy.end());
    if (hx != hy) return std::nullopt;
  }
  const std::size_t n = ix.refs.size();
  std::map<std::size_t, std::vector<std::size_t>> by_colour;
  for (std::size_t v = 0; v < n; ++v) by_colour[cy[v]].push_back(v);

  // Greedy static order: most already-placed neighbours first, then small classes.
  std::vector<std::size_t> order;
  std::vector<bool> placed(n, false);
  std::vector<std::size_t> placed_neighbours(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best == n) { best = v; continue; }
      auto key = [&](std::size_t u) {
        return std::make_pair(-static_cast<long>(placed_neighbours[u]),
                              by_colour[cx[u]].size());
      };
      if (key(v) < key(best)) best = v;
    }
    placed[best] = true;
    order.push_back(best);
    for (const auto& [w, k, dir] : ix.adj[best]) ++placed_neighbours[w];
  }

  constexpr std::size_t unset = SIZE_MAX;
  std::vector<std::size_t> phi(n, unset), inverse(n, unset);
  auto coefficient = [](const Incidence& inc, std::size_t v, std::size_t w, int dir) -> Integer {
    for (const auto& [u, k, d] : inc.adj[v])
      if (u == w && d == dir) return k;
    return 0;
  };
  auto consistent = [&](std::size_t v, std::size_t h) {
    for (const auto& [w, k, dir] : ix.adj[v])
      if (phi[w] != unset && coefficient(iy, h, phi[w], dir) != k) return false;
    for (const auto& [w, k, dir] : iy.adj[h])
      if (inverse[w] != unset && coefficient(ix, v, inverse[w], dir) != k) return false;
    return true;
  };
  std::size_t budget = 2'000'000;
  std::function<bool(std::size_t)> search = [&](std::size_t pos) -> bool {
    if (pos == n) return true;
    if (budget-- == 0) throw std::runtime_error("isomorphism search exceeded its budget");
    std::size_t v = order[pos];
    for (std::size_t h : by_colour[cx[v]]) {
      if (inverse[h] != unset || !consistent(v, h)) continue;
      phi[v] = h;
      inverse[h] = v;
      if (search(pos + 1)) return true;
      phi[v] = unset;
      inverse[h] = unset;
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  return to_result(ix, phi);
}

bool isomorphic(const Complex& x, const Complex& y) { return find_isomorphism(x, y).has_value(); }

}  // namespace gaunt
