#pragma once

// Brute-force reference computations, written without the solver, nerve or
// poset machinery of the library.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gaunt/complex.hpp"

namespace oracle {

using gaunt::Chain;
using gaunt::Complex;

// Every vector in [0, cap]^width.
inline void for_each_box_chain(int degree, std::size_t width, int cap, const std::function<void(const Chain&)>& f) {
  Chain c(degree, width);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == width) {
      f(c);
      return;
    }
    for (int k = 0; k <= cap; ++k) {
      c[i] = k;
      rec(i + 1);
    }
    c[i] = 0;
  };
  rec(0);
}

// Positive degree-n chains c with coefficients ≤ cap and ∂c = d.
inline std::set<std::string> positive_solutions(const Complex& x, int n, const Chain& d, int cap) {
  std::set<std::string> out;
  for_each_box_chain(n, x.count(n), cap, [&](const Chain& c) {
    if (n == 0 || x.boundary_of(c) == d) out.insert(x.format(c));
  });
  return out;
}

// Number of maps oriental(m) → X whose generator images have coefficients ≤ cap:
// choose a chain for every vertex subset in order of size, subject to
// ∂(image of S) = Σ (−1)^i image(S minus its i-th vertex) and ε = 1 on vertices.
inline std::size_t oriental_map_count(const Complex& x, int m, int cap) {
  const unsigned full = (1u << (m + 1)) - 1;
  std::vector<unsigned> masks;
  for (unsigned s = 1; s <= full; ++s) masks.push_back(s);
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned a, unsigned b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  std::map<unsigned, Chain> image;
  std::size_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == masks.size()) {
      ++count;
      return;
    }
    const unsigned s = masks[pos];
    const int k = __builtin_popcount(s) - 1;
    if (k == 0) {
      for (std::size_t v = 0; v < x.count(0); ++v) {
        image[s] = x.generator(0, v);
        rec(pos + 1);
      }
      return;
    }
    Chain target = x.zero(k - 1);
    int i = 0;
    for (int v = 0; v <= m; ++v) {
      if (!(s >> v & 1)) continue;
      const Chain& face = image.at(s & ~(1u << v));
      if (i % 2 == 0) target += face;
      else target -= face;
      ++i;
    }
    if (k > x.top_degree()) {
      if (target.is_zero() || target.width() == 0) {
        image[s] = Chain(k, 0);
        rec(pos + 1);
      }
      return;
    }
    for_each_box_chain(k, x.count(k), cap, [&](const Chain& c) {
      if (x.boundary_of(c) == target) {
        image[s] = c;
        rec(pos + 1);
      }
    });
  };
  rec(0);
  return count;
}

// Permutations of 1..n with the inversion-set order, as (one-line labels, leq matrix).
struct PermutationOrder {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq;
};

inline PermutationOrder inversion_order(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  std::vector<std::vector<int>> perms;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto inversions = [&](const std::vector<int>& q) {
    std::set<std::pair<int, int>> inv;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (q[i] > q[j]) inv.emplace(q[j], q[i]);
    return inv;
  };
  PermutationOrder out;
  for (const auto& q : perms) {
    std::string s;
    for (int v : q) s += std::to_string(v);
    out.labels.push_back(s);
  }
  out.leq.assign(perms.size(), std::vector<bool>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      auto ia = inversions(perms[a]), ib = inversions(perms[b]);
      out.leq[a][b] = std::includes(ib.begin(), ib.end(), ia.begin(), ia.end());
    }
  return out;
}

}  // namespace oracle
