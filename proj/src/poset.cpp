#include "gaunt/poset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace gaunt {

namespace {

void close_transitively(std::vector<std::vector<bool>>& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) m[i][i] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (m[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (m[k][j]) m[i][j] = true;
}

}  // namespace

Poset Poset::from_matrix(std::vector<std::string> labels, std::vector<std::vector<bool>> leq) {
  const std::size_t n = labels.size();
  if (leq.size() != n) throw std::invalid_argument("relation matrix has the wrong size");
  for (const auto& row : leq)
    if (row.size() != n) throw std::invalid_argument("relation matrix has the wrong size");
  close_transitively(leq);
  Poset p;
  p.class_of_.assign(n, n);
  std::vector<std::size_t> representative;
  for (std::size_t i = 0; i < n; ++i) {
    if (p.class_of_[i] != n) continue;
    std::size_t c = representative.size();
    representative.push_back(i);
    for (std::size_t j = i; j < n; ++j)
      if (leq[i][j] && leq[j][i]) {
        p.class_of_[j] = c;
        if (j != i) p.condensed_ = true;
      }
  }
  const std::size_t m = representative.size();
  p.leq_.assign(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a) {
    p.labels_.push_back(labels[representative[a]]);
    for (std::size_t b = 0; b < m; ++b) p.leq_[a][b] = leq[representative[a]][representative[b]];
  }
  return p;
}

Poset Poset::from_preorder(std::vector<std::string> labels,
                           const std::vector<std::pair<std::size_t, std::size_t>>& relation) {
  const std::size_t n = labels.size();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (auto [i, j] : relation) {
    if (i >= n || j >= n) throw std::invalid_argument("relation refers to a missing element");
    m[i][j] = true;
  }
  return from_matrix(std::move(labels), std::move(m));
}

std::optional<std::size_t> Poset::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!less(i, j)) continue;
      bool direct = true;
      for (std::size_t k = 0; k < n && direct; ++k)
        if (less(i, k) && less(k, j)) direct = false;
      if (direct) out.emplace_back(i, j);
    }
  return out;
}

std::vector<std::size_t> Poset::minimal() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    bool min = true;
    for (std::size_t j = 0; j < size() && min; ++j) min = !less(j, i);
    if (min) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> Poset::maximal() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    bool max = true;
    for (std::size_t j = 0; j < size() && max; ++j) max = !less(i, j);
    if (max) out.push_back(i);
  }
  return out;
}

bool is_order_isomorphism(const Poset& p, const Poset& q, const std::vector<std::size_t>& phi) {
  if (p.size() != q.size() || phi.size() != p.size()) return false;
  std::vector<bool> hit(q.size(), false);
  for (std::size_t v : phi) {
    if (v >= q.size() || hit[v]) return false;
    hit[v] = true;
  }
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p.leq(i, j) != q.leq(phi[i], phi[j])) return false;
  return true;
}

namespace {

using Signature = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, std::size_t, std::size_t>;

std::vector<Signature> signatures(const Poset& p) {
  // (height below, height above, #down, #up, #lower covers, #upper covers)
  const std::size_t n = p.size();
  std::vector<std::size_t> below(n, 0), above(n, 0), lower_covers(n, 0), upper_covers(n, 0);
  for (auto [i, j] : p.covers()) {
    ++upper_covers[i];
    ++lower_covers[j];
  }
  // longest chains via a linear extension (sort by down-set size)
  std::vector<std::size_t> order(n), down(n, 0), up(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (p.leq(j, i)) ++down[i];
      if (p.leq(i, j)) ++up[i];
    }
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return down[a] < down[b]; });
  for (std::size_t i : order)
    for (std::size_t j = 0; j < n; ++j)
      if (p.less(j, i)) below[i] = std::max(below[i], below[j] + 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    for (std::size_t j = 0; j < n; ++j)
      if (p.less(*it, j)) above[*it] = std::max(above[*it], above[j] + 1);
  std::vector<Signature> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = {below[i], above[i], down[i], up[i], lower_covers[i], upper_covers[i]};
  return out;
}

}  // namespace

IsoResult poset_iso(const Poset& p, const Poset& q) {
  IsoResult result;
  if (p.size() != q.size()) {
    result.mismatch = "size " + std::to_string(p.size()) + " vs " + std::to_string(q.size());
    return result;
  }
  auto cp = p.covers(), cq = q.covers();
  if (cp.size() != cq.size()) {
    result.mismatch = "cover count " + std::to_string(cp.size()) + " vs " + std::to_string(cq.size());
    return result;
  }
  auto sp = signatures(p), sq = signatures(q);
  {
    auto a = sp, b = sq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) {
      result.mismatch = "rank/cover profile differs";
      return result;
    }
  }
  const std::size_t n = p.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return sp[a] < sp[b]; });
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> phi(n, unset);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> search = [&](std::size_t pos) {
    if (pos == n) return true;
    std::size_t i = order[pos];
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || sp[i] != sq[j]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < pos && ok; ++k) {
        std::size_t a = order[k];
        ok = p.leq(i, a) == q.leq(j, phi[a]) && p.leq(a, i) == q.leq(phi[a], j);
      }
      if (!ok) continue;
      phi[i] = j;
      used[j] = true;
      if (search(pos + 1)) return true;
      used[j] = false;
      phi[i] = unset;
    }
    return false;
  };
  if (search(0))
    result.map = phi;
  else
    result.mismatch = "no order isomorphism (exhaustive search)";
  return result;
}

std::string to_dot(const Poset& p, const std::string& name) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::string s = "digraph " + quote(name) + " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.size(); ++i)
    s += "  n" + std::to_string(i) + " [label=" + quote(p.label(i)) + "];\n";
  for (auto [i, j] : p.covers())
    s += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + ";\n";
  return s + "}\n";
}

Poset chain_poset(int n) {
  if (n < 0) return empty_poset();
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (int i = 0; i <= n; ++i) {
    labels.push_back(std::to_string(i));
    if (i) rel.emplace_back(i - 1, i);
  }
  return Poset::from_preorder(std::move(labels), rel);
}

Poset antichain(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return Poset::from_preorder(std::move(labels), {});
}

Poset empty_poset() { return Poset::from_preorder({}, {}); }

Poset boolean_lattice(const std::vector<std::string>& atoms) {
  const std::size_t n = atoms.size();
  if (n > 20) throw std::invalid_argument("boolean lattice too large");
  const std::size_t m = std::size_t{1} << n;
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < m; ++s) {
    std::string l = "{";
    bool first = true;
    for (std::size_t i = 0; i < n; ++i)
      if (s >> i & 1) {
        l += (first ? "" : ",") + atoms[i];
        first = false;
      }
    labels.push_back(l + "}");
  }
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) leq[a][b] = (a & ~b) == 0;
  return Poset::from_matrix(std::move(labels), std::move(leq));
}

Poset boolean_lattice(int n) {
  std::vector<std::string> atoms;
  for (int i = 1; i <= n; ++i) atoms.push_back(std::to_string(i));
  return boolean_lattice(atoms);
}

Poset poset_product(const Poset& p, const Poset& q) {
  std::vector<std::string> labels;
  const std::size_t n = p.size() * q.size();
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) labels.push_back("(" + p.label(i) + "," + q.label(j) + ")");
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      leq[a][b] = p.leq(a / q.size(), b / q.size()) && q.leq(a % q.size(), b % q.size());
  return Poset::from_matrix(std::move(labels), std::move(leq));
}

Poset poset_product(const std::vector<Poset>& factors) {
  // tuples in lexicographic order, labelled "(a,b,c)"
  std::vector<std::vector<std::size_t>> tuples{{}};
  for (const auto& f : factors) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& t : tuples)
      for (std::size_t i = 0; i < f.size(); ++i) {
        next.push_back(t);
        next.back().push_back(i);
      }
    tuples = std::move(next);
  }
  std::vector<std::string> labels;
  for (const auto& t : tuples) {
    std::string l = "(";
    for (std::size_t k = 0; k < t.size(); ++k) l += (k ? "," : "") + factors[k].label(t[k]);
    labels.push_back(l + ")");
  }
  const std::size_t n = tuples.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, true));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < factors.size() && leq[a][b]; ++k)
        leq[a][b] = factors[k].leq(tuples[a][k], tuples[b][k]);
  return Poset::from_matrix(std::move(labels), std::move(leq));
}

namespace {

std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string one_line(const std::vector<int>& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i && p.size() >= 10) s += ' ';
    s += std::to_string(p[i]);
  }
  return s.empty() ? "()" : s;
}

}  // namespace

Poset weak_order(int n) {
  if (n < 0) return empty_poset();
  auto perms = permutations(n);
  const std::size_t m = perms.size();
  // inversion set by values: pair (a,b), a<b, b placed before a
  std::vector<std::vector<bool>> inv(m, std::vector<bool>(n * n, false));
  for (std::size_t k = 0; k < m; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perms[k][i] > perms[k][j]) inv[k][(perms[k][j] - 1) * n + perms[k][i] - 1] = true;
  std::vector<std::string> labels;
  for (const auto& p : perms) labels.push_back(one_line(p));
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      bool sub = true;
      for (std::size_t t = 0; t < inv[a].size() && sub; ++t) sub = !inv[a][t] || inv[b][t];
      leq[a][b] = sub;
    }
  return Poset::from_matrix(std::move(labels), std::move(leq));
}

Poset weak_order_generated(int n, WeakOrderReading reading) {
  if (n < 0) return empty_poset();
  auto perms = permutations(n);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t k = 0; k < perms.size(); ++k) index[perms[k]] = k;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t k = 0; k < perms.size(); ++k) {
    const auto& rho = perms[k];
    for (int i = 0; i + 1 < n; ++i) {
      if (rho[i] >= rho[i + 1]) continue;
      auto sigma = rho;
      if (reading == WeakOrderReading::AdjacentPositions) {
        std::swap(sigma[i], sigma[i + 1]);
      } else {
        const int v = rho[i];
        for (int& x : sigma) x = x == v ? v + 1 : x == v + 1 ? v : x;
      }
      rel.emplace_back(k, index.at(sigma));
    }
  }
  std::vector<std::string> labels;
  for (const auto& p : perms) labels.push_back(one_line(p));
  return Poset::from_preorder(std::move(labels), rel);
}

}  // namespace gaunt
