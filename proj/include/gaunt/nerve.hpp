#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "gaunt/cells.hpp"

namespace gaunt {

/// A dimension-bounded simplicial set with thin marks, given by face and
/// degeneracy tables. Simplices of dimension m are indexed 0..count(m)−1.
class StratifiedSimplicialSet {
 public:
  int dimension() const { return static_cast<int>(thin_.size()) - 1; }
  std::size_t count(int m) const { return m < 0 || m > dimension() ? 0 : thin_[m].size(); }
  std::vector<std::size_t> counts() const;

  /// d_j of simplex k in dimension m ≥ 1.
  std::size_t face(int m, std::size_t k, int j) const { return faces_[m][k][j]; }
  /// s_j of simplex k in dimension m < dimension().
  std::size_t degeneracy(int m, std::size_t k, int j) const { return degeneracies_[m][k][j]; }
  bool thin(int m, std::size_t k) const { return thin_[m][k]; }
  /// Least ℓ such that the simplex factors through Δ^ℓ.
  int root_dimension(int m, std::size_t k) const { return root_[m][k]; }
  bool degenerate(int m, std::size_t k) const { return root_[m][k] < m; }

  /// (thin, non-thin) nondegenerate simplices of dimension n.
  std::pair<std::vector<std::size_t>, std::vector<std::size_t>> nondegenerate(int n) const;

  /// Simplicial identities, degenerate ⇒ thin; empty when all hold.
  std::vector<std::string> check() const;

  /// Original index of each simplex, after restriction (identity otherwise).
  std::size_t origin(int m, std::size_t k) const { return origin_[m][k]; }

 private:
  friend class Nerve;
  friend StratifiedSimplicialSet skeleton(const StratifiedSimplicialSet& s, int n);

  std::vector<std::vector<std::vector<std::size_t>>> faces_;
  std::vector<std::vector<std::vector<std::size_t>>> degeneracies_;
  std::vector<std::vector<bool>> thin_;
  std::vector<std::vector<int>> root_;
  std::vector<std::vector<std::size_t>> origin_;
};

/// Simplices of root dimension ≤ n, with thin marks restricted.
StratifiedSimplicialSet skeleton(const StratifiedSimplicialSet& s, int n);

/// A simplex of the nerve: chain ids indexed by nonempty vertex subsets,
/// as bitmasks over 0..m. Entry 0 is unused.
using SimplexData = std::vector<std::uint32_t>;

/// Interns chains of one complex so simplices compare by id.
class ChainPool {
 public:
  explicit ChainPool(const Complex& x) : x_(&x) {}
  std::uint32_t intern(const Chain& c);
  const Chain& at(std::uint32_t id) const { return chains_.at(id); }
  std::uint32_t zero(int degree);

 private:
  const Complex* x_;
  std::vector<Chain> chains_;
  std::unordered_map<Chain, std::uint32_t, ChainHash> ids_;
};

/// The stratified nerve of a Steiner complex, truncated at dimension D: the
/// m-simplices are maps oriental(m) → X with coefficients ≤ cap, and a
/// simplex is thin when m ≥ 1 and its top chain is zero. Keeps its own copy of X.
class Nerve {
 public:
  Nerve(const Complex& x, int dimension, int cap = 1);

  const Complex& complex() const { return solver_->complex(); }
  int cap() const { return solver_->cap(); }
  ChainSolver& solver() { return *solver_; }
  ChainPool& pool() { return *pool_; }
  const ChainPool& pool() const { return *pool_; }
  const StratifiedSimplicialSet& simplicial_set() const { return set_; }

  const SimplexData& simplex(int m, std::size_t k) const { return simplices_[m][k]; }
  std::optional<std::size_t> find(int m, const SimplexData& s) const;
  const Chain& top(int m, std::size_t k) const;
  std::string describe(int m, std::size_t k) const;

  /// Precomposition with a monotone map θ: [m′] → [m] (given by its values).
  SimplexData precompose(const SimplexData& s, const std::vector<int>& theta);

 private:
  void enumerate(int dimension);
  void extend(int m, std::size_t base);

  std::shared_ptr<const Complex> complex_;  // owned copy; solver and pool point into it
  std::shared_ptr<ChainSolver> solver_;
  std::shared_ptr<ChainPool> pool_;
  std::vector<std::vector<SimplexData>> simplices_;
  std::vector<std::unordered_map<std::string, std::size_t>> index_;
  StratifiedSimplicialSet set_;
};

StratifiedSimplicialSet stratified_nerve(const Complex& x, int dimension, int cap = 1);

struct PushoutRow {
  int m = 0;
  std::size_t new_total = 0, expected_total = 0;
  std::size_t new_thin = 0, expected_thin = 0;
  bool ok() const { return new_total == expected_total && new_thin == expected_thin; }
};

struct PushoutReport {
  int n = 0;
  std::size_t thin_cells = 0, nonthin_cells = 0;
  std::vector<PushoutRow> rows;
  bool ok() const;
};

/// Compares sk_n with sk_{n−1} dimensionwise: the simplices added are the
/// degeneracies of the attached nondegenerate n-simplices.
PushoutReport verify_skeletal_pushout(const StratifiedSimplicialSet& s, int n);

/// (#nondegenerate non-thin n-simplices, #nondegenerate thin n-simplices).
std::pair<std::size_t, std::size_t> wedge_cofiber_profile(const StratifiedSimplicialSet& s, int n);

std::uint64_t binomial(int n, int k);

}  // namespace gaunt
