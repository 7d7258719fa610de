#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "gaunt/complex.hpp"

namespace gaunt {

constexpr int kDefaultCap = 8;

/// Doubling the coefficient cap produced solutions the capped search missed.
class UnsaturatedEnumeration : public std::runtime_error {
 public:
  UnsaturatedEnumeration(const std::string& complex, int degree, int cap, std::size_t found,
                         std::size_t found_doubled);
  int cap() const { return cap_; }

 private:
  int cap_;
};

class NonComposable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidBasepoint : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Process-wide tallies of saturation checks, for reporting.
struct SolverStatistics {
  std::uint64_t checks = 0;       // distinct boundary problems solved
  std::uint64_t saturated = 0;    // of which the doubled cap found nothing new
  std::uint64_t unsaturated = 0;
};
SolverStatistics solver_statistics();
void reset_solver_statistics();

/// Every positive degree-n chain c with ∂c = d, ignoring caps above `limit`.
/// Exhaustive for strongly loop-free X; exposed for testing.
std::vector<Chain> enumerate_positive_solutions(const Complex& x, int n, const Chain& d,
                                                const Integer& limit);

/// Cached, saturation-checked solver for boundary problems ∂c = d, c ≥ 0, in
/// a fixed complex, which must outlive the solver. Each distinct problem is searched once at twice the cap;
/// if any solution then exceeds the cap, UnsaturatedEnumeration is thrown.
/// Thread-safe.
class ChainSolver {
 public:
  explicit ChainSolver(const Complex& x, int cap = kDefaultCap);

  const Complex& complex() const { return *x_; }
  int cap() const { return cap_; }

  /// Sorted by Complex::format of the solutions.
  const std::vector<Chain>& solve(int n, const Chain& d);
  bool solvable(int n, const Chain& d) { return !solve(n, d).empty(); }

 private:
  const Complex* x_;
  int cap_;
  std::mutex mutex_;
  std::unordered_map<Chain, std::unique_ptr<std::vector<Chain>>, ChainHash> cache_;
};

/// A sequence of pairs (x_k⁻, x_k⁺), k = 0..n, of positive chains with
/// ∂x_k^± = x_{k−1}⁺ − x_{k−1}⁻ and ε(x₀^±) = 1. A cell additionally has
/// x_n⁻ = x_n⁺. The empty table is the basepoint of dimension −1.
struct CellTable {
  std::vector<std::pair<Chain, Chain>> entries;

  int dimension() const { return static_cast<int>(entries.size()) - 1; }
  const Chain& minus(int k) const { return entries.at(k).first; }
  const Chain& plus(int k) const { return entries.at(k).second; }
  bool is_cell() const { return entries.empty() || entries.back().first == entries.back().second; }
  /// A cell whose top chain is zero.
  bool is_identity() const { return dimension() >= 1 && is_cell() && entries.back().first.is_zero(); }

  friend bool operator==(const CellTable&, const CellTable&) = default;
};
using OrientedBasePoint = CellTable;

/// Checks the boundary conditions; throws InvalidBasepoint on failure.
void check_table(const Complex& x, const CellTable& t, bool require_cell);

/// Basepoint from a pair of objects.
OrientedBasePoint object_pair(const Complex& x, std::string_view a, std::string_view b);
/// Extends a basepoint of dimension n−1 by the pair (u, v) of n-chains.
OrientedBasePoint extend(const OrientedBasePoint& z, Chain u, Chain v);
std::string format_table(const Complex& x, const CellTable& t);

CellTable atom_table(const Complex& x, GeneratorRef g);

/// All basepoints of dimension n (n = −1 gives the single empty basepoint).
std::vector<OrientedBasePoint> enumerate_basepoints(ChainSolver& solver, int n);
/// All cells of dimension n; identity cells included.
std::vector<CellTable> enumerate_cells(ChainSolver& solver, int n);

/// Orders the degree-1 generators of c into a path from a to b.
std::vector<std::size_t> atomic_path_decomposition(const Complex& x, const Chain& c,
                                                   std::size_t a, std::size_t b);

/// The unique degree-0 generators s, t with ∂g = t − s for a degree-1 generator.
std::pair<std::size_t, std::size_t> arrow_ends(const Complex& x, std::size_t g);

}  // namespace gaunt
