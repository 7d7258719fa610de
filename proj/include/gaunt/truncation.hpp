#pragma once

#include <map>
#include <string>
#include <vector>

#include "gaunt/homotopy.hpp"
#include "gaunt/map.hpp"

namespace gaunt {

/// A category enriched in posets, with hom posets between finitely many objects.
struct PosetEnrichedCategory {
  std::vector<std::string> objects;
  /// hom[a][b]; representatives are 1-chains.
  std::vector<std::vector<HomotopyPoset>> hom;

  /// Class of (g ∘ f) for f in hom(a,b), g in hom(b,c), by adding representatives.
  std::size_t compose(std::size_t a, std::size_t b, std::size_t c, std::size_t f, std::size_t g) const;
  /// Associativity, identities and monotonicity of composition; empty when all hold.
  std::vector<std::string> check_laws() const;
};

/// Alias of pi0.
Poset truncate0(const Complex& x, int cap = kDefaultCap);

PosetEnrichedCategory truncate1(ChainSolver& solver);

/// Whether two poset-enriched categories agree up to a bijection of objects
/// and hom-wise order isomorphisms compatible with composition. Exact when no
/// hom poset has a nontrivial automorphism (chains, singletons).
bool enriched_isomorphic(const PosetEnrichedCategory& a, const PosetEnrichedCategory& b);

/// Dimension k with τ≤m(𝔻ⁿ) = 𝔻ᵏ: n when m ≥ n − 1, else m + 1.
int disk_truncation(int m, int n);

/// Predicates on maps, relative to the enumeration cap of the two solvers.
class MapAnalysis {
 public:
  MapAnalysis(const ComplexMap& f, int cap = kDefaultCap);

  const ComplexMap& map() const { return f_; }
  int cap() const { return cap_; }

  /// Every m-cell of the target over f(Z) lifts, for every source basepoint Z
  /// of dimension m − 1. Always true for m < 0.
  bool is_full(int m);
  /// As is_full, with exactly one lift.
  bool has_unique_lifts(int m);
  /// Unique lifts in every dimension above n.
  bool is_faithful(int n);
  /// m-full for 0 ≤ m ≤ n + 1.
  bool is_connected(int n);
  /// (n+1)-faithful.
  bool is_truncated(int n);

  /// For every 0 ≤ m ≤ n and source basepoint Z of dimension m − 1, the
  /// induced map π_m(source, Z) → π_m(target, fZ) is an order isomorphism.
  bool is_equivalence(int n);
  /// First failing basepoint of the last is_equivalence call.
  const std::string& equivalence_failure() const { return failure_; }

  OrientedBasePoint image(const OrientedBasePoint& z) const;
  ChainSolver& source_solver() { return source_; }
  ChainSolver& target_solver() { return target_; }

 private:
  enum class Lift { Some, Unique };
  bool lifts(int m, Lift mode);
  int top() const;

  ComplexMap f_;
  int cap_;
  ChainSolver source_;
  ChainSolver target_;
  std::map<std::pair<int, int>, bool> memo_;
  std::string failure_;
};

}  // namespace gaunt
