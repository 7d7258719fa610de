#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gaunt/homotopy.hpp"
#include "gaunt/map.hpp"
#include "gaunt/nerve.hpp"

namespace gaunt {

class IncompatibleF : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A map sk_n N(X) → N(Y), given on the nondegenerate simplices of
/// dimension ≤ n of the bounded nerve of X; degenerate simplices follow by
/// precomposition. Both nerves are built to dimension n + 1.
class SkeletalMap {
 public:
  /// n = 0 data: an object of Y for every object of X.
  static SkeletalMap from_objects(const Complex& x, const Complex& y,
                                  const std::map<std::string, std::string>& objects, int cap = 1);
  /// The restriction of g ∘ − to the n-skeleton.
  static SkeletalMap from_map(const ComplexMap& g, int n, int cap = 1);
  /// Explicit data: for each dimension m ≤ n and each nondegenerate
  /// m-simplex of N(X), a simplex of N(Y) (as chain ids of target_nerve()).
  SkeletalMap(std::shared_ptr<Nerve> source, std::shared_ptr<Nerve> target, int n,
              std::vector<std::map<std::size_t, SimplexData>> assignment);

  int n() const { return n_; }
  Nerve& source_nerve() { return *source_; }
  Nerve& target_nerve() { return *target_; }

  /// Image of an m-simplex of N(X), m ≤ n, as simplex data of N(Y).
  SimplexData apply(int m, std::size_t k);

 private:
  void check();

  std::shared_ptr<Nerve> source_;
  std::shared_ptr<Nerve> target_;
  int n_;
  std::vector<std::map<std::size_t, SimplexData>> assignment_;
};

struct ObstructionFactor {
  std::string cell;      // description of the attached (n+1)-simplex
  bool thin = false;
  Poset poset;           // π_{n+1}(Y, Z) or its identity part π′
};

/// τ≤0 of the extensions to sk_{n+1}, assembled from one homotopy poset per
/// attached nondegenerate (n+1)-simplex: π_{n+1}(Y, F∘α|∂) for non-thin α and
/// the identity part π′_{n+1} for thin α. Factors are combined by product.
Poset obstruction_poset(SkeletalMap& f, std::vector<ObstructionFactor>* factors = nullptr);

/// Enumerates the fillers of every attached simplex in N(Y) directly, forms
/// all tuples, and orders them by componentwise existence of (n+2)-cells.
Poset brute_force_extensions(SkeletalMap& f);

}  // namespace gaunt
