#pragma once

#include <string>
#include <vector>

#include "gaunt/cells.hpp"
#include "gaunt/poset.hpp"

namespace gaunt {

/// A homotopy poset together with one representative chain per element.
struct HomotopyPoset {
  Poset poset;
  std::vector<Chain> representatives;
  int degree = 0;

  /// Index of the class containing chain c, if c is one of the enumerated cells.
  std::optional<std::size_t> class_of(const Chain& c) const;

  std::vector<Chain> members;  // every enumerated cell, in enumeration order
};

/// Objects ordered by existence of a morphism, strongly connected classes merged.
HomotopyPoset pi0(ChainSolver& solver);
Poset pi0(const Complex& x, int cap = kDefaultCap);

/// Classes of n-cells with boundary data z (dimension n − 1), ordered by the
/// existence of an (n+1)-cell. The empty basepoint gives pi0.
HomotopyPoset pi_n(ChainSolver& solver, const OrientedBasePoint& z);
Poset pi_n(const Complex& x, const OrientedBasePoint& z, int cap = kDefaultCap);

/// Atomic paths from a to b ordered by the closure of single 2-generator rewrites.
Poset pi1_rewriting(ChainSolver& solver, std::size_t a, std::size_t b);

/// The subposet of pi_n on classes of identity cells (zero top chain).
Poset pi_prime_n(ChainSolver& solver, const OrientedBasePoint& z);

/// Label used for a representative in homotopy posets: "id" for zero chains.
std::string cell_label(const Complex& x, const Chain& c);

}  // namespace gaunt
