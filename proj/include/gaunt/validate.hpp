#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gaunt/complex.hpp"

namespace gaunt {

enum class ViolationKind {
  BoundarySquared,   // ∂∘∂ ≠ 0
  Augmentation,      // ε∘∂ ≠ 0 on degree 1
  NonUnitalAtom,     // ε(⟨g⟩₀^±) ≠ 1
  LoopFreeness,      // cycle in the strong loop-freeness graph
  NotCommuting,      // map: f∂ ≠ ∂f or ε f ≠ ε
  NotPositive,       // map: negative coefficient in a generator image
  ShapeMismatch,     // map: image of the wrong degree or complex
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string message;
  /// Offending generators; for loop-freeness the cycle in order.
  std::vector<std::string> generators;
};

struct Diagnostics {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
  std::string summary() const;
};

Diagnostics validate(const Complex& x);

/// Raised by homotopy computations on inputs failing validate().
class InvalidComplex : public std::runtime_error {
 public:
  InvalidComplex(const std::string& name, Diagnostics diagnostics);
  const Diagnostics& diagnostics() const { return diagnostics_; }

 private:
  Diagnostics diagnostics_;
};

void require_valid(const Complex& x);

/// Generators in an order compatible with the strong loop-freeness graph:
/// every edge a→b has a before b. Empty when the graph has a cycle.
std::vector<GeneratorRef> loop_free_order(const Complex& x);

}  // namespace gaunt
