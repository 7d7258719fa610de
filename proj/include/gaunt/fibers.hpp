#pragma once

#include <string>
#include <vector>

#include "gaunt/homotopy.hpp"
#include "gaunt/truncation.hpp"

namespace gaunt {

/// An object c of the source with a path σ: f(c) → y in the target.
struct FiberObject {
  std::size_t object = 0;
  Chain path;
  friend bool operator==(const FiberObject&, const FiberObject&) = default;
};

enum class FiberConvention {
  /// (c,σ) ≤ (c′,σ′) witnessed by a 2-cell σ ⇒ σ′ ∘ f(g).
  Oplax,
  /// The transposed convention: a 2-cell σ′ ∘ f(g) ⇒ σ.
  Lax,
};

struct FiberPoset {
  Poset poset;
  std::vector<FiberObject> objects;  // all enumerated objects, in order
  /// Class of an enumerated object.
  std::optional<std::size_t> class_of(const FiberObject& o) const;
};

class InvalidObject : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string format_fiber_object(const ComplexMap& f, const FiberObject& o);

/// π₀ of the oriented right fiber of f over the target object y.
FiberPoset oriented_right_fiber_pi0(MapAnalysis& analysis, std::size_t y,
                                    FiberConvention convention = FiberConvention::Oplax);
FiberPoset oriented_right_fiber_pi0(MapAnalysis& analysis, std::string_view y,
                                    FiberConvention convention = FiberConvention::Oplax);

struct LesEntry {
  int item = 0;           // 1, 2 or 3
  std::string element;    // the element tested
  bool in_image = false;  // left-hand side of the characterization
  bool criterion = false; // right-hand side
  bool holds() const { return in_image == criterion; }
};

struct LesReport {
  std::string basepoint;
  std::vector<LesEntry> entries;
  /// Items not checkable at this basepoint (item 3 needs dimension ≥ 1).
  std::vector<int> skipped;
  bool ok(int item) const;
  bool ok() const;
};

/// Checks items (1)–(3) of the oriented exact sequence at n = 0 for the
/// basepoint z of the source (dimension 0 or 1; item 3 needs dimension 1).
LesReport les_exactness_check(MapAnalysis& analysis, const OrientedBasePoint& z,
                              FiberConvention convention = FiberConvention::Oplax);

}  // namespace gaunt
