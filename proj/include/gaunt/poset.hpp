#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gaunt {

/// A finite partial order, stored as its full (reflexive, transitive) relation.
class Poset {
 public:
  Poset() = default;

  /// Closes `relation` (pairs i ≤ j over labels) reflexively and transitively
  /// and collapses strongly connected classes. A class is labelled by its
  /// first member.
  static Poset from_preorder(std::vector<std::string> labels,
                             const std::vector<std::pair<std::size_t, std::size_t>>& relation);
  /// As above from a dense boolean matrix.
  static Poset from_matrix(std::vector<std::string> labels, std::vector<std::vector<bool>> leq);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> find(const std::string& label) const;

  bool leq(std::size_t i, std::size_t j) const { return leq_[i][j]; }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq_[i][j]; }

  /// For each input label of the preorder, the index of its class.
  const std::vector<std::size_t>& class_of() const { return class_of_; }
  /// True when building required merging at least two preorder elements.
  bool condensed() const { return condensed_; }

  /// Cover relation i ⋖ j, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  std::vector<std::size_t> minimal() const;
  std::vector<std::size_t> maximal() const;

  /// Exact equality of labels and order.
  friend bool operator==(const Poset& a, const Poset& b) {
    return a.labels_ == b.labels_ && a.leq_ == b.leq_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::size_t> class_of_;
  bool condensed_ = false;
};

struct IsoResult {
  /// Image of each element of the first poset, when isomorphic.
  std::optional<std::vector<std::size_t>> map;
  /// First distinguishing invariant otherwise.
  std::string mismatch;
  explicit operator bool() const { return map.has_value(); }
};

IsoResult poset_iso(const Poset& p, const Poset& q);

/// Whether `phi` (element i ↦ phi[i]) is an order isomorphism p → q.
bool is_order_isomorphism(const Poset& p, const Poset& q, const std::vector<std::size_t>& phi);

std::string to_dot(const Poset& p, const std::string& name = "P");

// Closed forms.
Poset chain_poset(int n);  // 0 < 1 < … < n
Poset antichain(std::size_t n);
Poset boolean_lattice(const std::vector<std::string>& atoms);
Poset boolean_lattice(int n);  // atoms "1".."n"
Poset empty_poset();
Poset poset_product(const Poset& p, const Poset& q);
Poset poset_product(const std::vector<Poset>& factors);

/// Permutations of 1..n (one-line notation) ordered by containment of their
/// inversion sets {(a,b) : a < b, b occurs before a}.
Poset weak_order(int n);

/// Reading of the generating relation for permutations.
enum class WeakOrderReading {
  /// ρ ≤ ρ∘s_i when ρ(i) < ρ(i+1): swap the entries at positions i, i+1.
  AdjacentPositions,
  /// ρ ≤ s_{ρ(i)}∘ρ when ρ(i) < ρ(i+1): swap the values ρ(i) and ρ(i)+1.
  AdjacentValues,
};

/// Reflexive-transitive closure of the generating relation.
Poset weak_order_generated(int n, WeakOrderReading reading);

}  // namespace gaunt
