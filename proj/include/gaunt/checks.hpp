#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gaunt/constructions.hpp"
#include "gaunt/homotopy.hpp"
#include "gaunt/map.hpp"

namespace gaunt {

/// Outcome of a comparison over many basepoints.
struct CheckResult {
  std::size_t cases = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  void merge(const CheckResult& other);
};

/// m-fold suspension with the name S(S(…X)).
Complex iterated_suspension(const Complex& x, int m);

/// pi_k(S^m X, Z) ≅ pi_{k−m}(X, Z′) for every basepoint Z′ of X of dimension
/// k−m−1, where Z prepends the suspension endpoints to the shifted Z′.
CheckResult suspension_shift_check(const Complex& x, int k, int m, int cap = kDefaultCap);

/// pi_k(S(X₁)∨…∨S(X_r), Z) ≅ ∏_{i<ℓ≤j} pi_{k−1}(X_ℓ, Z′_ℓ) for every
/// basepoint Z of dimension k−1 running from v_i to v_j with i ≤ j.
CheckResult wedge_product_check(const std::vector<Complex>& factors, int k, int cap = kDefaultCap);

/// (X⊗Y)^op vs Y^op⊗X^op (and co) on cubes, compared through π₀ and π₁ at
/// swapped object pairs.
CheckResult dual_tensor_check(int a, int b, bool co, int cap = kDefaultCap);

/// A named map for the predicate and Whitehead catalogs.
struct CatalogMap {
  std::string name;
  ComplexMap map;
  bool isomorphism;  // bijective on generators
};

/// identity on oriental(2), ∂𝔻¹ ↪ 𝔻¹, 𝔻¹ → 𝔻⁰, the 02-face 𝚫¹ → 𝚫².
std::vector<CatalogMap> predicate_catalog();
/// The four maps above plus disk(1) ≅ oriental(1).
std::vector<CatalogMap> whitehead_catalog();
/// A larger catalog for property tests.
std::vector<CatalogMap> extended_catalog();

/// Generator-bijective maps, checked from the images.
bool is_generator_bijection(const ComplexMap& f);

}  // namespace gaunt
