#pragma once

#include <optional>
#include <vector>

#include "gaunt/complex.hpp"
#include "gaunt/map.hpp"

namespace gaunt {

// Standard shapes. Generator names:
//   disk(n):     s0,t0,...,s{n-1},t{n-1} and top d{n}; disk(0) is the point "d0"
//   oriental(n): vertex subsets written as digit strings ("0", "01", "012")
//   cube(n):     "."-joined tensor names of oriental(1) generators ("0.01")

Complex empty_complex();
Complex disk(int n);
Complex boundary_disk(int n);
Complex oriental(int n);
/// n-fold Gray tensor power of oriental(1); cube(0) is the point.
Complex cube(int n);

/// ∂(x⊗y) = ∂x⊗y + (−1)^{deg x} x⊗∂y. Rejects inputs that fail validate().
Complex gray_tensor(const Complex& x, const Complex& y);

/// Two fresh objects bot/top; every generator moves up one degree.
Complex suspension(const Complex& x);
/// Glues the top of each factor to the bottom of the next. Factors need
/// endpoints (suspensions and disks of positive dimension carry them).
Complex wedge(const std::vector<Complex>& factors);

/// Drops every generator of degree > n.
Complex core(const Complex& x, int n);

/// ∂ₙ ↦ (−1)ⁿ∂ₙ (reverses odd-dimensional cells).
Complex dual_op(const Complex& x);
/// ∂ₙ ↦ (−1)ⁿ⁺¹∂ₙ (reverses even-dimensional cells).
Complex dual_co(const Complex& x);

/// Structural isomorphism: degreewise bijection of generators commuting with ∂.
/// Returns the bijection as per-degree index maps.
std::optional<std::vector<std::vector<std::size_t>>> find_isomorphism(const Complex& x,
                                                                      const Complex& y);
bool isomorphic(const Complex& x, const Complex& y);

/// Map of orientals induced by a monotone map [k] → [m]; non-injective
/// images of simplices go to zero.
ComplexMap oriental_map(const ComplexPtr& source, const ComplexPtr& target,
                        const std::vector<int>& vertex_map);

/// Vertex name of oriental(n); multi-digit vertices are separated by ','.
std::string oriental_simplex_name(const std::vector<int>& vertices, int n);

}  // namespace gaunt
