#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gaunt/chain.hpp"

namespace gaunt {

struct GeneratorRef {
  int degree = 0;
  std::size_t index = 0;
  friend bool operator==(const GeneratorRef&, const GeneratorRef&) = default;
  friend auto operator<=>(const GeneratorRef&, const GeneratorRef&) = default;
};

/// Distinguished bottom/top objects, as carried by suspensions and disks.
struct Endpoints {
  std::size_t bottom = 0;
  std::size_t top = 0;
  friend bool operator==(const Endpoints&, const Endpoints&) = default;
};

/// A finite augmented directed chain complex with a chosen basis.
///
/// Degree n holds an ordered list of named generators; every generator of
/// degree n ≥ 1 has an integral boundary in degree n − 1. The augmentation is
/// implicit: every degree-0 generator has augmentation 1. Instances are
/// immutable once built; use ComplexBuilder or the constructions in
/// constructions.hpp.
class Complex {
 public:
  Complex() = default;

  const std::string& name() const { return name_; }
  /// Highest degree carrying generators, or -1 for the empty complex.
  int top_degree() const { return static_cast<int>(names_.size()) - 1; }
  std::size_t count(int degree) const;
  std::vector<std::size_t> counts() const;
  std::size_t total_count() const;
  bool empty() const { return names_.empty(); }

  const std::string& generator_name(int degree, std::size_t index) const;
  const std::string& generator_name(GeneratorRef g) const { return generator_name(g.degree, g.index); }
  std::optional<GeneratorRef> find(std::string_view name) const;
  GeneratorRef at(std::string_view name) const;

  /// ∂ of a generator of degree ≥ 1, as a chain of degree − 1.
  const Chain& boundary(int degree, std::size_t index) const;
  const Chain& boundary_minus(int degree, std::size_t index) const;
  const Chain& boundary_plus(int degree, std::size_t index) const;
  Chain boundary_of(const Chain& c) const;

  Chain zero(int degree) const { return Chain(degree, count(degree)); }
  Chain generator(int degree, std::size_t index, const Integer& coefficient = 1) const;
  Chain generator(std::string_view name) const;

  /// ε extended linearly; zero for chains of positive degree.
  Integer augmentation(const Chain& c) const;

  const std::optional<Endpoints>& endpoints() const { return endpoints_; }

  /// Deterministic textual form, terms ordered by generator name ("01+12", "2*a-b").
  std::string format(const Chain& c) const;

  Complex renamed(std::string name) const;

  /// Same name, generators, boundaries and endpoints.
  friend bool operator==(const Complex& a, const Complex& b);

 private:
  friend class ComplexBuilder;

  std::string name_;
  std::vector<std::vector<std::string>> names_;
  std::vector<std::vector<Chain>> boundary_;
  std::vector<std::vector<Chain>> boundary_minus_;
  std::vector<std::vector<Chain>> boundary_plus_;
  std::map<std::string, GeneratorRef, std::less<>> lookup_;
  std::optional<Endpoints> endpoints_;
};

/// Incremental builder. Boundaries are given by generator name and resolved at
/// build(), so generators may be added in any order.
class ComplexBuilder {
 public:
  explicit ComplexBuilder(std::string name) : name_(std::move(name)) {}

  using Term = std::pair<Integer, std::string>;

  ComplexBuilder& add(int degree, std::string name, std::vector<Term> boundary = {});
  ComplexBuilder& endpoints(std::string bottom, std::string top);

  /// Throws std::invalid_argument on structural errors (duplicate names,
  /// dangling boundary terms, degree gaps). Mathematical conditions are left
  /// to validate().
  Complex build() const;

 private:
  struct Entry {
    std::string name;
    std::vector<Term> boundary;
  };
  std::string name_;
  std::vector<std::vector<Entry>> entries_;
  std::optional<std::pair<std::string, std::string>> endpoints_;
};

/// Parses "a+2*b-c" (or "0") into a chain of the given degree.
Chain parse_chain(const Complex& x, int degree, std::string_view text);

/// Atom descent of a generator: entries (x_k⁻, x_k⁺) for k = 0..deg g with the
/// top entry (g, g); x_{k-1}⁻ = ∂⁻x_k⁻ and x_{k-1}⁺ = ∂⁺x_k⁺.
std::vector<std::pair<Chain, Chain>> atom_entries(const Complex& x, GeneratorRef g);

}  // namespace gaunt
