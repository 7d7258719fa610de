#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gaunt/complex.hpp"
#include "gaunt/validate.hpp"

namespace gaunt {

using ComplexPtr = std::shared_ptr<const Complex>;

inline ComplexPtr share(Complex x) { return std::make_shared<const Complex>(std::move(x)); }

/// A degreewise map of augmented directed complexes, given on generators.
class ComplexMap {
 public:
  ComplexMap(ComplexPtr source, ComplexPtr target, std::vector<std::vector<Chain>> images);

  const Complex& source() const { return *source_; }
  const Complex& target() const { return *target_; }
  const ComplexPtr& source_ptr() const { return source_; }
  const ComplexPtr& target_ptr() const { return target_; }

  const Chain& image(int degree, std::size_t index) const { return images_.at(degree).at(index); }
  const Chain& image(GeneratorRef g) const { return image(g.degree, g.index); }
  /// Linear extension to chains of the source.
  Chain apply(const Chain& c) const;

  /// f ∘ g; requires g's target to equal this map's source.
  ComplexMap after(const ComplexMap& g) const;

 private:
  ComplexPtr source_;
  ComplexPtr target_;
  std::vector<std::vector<Chain>> images_;
};

ComplexMap identity_map(const ComplexPtr& x);

/// Builds a map from "generator = chain expression" assignments.
class MapBuilder {
 public:
  MapBuilder(ComplexPtr source, ComplexPtr target);
  MapBuilder& set(std::string_view generator, std::string_view image);
  ComplexMap build() const;

 private:
  ComplexPtr source_;
  ComplexPtr target_;
  std::vector<std::vector<Chain>> images_;
  std::vector<std::vector<bool>> assigned_;
};

/// Checks ∂/ε commutation and positivity of every generator image.
Diagnostics validate_map(const ComplexMap& f);

}  // namespace gaunt
