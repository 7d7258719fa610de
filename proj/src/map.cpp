#include "gaunt/map.hpp"

#include <stdexcept>

namespace gaunt {

ComplexMap::ComplexMap(ComplexPtr source, ComplexPtr target, std::vector<std::vector<Chain>> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (!source_ || !target_) throw std::invalid_argument("map with null complex");
  images_.resize(source_->top_degree() + 1);
  for (int d = 0; d <= source_->top_degree(); ++d) {
    if (images_[d].size() != source_->count(d))
      throw std::invalid_argument("map from " + source_->name() + " lacks images in degree " +
                                  std::to_string(d));
  }
}

Chain ComplexMap::apply(const Chain& c) const {
  Chain out = target_->zero(c.degree());
  if (c.degree() > source_->top_degree()) return out;
  for (std::size_t i = 0; i < c.width(); ++i) {
    if (c[i] == 0) continue;
    const Chain& im = images_[c.degree()][i];
    if (im.width() != out.width()) continue;  // shape errors are reported by validate_map
    for (std::size_t j = 0; j < im.width(); ++j)
      if (im[j] != 0) out[j] += c[i] * im[j];
  }
  return out;
}

ComplexMap ComplexMap::after(const ComplexMap& g) const {
  if (g.target_ != source_ && !(*g.target_ == *source_))
    throw std::invalid_argument("cannot compose: target of inner map is not the source");
  std::vector<std::vector<Chain>> images(g.source().top_degree() + 1);
  for (int d = 0; d <= g.source().top_degree(); ++d)
    for (std::size_t i = 0; i < g.source().count(d); ++i) images[d].push_back(apply(g.image(d, i)));
  return ComplexMap(g.source_ptr(), target_, std::move(images));
}

ComplexMap identity_map(const ComplexPtr& x) {
  std::vector<std::vector<Chain>> images(x->top_degree() + 1);
  for (int d = 0; d <= x->top_degree(); ++d)
    for (std::size_t i = 0; i < x->count(d); ++i) images[d].push_back(x->generator(d, i));
  return ComplexMap(x, x, std::move(images));
}

MapBuilder::MapBuilder(ComplexPtr source, ComplexPtr target)
    : source_(std::move(source)), target_(std::move(target)) {
  for (int d = 0; d <= source_->top_degree(); ++d) {
    images_.emplace_back(source_->count(d), target_->zero(d));
    assigned_.emplace_back(source_->count(d), false);
  }
}

MapBuilder& MapBuilder::set(std::string_view generator, std::string_view image) {
  auto g = source_->at(generator);
  images_[g.degree][g.index] = parse_chain(*target_, g.degree, image);
  assigned_[g.degree][g.index] = true;
  return *this;
}

ComplexMap MapBuilder::build() const {
  for (int d = 0; d <= source_->top_degree(); ++d)
    for (std::size_t i = 0; i < source_->count(d); ++i)
      if (d == 0 && !assigned_[d][i])
        throw std::invalid_argument("object '" + source_->generator_name(d, i) +
                                    "' has no image");
  return ComplexMap(source_, target_, images_);
}

Diagnostics validate_map(const ComplexMap& f) {
  Diagnostics diag;
  const Complex& x = f.source();
  const Complex& y = f.target();
  for (int d = 0; d <= x.top_degree(); ++d) {
    for (std::size_t i = 0; i < x.count(d); ++i) {
      const Chain& im = f.image(d, i);
      const std::string& name = x.generator_name(d, i);
      if (im.degree() != d || im.width() != y.count(d)) {
        diag.violations.push_back({ViolationKind::ShapeMismatch,
                                   "image of " + name + " is not a degree-" + std::to_string(d) +
                                       " chain of " + y.name(),
                                   {name}});
        continue;
      }
      if (!im.is_positive())
        diag.violations.push_back({ViolationKind::NotPositive,
                                   name + " ↦ " + y.format(im) + " is not positive", {name}});
      if (d == 0) {
        if (y.augmentation(im) != 1)
          diag.violations.push_back({ViolationKind::NotCommuting,
                                     "ε(f(" + name + ")) = " + y.augmentation(im).str() + " ≠ 1",
                                     {name}});
      } else if (y.boundary_of(im) != f.apply(x.boundary(d, i))) {
        diag.violations.push_back({ViolationKind::NotCommuting,
                                   "∂f(" + name + ") ≠ f∂(" + name + ")", {name}});
      }
    }
  }
  return diag;
}

}  // namespace gaunt
