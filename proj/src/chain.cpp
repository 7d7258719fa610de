#include "gaunt/chain.hpp"

#include <algorithm>
#include <stdexcept>

namespace gaunt {

Chain::Chain(int degree, std::size_t width) : degree_(degree), coefficients_(width) {}

Chain::Chain(int degree, std::vector<Integer> coefficients)
    : degree_(degree), coefficients_(std::move(coefficients)) {}

Chain Chain::basis(int degree, std::size_t width, std::size_t index, const Integer& coefficient) {
  Chain c(degree, width);
  c.coefficients_.at(index) = coefficient;
  return c;
}

bool Chain::is_zero() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](const Integer& x) { return x == 0; });
}

bool Chain::is_positive() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](const Integer& x) { return x >= 0; });
}

Chain Chain::positive_part() const {
  Chain c(degree_, width());
  for (std::size_t i = 0; i < width(); ++i)
    if (coefficients_[i] > 0) c.coefficients_[i] = coefficients_[i];
  return c;
}

Chain Chain::negative_part() const {
  Chain c(degree_, width());
  for (std::size_t i = 0; i < width(); ++i)
    if (coefficients_[i] < 0) c.coefficients_[i] = -coefficients_[i];
  return c;
}

bool Chain::dominated_by(const Chain& other) const {
  require_compatible(other);
  for (std::size_t i = 0; i < width(); ++i)
    if (coefficients_[i] > other.coefficients_[i]) return false;
  return true;
}

Integer Chain::coefficient_sum() const {
  Integer s = 0;
  for (const auto& x : coefficients_) s += x;
  return s;
}

Integer Chain::max_coefficient() const {
  Integer m = 0;
  for (const auto& x : coefficients_) m = std::max(m, Integer(abs(x)));
  return m;
}

std::vector<std::size_t> Chain::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < width(); ++i)
    if (coefficients_[i] != 0) s.push_back(i);
  return s;
}

Chain& Chain::operator+=(const Chain& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < width(); ++i) coefficients_[i] += other.coefficients_[i];
  return *this;
}

Chain& Chain::operator-=(const Chain& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < width(); ++i) coefficients_[i] -= other.coefficients_[i];
  return *this;
}

Chain& Chain::operator*=(const Integer& factor) {
  for (auto& x : coefficients_) x *= factor;
  return *this;
}

std::size_t Chain::hash() const {
  std::size_t h = std::hash<int>{}(degree_) ^ (width() * 0x9e3779b97f4a7c15ULL);
  for (const auto& x : coefficients_) {
    std::size_t v = boost::multiprecision::hash_value(x);
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

void Chain::require_compatible(const Chain& other) const {
  if (degree_ != other.degree_ || width() != other.width())
    throw std::invalid_argument("chain shape mismatch: degree " + std::to_string(degree_) +
                                " width " + std::to_string(width()) + " vs degree " +
                                std::to_string(other.degree_) + " width " +
                                std::to_string(other.width()));
}

}  // namespace gaunt
