#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gaunt {

using Integer = boost::multiprecision::cpp_int;

/// An integer combination of the generators of a single degree.
///
/// Coefficients are stored densely: `width()` is the number of generators in
/// that degree of the ambient complex. Two chains can only be combined when
/// both degree and width agree.
class Chain {
 public:
  Chain() = default;
  Chain(int degree, std::size_t width);
  Chain(int degree, std::vector<Integer> coefficients);

  static Chain basis(int degree, std::size_t width, std::size_t index,
                     const Integer& coefficient = 1);

  int degree() const { return degree_; }
  std::size_t width() const { return coefficients_.size(); }
  const std::vector<Integer>& coefficients() const { return coefficients_; }

  const Integer& operator[](std::size_t i) const { return coefficients_[i]; }
  Integer& operator[](std::size_t i) { return coefficients_[i]; }

  bool is_zero() const;
  bool is_positive() const;
  /// c = c⁺ − c⁻ with disjoint supports.
  Chain positive_part() const;
  Chain negative_part() const;
  /// Coefficientwise comparison.
  bool dominated_by(const Chain& other) const;
  /// Sum of all coefficients; this is ε(c) for a degree-0 chain.
  Integer coefficient_sum() const;
  Integer max_coefficient() const;
  std::vector<std::size_t> support() const;

  Chain& operator+=(const Chain& other);
  Chain& operator-=(const Chain& other);
  Chain& operator*=(const Integer& factor);

  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(const Integer& k, Chain c) { return c *= k; }
  friend Chain operator-(Chain c) { return c *= Integer(-1); }

  friend bool operator==(const Chain& a, const Chain& b) {
    return a.degree_ == b.degree_ && a.coefficients_ == b.coefficients_;
  }

  std::size_t hash() const;

 private:
  void require_compatible(const Chain& other) const;

  int degree_ = 0;
  std::vector<Integer> coefficients_;
};

struct ChainHash {
  std::size_t operator()(const Chain& c) const { return c.hash(); }
};

}  // namespace gaunt
