#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sparsetrace/rational.hpp"

namespace sparsetrace {

/// Polynomial in the pencil parameter T; coefficient i multiplies T^i.
class TPencilPolynomial {
 public:
  TPencilPolynomial() = default;
  explicit TPencilPolynomial(std::vector<Rational> coefficients);

  /// Newton interpolation through (nodes[i], values[i]).
  static TPencilPolynomial interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational evaluate(const Rational& t) const;

  friend bool operator==(const TPencilPolynomial& a, const TPencilPolynomial& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  std::vector<Rational> c_;
};

/// 0, 1, -1, 2, -2, ... (count values).
std::vector<Rational> interpolation_nodes(std::size_t count);

}  // namespace sparsetrace
