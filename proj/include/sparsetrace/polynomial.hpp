#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sparsetrace/rational.hpp"

namespace sparsetrace {

/// Exponent vector a = (a_1, ..., a_k); negative entries are Laurent exponents.
using Exponent = std::vector<long>;
using Point = Exponent;

/// Finite subset of Z^k, kept sorted and duplicate-free.
using Support = std::vector<Point>;

Support make_support(std::vector<Point> points);
Support support_union(const Support& a, const Support& b);

long total_degree(const Exponent& e);

/// Graded lexicographic order: total degree first, then lexicographic.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate Laurent polynomial with exact rational coefficients.
/// No zero coefficient is ever stored.
class Polynomial {
 public:
  using Terms = std::map<Exponent, Rational, GrlexLess>;

  explicit Polynomial(std::size_t arity = 0) : arity_(arity) {}

  static Polynomial constant(std::size_t arity, const Rational& c);
  static Polynomial monomial(const Exponent& e, const Rational& c = 1);
  static Polynomial variable(std::size_t arity, std::size_t index);

  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Exponent& e) const;
  /// Accumulates c into the coefficient of t^e; drops the term if it cancels.
  void add_term(const Exponent& e, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  /// d/dt_i, mapping t_i^e to e * t_i^(e-1).
  Polynomial derivative(std::size_t var) const;
  /// Multiplies by the Laurent monomial t^shift.
  Polynomial shifted(const Exponent& shift) const;

  /// Throws DomainError when a coordinate is zero and appears with a
  /// negative exponent.
  Rational evaluate(std::span<const Rational> point) const;

  Support support() const;
  /// Maximum total degree over the terms (-infinity guarded: zero poly -> 0).
  long degree() const;
  bool has_negative_exponents() const;
  /// Homogeneous component of total degree d.
  Polynomial homogeneous_part(long d) const;

  /// Printed in decreasing grlex order, e.g. "t1^2 + t2^2 - 1".
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t arity_;
  Terms terms_;
};

/// Prints with default names x1, ..., xk.
std::ostream& operator<<(std::ostream& out, const Polynomial& f);

Polynomial parse_polynomial(std::string_view text,
                            const std::vector<std::string>& variables);

/// Default names x1, ..., xn.
std::vector<std::string> default_variable_names(std::size_t n,
                                                const std::string& stem = "x");

/// det(d f_i / d x_j) for a square polynomial system.
Polynomial jacobian(std::span<const Polynomial> system);

/// det(t_j d f_i / d t_j) for a square Laurent system.
Polynomial toric_jacobian(std::span<const Polynomial> system);

/// Determinant of a square matrix of polynomials (Laplace expansion).
Polynomial polynomial_determinant(const std::vector<std::vector<Polynomial>>& m);

/// The line q + T p in the space of polynomials.
class Pencil {
 public:
  Pencil(Polynomial q, Polynomial p);
  Polynomial at(const Rational& t) const;
  const Polynomial& base() const { return q_; }
  const Polynomial& direction() const { return p_; }

 private:
  Polynomial q_;
  Polynomial p_;
};

inline Pencil pencil(Polynomial q, Polynomial p) {
  return Pencil(std::move(q), std::move(p));
}

}  // namespace sparsetrace
