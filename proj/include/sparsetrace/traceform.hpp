#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sparsetrace/exponents.hpp"
#include "sparsetrace/oracle.hpp"
#include "sparsetrace/polynomial.hpp"

namespace sparsetrace {

/// Product over the zeros of (sum_{|alpha| <= d} U_alpha xi^alpha)^m(xi), as a
/// polynomial in the variables U_alpha.
struct ChowForm {
  long degree_bound = 1;
  std::size_t arity = 0;
  /// Index of each U variable, all |alpha| <= d in grlex order.
  std::vector<Exponent> alphas;
  Polynomial form;

  std::size_t variable_index(const Exponent& alpha) const;
  /// The point U = coefficients of g (degree <= d, no negative exponents).
  std::vector<Rational> coefficients_of(const Polynomial& g) const;
  Rational evaluate(const Polynomial& g) const;
};

struct RootSpec {
  std::vector<Rational> point;
  long multiplicity = 1;
};

/// All exponents of total degree <= d in n variables, grlex order.
std::vector<Exponent> monomials_up_to(std::size_t n, long d);

ChowForm chowform_from_roots(const std::vector<RootSpec>& roots, long d);

/// <prod (x - x_i)^(m_i)> for n = 1, or <prod (x - x_i)^(m_i), y - h(x)> for
/// n = 2 with h interpolating the roots (first coordinates must differ).
std::vector<Polynomial> ideal_from_roots(const std::vector<RootSpec>& roots);

struct TraceResult {
  Rational value = 0;
  Rational numerator = 0;
  Rational denominator = 1;
  /// chowform | sparse-resultant | dense-resultant | oracle
  std::string method;
  std::optional<Integer> e;
  std::optional<Integer> d;
  std::optional<Integer> index;
  std::vector<std::size_t> essential;
};

TraceResult trace_from_chowform(const ChowForm& ch, const Polynomial& p, const Polynomial& q);

struct TraceOptions {
  std::uint64_t seed = 1;
  /// Scale X(T) to the exact resultant so numerator and denominator are
  /// meaningful on their own (slower); the value is unaffected.
  bool normalize = false;
};

/// d * X'(0) / X(0) with X(T) = Res(q + T p, f_1, ..., f_k) and
/// A_0 = support(p) u support(q).
TraceResult trace_sparse(const Polynomial& p, const Polynomial& q, const std::vector<Polynomial>& f,
                         const TraceOptions& options = {});

/// Oracle trace on the torus algebra, or on the affine algebra when the
/// torus algebra is smaller than `expected_dimension` and the affine one
/// matches it.
struct OracleTrace {
  Rational value = 0;
  std::string algebra;
  std::size_t dimension = 0;
};
OracleTrace trace_oracle_for_system(const Polynomial& p, const Polynomial& q, const std::vector<Polynomial>& f,
                                    std::optional<std::size_t> expected_dimension = std::nullopt);

struct FacetFactor {
  /// Inward normal in coordinates of `DenominatorFactorization::chart_basis`.
  Point normal;
  long mu = 0;
  Integer exponent = 0;
  Integer exponent_ambient = 0;
  Rational value = 1;
  bool trivial_face = false;
};

struct DenominatorFactorization {
  Point a;
  Support a_prime;
  std::vector<std::size_t> essential;
  Rational base_value = 1;
  Integer base_exponent = 0;
  std::vector<FacetFactor> facets;
  IntegerMatrix chart_basis;
  bool chart_is_ambient = true;
  /// Product with the in-lattice exponents and with the ambient reading.
  Rational product = 1;
  Rational product_ambient = 1;
  /// Res_{A_0, A_1, ..., A_k}(q, f) for A_0 = A' u {a}.
  Rational resultant = 0;
  bool matches = false;
  bool matches_ambient = false;
};

DenominatorFactorization denominator_factorization(const Point& a, const Polynomial& q,
                                                   const std::vector<Polynomial>& f, std::uint64_t seed = 1);

struct ResidueFactor {
  Point normal;
  long a_omega = 0;     ///< -min over the sum polytope
  long a_dot_omega = 0;
  Integer index = 1;    ///< [omega^perp : L(A_1^omega, ..., A_k^omega)]
  Integer exponent = 0;
  /// max over m of mu^-(m) [w^perp : L] by enumeration (classical reading only).
  std::optional<Integer> enumerated;
  std::optional<Rational> value;
};

struct ResidueDenominator {
  std::vector<ResidueFactor> factors;
  /// Monomial shift applied to each f_i to reach the positive orthant.
  std::vector<Point> shifts;
  bool lattice_point_supports = true;
  Integer total_degree = 0;  ///< sum of exponents
};

/// Denominator exponents obtained by residues of t^m, m in (Delta n Z^k) + a:
/// (1 - <a, w>) [w^perp : L] when <a, w> <= 0, alongside the enumerated
/// maximum it is derived from.
ResidueDenominator residue_denominator_classical(const Point& a, const std::vector<Polynomial>& f,
                                           bool evaluate = false, std::uint64_t seed = 1);
/// Denominator exponents -<a, w> [w^perp : L] when <a, w> <= 0.
ResidueDenominator residue_denominator_refined(const Point& a, const std::vector<Polynomial>& f,
                                            bool evaluate = false, std::uint64_t seed = 1);

struct DenominatorComparison {
  struct Row {
    Point normal;
    long a_dot_omega = 0;
    Integer refined = 0;
    Integer classical = 0;
  };
  std::vector<Row> rows;
  bool refined_le_classical = true;
  /// Strict inequality on every facet with <a, w> <= 0.
  bool strict_where_expected = true;
  Integer total_refined = 0;
  Integer total_classical = 0;
};

DenominatorComparison compare_denominators(const Point& a, const std::vector<Polynomial>& f);

/// Residue of x^beta for a dense system via Res_{D, d}(J_f + T x^beta, f).
TraceResult dense_residue(const Exponent& beta, const std::vector<Polynomial>& f);

struct EulerJacobiReport {
  long rho = 0;
  struct Entry {
    Exponent beta;
    Rational residue;
  };
  std::vector<Entry> below_rho;
  std::vector<Entry> at_rho;
  bool all_below_rho_zero = true;
};

EulerJacobiReport euler_jacobi_check(const std::vector<Polynomial>& f);

}  // namespace sparsetrace
