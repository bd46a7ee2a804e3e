#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "sparsetrace/exponents.hpp"
#include "sparsetrace/polynomial.hpp"
#include "sparsetrace/rational_matrix.hpp"
#include "sparsetrace/univariate.hpp"

namespace sparsetrace {

/// Supports A_0, ..., A_k in Z^k and polynomials with support(f_i) in A_i.
/// The f_0 slot may be left as the zero polynomial when only pencils in
/// the first slot are evaluated.
struct ResultantProblem {
  std::vector<Support> supports;
  std::vector<Polynomial> polys;

  std::size_t ambient_dim() const;
  /// Throws DomainError on arity or containment violations.
  void validate(bool require_f0 = true) const;
};

/// Builds a problem whose supports are the supports of the given polynomials.
ResultantProblem problem_from_polynomials(const std::vector<Polynomial>& polys);

/// Resultant of two univariate Laurent polynomials with respect to the
/// formal supports a, b (Sylvester determinant of the shifted polynomials).
Rational sylvester_resultant(const Support& a, const Polynomial& f, const Support& b, const Polynomial& g);

/// Classical resultant of N homogeneous forms in N variables (Macaulay
/// quotient det M / det M'). Throws DegenerateError when no variable order
/// gives det M' != 0.
Rational macaulay_resultant_forms(const std::vector<Polynomial>& forms, const std::vector<long>& degrees);

/// Classical resultant of n+1 polynomials in n variables, each read as a
/// dense polynomial of the stated total degree (homogenized with x_0).
Rational macaulay_resultant(const std::vector<long>& degrees, const std::vector<Polynomial>& polys);

/// Homogenizes f to total degree d with a new first variable.
Polynomial homogenize(const Polynomial& f, long d);

/// Canny-Emiris matrix for an essential family A_0, ..., A_r in Z^r with
/// f_1, ..., f_r fixed. Rows of f_0 are kept symbolic: `schur(f0)` returns
/// the m x m Schur complement after eliminating every other row, so that
/// det(schur(f0)) = c * Res(f0, f_1, ..., f_r) with c independent of f0.
class CannyEmirisMatrix {
 public:
  CannyEmirisMatrix(std::vector<Support> supports, std::vector<Polynomial> others, std::mt19937_64& rng,
                    int max_retries = 10);

  std::size_t size() const { return columns_.size(); }
  std::size_t f0_rows() const { return f0_shifts_.size(); }
  int attempts() const { return attempts_; }

  RationalMatrix schur(const Polynomial& f0) const;

  /// Plain-text dump: lifting, column monomials, row labels and entries
  /// (the f0 rows use the given polynomial).
  std::string dump(const Polynomial& f0) const;

 private:
  struct SparseRow {
    std::vector<std::pair<std::size_t, Rational>> entries;
  };
  bool build(std::mt19937_64& rng);
  SparseRow row_of(const Polynomial& f, const Point& shift) const;

  std::vector<Support> supports_;
  std::vector<Polynomial> others_;
  std::vector<std::vector<long>> lifting_;
  std::vector<Rational> delta_;
  std::vector<Point> columns_;
  std::map<Point, std::size_t> column_index_;
  // rows: (polynomial index, shift)
  std::vector<std::pair<std::size_t, Point>> row_labels_;
  std::vector<Point> f0_shifts_;
  std::vector<SparseRow> pivot_rows_;
  std::vector<std::size_t> pivot_cols_;
  std::vector<std::size_t> free_cols_;
  int attempts_ = 0;
};

/// Exact sparse resultant Res_{A_0, ..., A_k}(f_0, ..., f_k), up to sign.
/// Families without a unique essential subfamily give 1.
Rational sparse_resultant(const ResultantProblem& problem, std::mt19937_64& rng);
Rational ce_resultant(const ResultantProblem& problem, std::uint64_t seed);

/// Res_{A_0, ..., A_k}(t^b, f_1, ..., f_k) from the facet product; b in A_0.
Rational monomial_resultant(const ResultantProblem& problem, const Point& b, std::mt19937_64& rng);

/// X(T) = Res(q + T p, f_1, ..., f_k) over the essential subfamily
/// containing the first slot. Unnormalized results are correct up to a
/// nonzero T-independent constant; normalized ones up to sign.
TPencilPolynomial resultant_pencil(const ResultantProblem& problem, const Polynomial& q, const Polynomial& p,
                                   std::mt19937_64& rng, bool normalized = false);
TPencilPolynomial resultant_pencil(const ResultantProblem& problem, const Polynomial& q, const Polynomial& p,
                                   std::uint64_t seed, bool normalized = false);

/// X'(0) / X(0); throws ZeroDivisorError when X(0) = 0.
Rational log_derivative_at_zero(const TPencilPolynomial& x);

/// sum_a p_a dRes/dc_{0a}(q, f) = X'(0) for the normalized pencil.
Rational directional_derivative(const ResultantProblem& problem, const Polynomial& q, const Polynomial& p,
                                std::uint64_t seed);

/// Resultant of the face system (f_1^w, ..., f_k^w) for a facet normal w
/// of P_1 + ... + P_k, computed in coordinates of H^w.
Rational facet_resultant(const std::vector<Support>& supports, const std::vector<Polynomial>& polys,
                         const Point& omega, std::mt19937_64& rng);
Rational facet_resultant(const std::vector<Support>& supports, const std::vector<Polynomial>& polys,
                         const Point& omega, std::uint64_t seed);

/// Res_{D, d_1, ..., d_n}(g, f_1, ..., f_n) with each f_i read at its
/// total degree and g at degree D.
Rational dense_resultant_with(const Polynomial& g, long big_d, const std::vector<Polynomial>& f);

/// Res_{d_1, ..., d_n}(f_1^0, ..., f_n^0) of the leading forms.
Rational leading_forms_resultant(const std::vector<Polynomial>& f);

/// Disc(f) = Res_{rho, d}(J_f, f) / Res_d(f^0); throws DegenerateError when
/// the leading-form resultant vanishes.
Rational discriminant_dense(const std::vector<Polynomial>& f);

}  // namespace sparsetrace
