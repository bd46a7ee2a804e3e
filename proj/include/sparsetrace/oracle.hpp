#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sparsetrace/groebner.hpp"
#include "sparsetrace/polynomial.hpp"
#include "sparsetrace/rational_matrix.hpp"

namespace sparsetrace {

/// Finite-dimensional quotient S/I with its reduced degrevlex Groebner basis
/// and standard monomial basis.
///
/// A torus algebra works in k+1 variables (the last one inverts t_1...t_k);
/// `lift` maps Laurent polynomials in the original k variables into it.
class QuotientAlgebra {
 public:
  enum class Kind { affine, torus };

  /// Throws DegenerateError for a positive-dimensional or unit ideal.
  QuotientAlgebra(std::vector<Polynomial> generators, Kind kind, std::size_t original_vars,
                  const GroebnerOptions& options = {});

  Kind kind() const { return kind_; }
  std::string kind_name() const { return kind_ == Kind::affine ? "affine" : "torus"; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const std::vector<Polynomial>& groebner_basis() const { return basis_; }
  const std::vector<Exponent>& monomial_basis() const { return monomials_; }
  std::size_t dimension() const { return monomials_.size(); }
  std::size_t original_vars() const { return original_vars_; }

  /// Image of a (Laurent, for torus algebras) polynomial in the ring of the algebra.
  Polynomial lift(const Polynomial& g) const;
  Polynomial normal_form(const Polynomial& g) const;
  /// Column j holds the normal form of g * (basis monomial j).
  RationalMatrix mult_matrix(const Polynomial& g) const;

 private:
  std::vector<Polynomial> generators_;
  Kind kind_;
  std::size_t original_vars_;
  std::vector<Polynomial> basis_;
  std::vector<Exponent> monomials_;
};

/// Quotient by f_1, ..., f_k in the polynomial ring.
QuotientAlgebra affine_algebra(const std::vector<Polynomial>& f);
/// Quotient of the Laurent ring: each f_i is shifted to a polynomial and
/// u t_1 ... t_k - 1 is adjoined.
QuotientAlgebra torus_algebra(const std::vector<Polynomial>& f);

RationalMatrix mult_matrix(const Polynomial& g, const QuotientAlgebra& a);

/// trace(M_q^{-1} M_p); ZeroDivisorError when M_q is singular.
Rational trace_oracle(const Polynomial& p, const Polynomial& q, const QuotientAlgebra& a);

/// Sum of h / J_f over the affine zeros.
Rational global_residue_oracle(const Polynomial& h, const std::vector<Polynomial>& f);

/// Sum of p / J^T_f over the torus zeros.
Rational torus_residue_oracle(const Polynomial& p, const std::vector<Polynomial>& f);

}  // namespace sparsetrace
