#pragma once

#include <cstddef>
#include <vector>

#include "sparsetrace/polynomial.hpp"

namespace sparsetrace {

/// Degree reverse lexicographic order: a < b.
struct DegRevLexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Leading exponent of a nonzero polynomial in degrevlex.
Exponent leading_exponent(const Polynomial& f);

struct GroebnerOptions {
  /// Upper bound on S-polynomials processed; UnsupportedError beyond it.
  std::size_t max_pairs = 200000;
};

/// Reduced Groebner basis (monic, degrevlex) of the ideal generated by
/// polynomial (non-Laurent) generators. The unit ideal gives {1}; the zero
/// ideal gives the empty basis.
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens, const GroebnerOptions& options = {});

/// Remainder of f on division by a Groebner basis (degrevlex).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

}  // namespace sparsetrace
