#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sparsetrace/polytope.hpp"

namespace sparsetrace {

/// Every I with rank L(B_I) = #I - 1 and rank L(B_J) >= #J for each proper
/// J of I. Families here are small, so all subsets are enumerated.
std::vector<std::vector<std::size_t>> essential_subfamilies(const std::vector<Support>& sets);

enum class EssentialStatus { unique, none, not_unique };

struct EssentialResult {
  EssentialStatus status = EssentialStatus::none;
  std::vector<std::size_t> indices;
};

/// The unique essential subfamily, if there is exactly one.
EssentialResult essential_subfamily(const std::vector<Support>& sets);

/// The unique essential subfamily containing `index`.
EssentialResult essential_subfamily_containing(const std::vector<Support>& sets, std::size_t index);

/// Exponent e of a family with a unique essential subfamily: 1 when the
/// saturated essential lattice fills L(B_0, ..., B_s), otherwise the
/// normalized mixed volume of the remaining polytopes projected to the
/// complement. Throws DegenerateError without a unique essential subfamily.
Integer exponent_e(const std::vector<Support>& sets);

/// [Z^k : L(A_0, ..., A_k)] * e.
Integer exponent_d(const std::vector<Support>& sets);

struct FacetExponent {
  Point normal;
  long mu = 0;
  /// Exponent with the orthogonal lattice taken inside L(A_0, ..., A_j).
  Integer delta = 0;
  /// Exponent with the orthogonal lattice taken inside the ambient lattice,
  /// divided by its index over L(A_0, ..., A_j).
  Integer delta_ambient = 0;
  /// Face family has no unique essential subfamily: its resultant is 1.
  bool trivial_face = false;
};

struct DeltaExponents {
  std::vector<std::size_t> essential;
  Integer delta_base = 0;
  std::vector<FacetExponent> facets;
  /// Facet normals are given in coordinates of this lattice chart (the
  /// saturation of L(A_0, ..., A_j)); identity coordinates when j = k.
  IntegerMatrix chart_basis;
  bool chart_is_ambient = true;
};

/// Exponents of the factorization of Res_{A_0, A_1, ..., A_k} where
/// A_0 = A' u {a}, as described for denominators of sparse traces.
DeltaExponents delta_exponents(const Support& a_prime, const Point& a, const std::vector<Support>& supports);

}  // namespace sparsetrace
