#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sparsetrace/int_matrix.hpp"

namespace sparsetrace {

/// Sublattice of Z^k, stored by its row Hermite normal form basis.
class IntegerLattice {
 public:
  explicit IntegerLattice(std::size_t ambient_dim = 0);
  IntegerLattice(std::size_t ambient_dim, const std::vector<IntVector>& generators);

  static IntegerLattice full(std::size_t k);
  static IntegerLattice zero(std::size_t k) { return IntegerLattice(k); }
  static IntegerLattice from_points(std::size_t k, const std::vector<Point>& generators);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntegerMatrix& basis() const { return basis_; }

  /// Coordinates c with sum c_i * basis_i = v, if v lies in the lattice.
  std::optional<IntVector> coordinates(const IntVector& v) const;
  bool contains(const IntVector& v) const { return coordinates(v).has_value(); }
  bool contains(const IntegerLattice& other) const;

  friend bool operator==(const IntegerLattice& a, const IntegerLattice& b) {
    return a.dim_ == b.dim_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t dim_;
  IntegerMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Index of a sublattice; infinite when the ranks differ.
struct LatticeIndex {
  bool infinite = false;
  Integer value = 1;
  std::string to_string() const { return infinite ? "infinite" : value.get_str(); }
};

LatticeIndex lattice_index(const IntegerLattice& ambient, const IntegerLattice& sub);

/// Q-span of `sub` intersected with `ambient`.
IntegerLattice saturate(const IntegerLattice& sub, const IntegerLattice& ambient);

/// Linear lattice spanned by b - b' for b, b' in the same support.
IntegerLattice difference_lattice(const std::vector<Support>& supports);

/// Sublattice of `lattice` orthogonal to `normal`.
IntegerLattice orthogonal_sublattice(const IntegerLattice& lattice, const IntVector& normal);

/// Identifies a lattice of rank r with Z^r through its basis.
class LatticeChart {
 public:
  explicit LatticeChart(IntegerLattice lattice);

  const IntegerLattice& lattice() const { return lattice_; }
  std::size_t rank() const { return lattice_.rank(); }

  /// Throws DomainError if v is not in the lattice.
  IntVector to_chart(const IntVector& v) const;
  Point to_chart(const Point& v) const;
  IntVector from_chart(const IntVector& c) const;
  /// Pulls a linear functional on Z^k back to chart coordinates.
  IntVector pull_back(const IntVector& functional) const;

 private:
  IntegerLattice lattice_;
};

/// Basis of `ambient` whose first rows span `sub` (which must be saturated
/// in `ambient`); the remaining rows span a complement.
IntegerMatrix complete_basis(const IntegerLattice& sub, const IntegerLattice& ambient);

}  // namespace sparsetrace
