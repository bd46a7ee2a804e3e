#include "sparsetrace/lattice.hpp"

#include "sparsetrace/errors.hpp"

namespace sparsetrace {

IntegerLattice::IntegerLattice(std::size_t ambient_dim) : dim_(ambient_dim), basis_(0, ambient_dim) {}

IntegerLattice::IntegerLattice(std::size_t ambient_dim, const std::vector<IntVector>& generators)
    : dim_(ambient_dim) {
  basis_ = hermite_normal_form(IntegerMatrix::from_rows(generators, ambient_dim));
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t j = 0;
    while (basis_(i, j) == 0) ++j;
    pivots_.push_back(j);
  }
}

IntegerLattice IntegerLattice::full(std::size_t k) {
  return IntegerLattice(k, IntegerMatrix::identity(k).row_list());
}

IntegerLattice IntegerLattice::from_points(std::size_t k, const std::vector<Point>& generators) {
  std::vector<IntVector> g;
  for (const auto& p : generators) g.push_back(to_int_vector(p));
  return IntegerLattice(k, g);
}

std::optional<IntVector> IntegerLattice::coordinates(const IntVector& v) const {
  if (v.size() != dim_) throw DomainError("vector length does not match lattice dimension");
  IntVector rest = v;
  IntVector c(basis_.rows());
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t p = pivots_[i];
    // entries before this pivot must already be cleared
    for (std::size_t j = (i ? pivots_[i - 1] + 1 : 0); j < p; ++j)
      if (rest[j] != 0) return std::nullopt;
    if (rest[p] % basis_(i, p) != 0) return std::nullopt;
    c[i] = rest[p] / basis_(i, p);
    for (std::size_t j = p; j < dim_; ++j) rest[j] -= c[i] * basis_(i, j);
  }
  for (const auto& x : rest)
    if (x != 0) return std::nullopt;
  return c;
}

bool IntegerLattice::contains(const IntegerLattice& other) const {
  if (other.dim_ != dim_) return false;
  for (std::size_t i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

LatticeIndex lattice_index(const IntegerLattice& ambient, const IntegerLattice& sub) {
  if (!ambient.contains(sub)) throw DomainError("sublattice is not contained in the ambient lattice");
  LatticeIndex idx;
  if (sub.rank() < ambient.rank()) {
    idx.infinite = true;
    return idx;
  }
  if (ambient.rank() == 0) return idx;
  std::vector<IntVector> coords;
  for (std::size_t i = 0; i < sub.rank(); ++i) coords.push_back(*ambient.coordinates(sub.basis().row(i)));
  idx.value = abs(determinant(IntegerMatrix::from_rows(coords, ambient.rank())));
  return idx;
}

IntegerLattice saturate(const IntegerLattice& sub, const IntegerLattice& ambient) {
  if (!ambient.contains(sub)) throw DomainError("sublattice is not contained in the ambient lattice");
  if (sub.rank() == 0) return IntegerLattice(ambient.ambient_dim());
  std::vector<IntVector> coords;
  for (std::size_t i = 0; i < sub.rank(); ++i) coords.push_back(*ambient.coordinates(sub.basis().row(i)));
  IntegerMatrix c = IntegerMatrix::from_rows(coords, ambient.rank());
  // U c V = D: the first s rows of V^{-1} span the saturation in chart coordinates
  SmithForm s = smith_normal_form(c);
  IntegerMatrix vinv = unimodular_inverse(s.V);
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < s.rank; ++i) {
    IntVector w(ambient.ambient_dim());
    for (std::size_t j = 0; j < ambient.rank(); ++j)
      for (std::size_t l = 0; l < w.size(); ++l) w[l] += vinv(i, j) * ambient.basis()(j, l);
    gens.push_back(w);
  }
  return IntegerLattice(ambient.ambient_dim(), gens);
}

IntegerLattice difference_lattice(const std::vector<Support>& supports) {
  if (supports.empty()) throw DomainError("difference lattice of an empty family");
  std::size_t k = 0;
  bool have_dim = false;
  std::vector<IntVector> gens;
  for (const auto& s : supports) {
    if (s.empty()) throw DomainError("empty support");
    if (!have_dim) {
      k = s.front().size();
      have_dim = true;
    }
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (s[i].size() != k) throw DomainError("support points of different dimension");
      IntVector d(k);
      for (std::size_t j = 0; j < k; ++j) d[j] = s[i][j] - s[0][j];
      gens.push_back(d);
    }
  }
  return IntegerLattice(k, gens);
}

IntegerLattice orthogonal_sublattice(const IntegerLattice& lattice, const IntVector& normal) {
  const std::size_t r = lattice.rank();
  if (r == 0) return lattice;
  IntegerMatrix w(r, 1);
  for (std::size_t i = 0; i < r; ++i) w(i, 0) = dot(lattice.basis().row(i), normal);
  std::vector<IntVector> gens;
  for (const auto& x : left_kernel(w)) {
    IntVector v(lattice.ambient_dim());
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t l = 0; l < v.size(); ++l) v[l] += x[i] * lattice.basis()(i, l);
    gens.push_back(v);
  }
  return IntegerLattice(lattice.ambient_dim(), gens);
}

LatticeChart::LatticeChart(IntegerLattice lattice) : lattice_(std::move(lattice)) {}

IntVector LatticeChart::to_chart(const IntVector& v) const {
  auto c = lattice_.coordinates(v);
  if (!c) throw DomainError("point does not lie in the chart lattice");
  return *c;
}

Point LatticeChart::to_chart(const Point& v) const { return to_point(to_chart(to_int_vector(v))); }

IntVector LatticeChart::from_chart(const IntVector& c) const {
  IntVector v(lattice_.ambient_dim());
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t l = 0; l < v.size(); ++l) v[l] += c[i] * lattice_.basis()(i, l);
  return v;
}

IntVector LatticeChart::pull_back(const IntVector& functional) const {
  IntVector out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = dot(lattice_.basis().row(i), functional);
  return out;
}

IntegerMatrix complete_basis(const IntegerLattice& sub, const IntegerLattice& ambient) {
  if (!ambient.contains(sub)) throw DomainError("sublattice is not contained in the ambient lattice");
  const std::size_t R = ambient.rank();
  IntegerMatrix vinv = IntegerMatrix::identity(R);
  if (sub.rank() > 0) {
    std::vector<IntVector> coords;
    for (std::size_t i = 0; i < sub.rank(); ++i) coords.push_back(*ambient.coordinates(sub.basis().row(i)));
    SmithForm s = smith_normal_form(IntegerMatrix::from_rows(coords, R));
    for (std::size_t i = 0; i < s.rank; ++i)
      if (s.D(i, i) != 1) throw DomainError("sublattice is not saturated");
    vinv = unimodular_inverse(s.V);
  }
  IntegerMatrix out = vinv * ambient.basis();
  return out;
}

}  // namespace sparsetrace
