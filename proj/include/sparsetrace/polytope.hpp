#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sparsetrace/lattice.hpp"

namespace sparsetrace {

/// Largest ambient dimension accepted by hull and volume routines.
inline constexpr std::size_t kMaxPolytopeDimension = 4;

/// Facet {x : <normal, x> = -offset}; the polytope lies in <normal, x> >= -offset.
struct Facet {
  Point normal;
  long offset = 0;
  friend bool operator==(const Facet&, const Facet&) = default;
  friend auto operator<=>(const Facet&, const Facet&) = default;
};

long inner(const Point& a, const Point& b);

/// Affine lattice chart of the affine span of a point set: origin plus the
/// saturated difference lattice.
class AffineChart {
 public:
  explicit AffineChart(const Support& points);
  std::size_t dimension() const { return chart_.rank(); }
  std::size_t ambient_dim() const { return origin_.size(); }
  const Point& origin() const { return origin_; }
  const LatticeChart& chart() const { return chart_; }
  /// Coordinates of p - origin; throws DomainError off the span.
  Point to_chart(const Point& p) const;
  Point from_chart(const Point& c) const;

 private:
  Point origin_;
  LatticeChart chart_;
};

struct Hull {
  std::size_t dimension = 0;
  /// Vertices in ambient coordinates, sorted lexicographically.
  std::vector<Point> vertices;
  /// Facets; ambient coordinates when full-dimensional, span coordinates
  /// of `span_basis` (relative to `origin`) otherwise.
  std::vector<Facet> facets;
  bool full_dimensional = false;
  Point origin;
  IntegerMatrix span_basis;
};

Hull convex_hull(const Support& points);
Support minkowski_sum(const Support& a, const Support& b);
Support minkowski_sum(const std::vector<Support>& summands);

/// Minimum of <w, x> over the set.
long support_min(const Support& a, const Point& w);
/// Points of `a` minimizing <w, .> and a_A(w) = -min.
std::pair<Support, long> face_data(const Support& a, const Point& w);

/// Rank of the lattice spanned by the differences within each set.
std::size_t family_rank(const std::vector<Support>& sets);

/// Facets of conv(S_1) + ... + conv(S_m), which must be full-dimensional in
/// Z^r (r = point length). Normals are primitive and inward, sorted.
std::vector<Facet> facets_of_sum(const std::vector<Support>& summands);

/// Normalized volume r! vol of the Minkowski sum in Z^r; 0 when it is not
/// full-dimensional.
Integer normalized_volume(const std::vector<Support>& summands);

/// Mixed volume of r polytopes in Z^r, normalized so that r unit simplices
/// give 1.
Integer mixed_volume(const std::vector<Support>& polytopes);

/// Mixed volume relative to a rank-r lattice containing all within-set
/// differences.
Integer mixed_volume(const std::vector<Support>& polytopes, const IntegerLattice& lattice);

/// Integer points of conv(points).
Support lattice_points(const Support& points);

/// Vertices of conv(points) (sorted).
Support polytope_vertices(const Support& points);

}  // namespace sparsetrace
