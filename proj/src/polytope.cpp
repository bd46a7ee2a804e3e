#include "sparsetrace/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sparsetrace/errors.hpp"

namespace sparsetrace {

long inner(const Point& a, const Point& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

void check_dimension(std::size_t k) {
  if (k > kMaxPolytopeDimension)
    throw UnsupportedError("polytope dimension " + std::to_string(k) + " exceeds the supported maximum " +
                           std::to_string(kMaxPolytopeDimension));
}

Point primitive(Point v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, std::labs(x));
  if (g > 1)
    for (long& x : v) x /= g;
  return v;
}

Point difference(const Point& a, const Point& b) {
  Point d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

// Primitive directions (up to sign) of all within-set differences.
std::vector<Point> edge_directions(const std::vector<Support>& sets) {
  std::set<Point> dirs;
  for (const auto& s : sets)
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        Point d = primitive(difference(s[j], s[i]));
        auto nz = std::find_if(d.begin(), d.end(), [](long x) { return x != 0; });
        if (nz == d.end()) continue;
        if (*nz < 0)
          for (long& x : d) x = -x;
        dirs.insert(d);
      }
  return {dirs.begin(), dirs.end()};
}

// Primitive generator of the orthogonal complement of r-1 vectors in Z^r,
// or the zero vector if they are dependent.
Point normal_of(const std::vector<const Point*>& rows, std::size_t r) {
  Point n(r, 0);
  if (r == 1) {
    n[0] = 1;
    return n;
  }
  IntegerMatrix minor(r - 1, r - 1);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i + 1 < r; ++i) {
      std::size_t c = 0;
      for (std::size_t l = 0; l < r; ++l)
        if (l != j) minor(i, c++) = (*rows[i])[l];
    }
    Integer d = determinant(minor);
    n[j] = (j % 2 == 0 ? d : -d).get_si();
  }
  return primitive(n);
}

std::size_t rank_of_points(const std::vector<Point>& v, std::size_t k) {
  if (v.empty()) return 0;
  return matrix_rank(IntegerMatrix::from_points(v, k));
}

std::vector<Point> within_differences(const std::vector<Support>& sets) {
  std::vector<Point> diffs;
  for (const auto& s : sets)
    for (std::size_t i = 1; i < s.size(); ++i) diffs.push_back(difference(s[i], s[0]));
  return diffs;
}

std::size_t ambient_of(const std::vector<Support>& sets) {
  for (const auto& s : sets)
    if (!s.empty()) return s.front().size();
  throw DomainError("family of empty supports");
}

// Face of each summand and the rank of their combined differences.
std::size_t face_rank(const std::vector<Support>& summands, const Point& w, std::size_t k) {
  std::vector<Support> faces;
  for (const auto& s : summands) faces.push_back(face_data(s, w).first);
  return rank_of_points(within_differences(faces), k);
}

// Translates each set by its first point and maps it into the chart.
std::vector<Support> to_chart_family(const std::vector<Support>& sets, const LatticeChart& chart) {
  std::vector<Support> out;
  for (const auto& s : sets) {
    std::vector<Point> pts;
    for (const auto& p : s) pts.push_back(chart.to_chart(difference(p, s.front())));
    out.push_back(make_support(std::move(pts)));
  }
  return out;
}

}  // namespace

AffineChart::AffineChart(const Support& points)
    : origin_(points.empty() ? throw DomainError("empty point set") : points.front()),
      chart_(saturate(difference_lattice({points}), IntegerLattice::full(points.front().size()))) {}

Point AffineChart::to_chart(const Point& p) const { return chart_.to_chart(difference(p, origin_)); }

Point AffineChart::from_chart(const Point& c) const {
  Point d = to_point(chart_.from_chart(to_int_vector(c)));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] += origin_[i];
  return d;
}

Support minkowski_sum(const Support& a, const Support& b) {
  std::vector<Point> out;
  for (const auto& x : a)
    for (const auto& y : b) {
      if (x.size() != y.size()) throw DomainError("Minkowski sum of sets of different dimension");
      Point s(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
      out.push_back(std::move(s));
    }
  return make_support(std::move(out));
}

Support minkowski_sum(const std::vector<Support>& summands) {
  if (summands.empty()) throw DomainError("Minkowski sum of an empty family");
  Support acc = summands.front();
  for (std::size_t i = 1; i < summands.size(); ++i) acc = minkowski_sum(acc, summands[i]);
  return acc;
}

long support_min(const Support& a, const Point& w) {
  if (a.empty()) throw DomainError("support function of an empty set");
  long m = inner(a.front(), w);
  for (const auto& p : a) m = std::min(m, inner(p, w));
  return m;
}

std::pair<Support, long> face_data(const Support& a, const Point& w) {
  long m = support_min(a, w);
  Support face;
  for (const auto& p : a)
    if (inner(p, w) == m) face.push_back(p);
  return {face, -m};
}

std::size_t family_rank(const std::vector<Support>& sets) {
  return rank_of_points(within_differences(sets), ambient_of(sets));
}

std::vector<Facet> facets_of_sum(const std::vector<Support>& summands) {
  const std::size_t r = ambient_of(summands);
  check_dimension(r);
  if (family_rank(summands) != r) throw DomainError("Minkowski sum is not full-dimensional");
  std::vector<Point> dirs = edge_directions(summands);
  std::set<Point> normals;
  std::vector<std::size_t> pick(r - 1);
  // enumerate (r-1)-subsets of the edge directions
  auto consider = [&](const Point& n) {
    for (int sign : {1, -1}) {
      Point w = n;
      if (sign < 0)
        for (long& x : w) x = -x;
      if (normals.count(w)) continue;
      if (face_rank(summands, w, r) + 1 == r) normals.insert(w);
    }
  };
  if (r == 1) {
    consider(Point{1});
  } else {
    std::vector<const Point*> rows(r - 1);
    std::iota(pick.begin(), pick.end(), 0);
    if (dirs.size() >= r - 1) {
      while (true) {
        for (std::size_t i = 0; i + 1 < r; ++i) rows[i] = &dirs[pick[i]];
        Point n = normal_of(rows, r);
        if (std::any_of(n.begin(), n.end(), [](long x) { return x != 0; })) consider(n);
        std::size_t i = r - 1;
        while (i > 0 && pick[i - 1] == dirs.size() - (r - 1) + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < r - 1; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }
  std::vector<Facet> out;
  for (const auto& w : normals) {
    long off = 0;
    for (const auto& s : summands) off -= support_min(s, w);
    out.push_back({w, off});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer normalized_volume(const std::vector<Support>& summands) {
  const std::size_t r = ambient_of(summands);
  check_dimension(r);
  if (r == 0) return 1;
  if (family_rank(summands) != r) return 0;
  if (r == 1) {
    long total = 0;
    for (const auto& s : summands) total += s.back()[0] - s.front()[0];
    return total;
  }
  Point v0(r, 0);
  for (const auto& s : summands)
    for (std::size_t i = 0; i < r; ++i) v0[i] += s.front()[i];
  Integer total = 0;
  for (const auto& f : facets_of_sum(summands)) {
    long h = inner(f.normal, v0) + f.offset;
    if (h == 0) continue;
    std::vector<Support> faces;
    for (const auto& s : summands) faces.push_back(face_data(s, f.normal).first);
    LatticeChart hyper(orthogonal_sublattice(IntegerLattice::full(r), to_int_vector(f.normal)));
    total += Integer(h) * normalized_volume(to_chart_family(faces, hyper));
  }
  return total;
}

Integer mixed_volume(const std::vector<Support>& polytopes) {
  const std::size_t r = ambient_of(polytopes);
  if (polytopes.size() != r)
    throw DomainError("mixed volume needs as many polytopes as the lattice rank");
  check_dimension(r);
  for (const auto& p : polytopes)
    if (p.empty()) throw DomainError("empty support in mixed volume");
  if (r == 0) return 1;
  Integer total = 0;
  for (unsigned mask = 1; mask < (1u << r); ++mask) {
    std::vector<Support> sub;
    for (std::size_t i = 0; i < r; ++i)
      if (mask & (1u << i)) sub.push_back(polytopes[i]);
    Integer v = normalized_volume(sub);
    if ((r - sub.size()) % 2 == 0) total += v;
    else total -= v;
  }
  Integer fact = 1;
  for (std::size_t i = 2; i <= r; ++i) fact *= static_cast<unsigned long>(i);
  if (total % fact != 0) throw DomainError("mixed volume is not an integer");
  return total / fact;
}

Integer mixed_volume(const std::vector<Support>& polytopes, const IntegerLattice& lattice) {
  if (polytopes.size() != lattice.rank())
    throw DomainError("mixed volume needs as many polytopes as the lattice rank");
  const std::size_t k = lattice.ambient_dim();
  IntegerLattice sat = saturate(lattice, IntegerLattice::full(k));
  LatticeChart chart(sat);
  std::vector<Support> mapped;
  for (const auto& s : polytopes) {
    if (s.empty()) throw DomainError("empty support in mixed volume");
    std::vector<Point> pts;
    for (const auto& p : s) {
      IntVector d = to_int_vector(difference(p, s.front()));
      auto c = sat.coordinates(d);
      if (!c) throw DomainError("support does not lie in the lattice span");
      pts.push_back(to_point(*c));
    }
    mapped.push_back(make_support(std::move(pts)));
  }
  if (lattice.rank() == 0) return 1;
  Integer mv = mixed_volume(mapped);
  Integer idx = lattice_index(sat, lattice).value;
  if (mv % idx != 0) throw DomainError("mixed volume relative to the lattice is not an integer");
  return mv / idx;
}

namespace {

std::vector<Point> chart_points(const Support& points, const AffineChart& chart) {
  std::vector<Point> local;
  for (const auto& p : points) local.push_back(chart.to_chart(p));
  return local;
}

}  // namespace

Hull convex_hull(const Support& input) {
  if (input.empty()) throw DomainError("convex hull of an empty set");
  Support points = make_support(input);
  const std::size_t k = points.front().size();
  check_dimension(k);
  Hull h;
  AffineChart chart(points);
  h.dimension = chart.dimension();
  h.origin = chart.origin();
  h.span_basis = chart.chart().lattice().basis();
  h.full_dimensional = h.dimension == k;
  if (h.dimension == 0) {
    h.vertices = points;
    return h;
  }
  std::vector<Point> local = chart_points(points, chart);
  std::vector<Facet> local_facets = facets_of_sum({make_support(local)});
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<Point> tight;
    for (const auto& f : local_facets)
      if (inner(f.normal, local[i]) + f.offset == 0) tight.push_back(f.normal);
    if (rank_of_points(tight, h.dimension) == h.dimension) h.vertices.push_back(points[i]);
  }
  h.facets = h.full_dimensional ? facets_of_sum({points}) : local_facets;
  return h;
}

Support polytope_vertices(const Support& points) { return convex_hull(points).vertices; }

Support lattice_points(const Support& input) {
  if (input.empty()) return {};
  Support points = make_support(input);
  const std::size_t k = points.front().size();
  check_dimension(k);
  AffineChart chart(points);
  std::vector<Facet> facets;
  if (chart.dimension() > 0) facets = facets_of_sum({make_support(chart_points(points, chart))});
  Point lo = points.front(), hi = points.front();
  for (const auto& p : points)
    for (std::size_t i = 0; i < k; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  Support out;
  Point x = lo;
  while (true) {
    bool inside = true;
    Point c;
    try {
      c = chart.to_chart(x);
    } catch (const DomainError&) {
      inside = false;
    }
    for (std::size_t f = 0; inside && f < facets.size(); ++f)
      if (inner(facets[f].normal, c) + facets[f].offset < 0) inside = false;
    if (inside) out.push_back(x);
    std::size_t i = 0;
    while (i < k && x[i] == hi[i]) {
      x[i] = lo[i];
      ++i;
    }
    if (i == k) break;
    ++x[i];
  }
  return out;
}

}  // namespace sparsetrace
