#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "sparsetrace/errors.hpp"
#include "sparsetrace/polytope.hpp"

using namespace sparsetrace;

namespace {

const Support kPentagonA1 = make_support({{1, 0}, {1, 1}, {0, 2}});
const Support kPentagonA2 = make_support({{0, 1}, {1, 1}, {2, 0}});

// Twice the area by gift wrapping and the shoelace formula.
long twice_area(Support pts) {
  pts = make_support(pts);
  if (pts.size() < 3) return 0;
  auto cross = [](const Point& o, const Point& a, const Point& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<Point> hull;
  for (int pass = 0; pass < 2; ++pass) {
    std::size_t start = hull.size();
    for (const auto& p : pass == 0 ? pts : Support(pts.rbegin(), pts.rend())) {
      while (hull.size() >= start + 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
      hull.push_back(p);
    }
    hull.pop_back();
  }
  long s = 0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& a = hull[i];
    const auto& b = hull[(i + 1) % hull.size()];
    s += a[0] * b[1] - a[1] * b[0];
  }
  return std::labs(s);
}

Support random_support(std::mt19937_64& rng, std::size_t k, int n, long box) {
  std::uniform_int_distribution<long> d(0, box);
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) {
    Point p(k);
    for (auto& x : p) x = d(rng);
    pts.push_back(p);
  }
  return make_support(pts);
}

}  // namespace

TEST(Hull, PentagonVertices) {
  Hull h = convex_hull(minkowski_sum(kPentagonA1, kPentagonA2));
  EXPECT_EQ(h.vertices, (Support{{0, 3}, {1, 1}, {1, 3}, {3, 0}, {3, 1}}));
  EXPECT_TRUE(h.full_dimensional);
  EXPECT_EQ(h.facets.size(), 5u);
  for (const auto& f : h.facets) {
    for (const auto& p : minkowski_sum(kPentagonA1, kPentagonA2)) EXPECT_GE(inner(f.normal, p) + f.offset, 0);
  }
  EXPECT_EQ(facets_of_sum({kPentagonA1, kPentagonA2}), h.facets);
}

TEST(Hull, PointAndSegment) {
  Hull p = convex_hull({{3, 4}});
  EXPECT_EQ(p.vertices.size(), 1u);
  EXPECT_TRUE(p.facets.empty());
  Hull s = convex_hull({{0, 0}, {1, 0}, {2, 0}});
  EXPECT_EQ(s.dimension, 1u);
  EXPECT_EQ(s.vertices, (Support{{0, 0}, {2, 0}}));
  EXPECT_EQ(s.facets.size(), 2u);
}

TEST(Hull, SupportPointsSatisfyAllFacets) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    Support s = random_support(rng, 3, 7, 3);
    Hull h = convex_hull(s);
    if (!h.full_dimensional) continue;
    for (const auto& f : h.facets) {
      auto [face, a] = face_data(s, f.normal);
      EXPECT_EQ(a, f.offset);
      for (const auto& p : s) EXPECT_EQ(inner(f.normal, p) + a == 0, std::count(face.begin(), face.end(), p) == 1);
    }
  }
}

TEST(Hull, RejectsHighDimension) {
  EXPECT_THROW(convex_hull({{0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}}), UnsupportedError);
}

TEST(Minkowski, Examples) {
  EXPECT_EQ(minkowski_sum({{0, 0}}, kPentagonA1), kPentagonA1);
  EXPECT_EQ(minkowski_sum({{0, 0}, {1, 0}}, {{0, 0}, {0, 1}}), (Support{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
}

TEST(FaceData, PentagonExamples) {
  auto [f2, a2] = face_data(kPentagonA2, {-1, 0});
  EXPECT_EQ(f2, (Support{{2, 0}}));
  EXPECT_EQ(a2, 2);
  auto [f1, a1] = face_data(kPentagonA1, {-1, -1});
  EXPECT_EQ(f1, (Support{{0, 2}, {1, 1}}));
  EXPECT_EQ(a1, 2);
}

TEST(MixedVolume, Examples) {
  Support square = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  EXPECT_EQ(mixed_volume({square, square}), 2);
  EXPECT_EQ(mixed_volume({square, {{1, 1}}}), 0);
  // independently confirmed by the quotient-algebra dimension in test_oracle
  EXPECT_EQ(mixed_volume({kPentagonA1, kPentagonA2}), 3);
  Support simplex = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  EXPECT_EQ(mixed_volume({simplex, simplex, simplex}), 1);
  Support cube;
  for (long a = 0; a < 2; ++a)
    for (long b = 0; b < 2; ++b)
      for (long c = 0; c < 2; ++c) cube.push_back({a, b, c});
  EXPECT_EQ(mixed_volume({cube, cube, cube}), 6);
  EXPECT_EQ(normalized_volume({cube}), 6);
  EXPECT_THROW(mixed_volume({square}), DomainError);
}

TEST(MixedVolume, RelativeToLattice) {
  std::vector<Support> a = {
      {{0, 0, 0}, {2, 0, 0}, {0, 2, 0}},
      {{0, 0, 0}, {0, 2, 0}, {0, 0, 2}},
      {{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}},
  };
  EXPECT_EQ(mixed_volume(a), 8);
  IntegerLattice even = IntegerLattice::from_points(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  EXPECT_EQ(mixed_volume(a, even), 1);
}

TEST(MixedVolume, AgreesWithShoelaceInThePlane) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    Support p = random_support(rng, 2, 4, 3), q = random_support(rng, 2, 4, 3);
    long expected = twice_area(minkowski_sum(p, q)) - twice_area(p) - twice_area(q);
    ASSERT_EQ(expected % 2, 0);
    EXPECT_EQ(mixed_volume({p, q}), expected / 2);
    EXPECT_EQ(normalized_volume({p, q}), twice_area(minkowski_sum(p, q)));
  }
}

TEST(MixedVolume, SymmetricAndMultilinear) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 10; ++t) {
    Support p = random_support(rng, 3, 4, 2), pp = random_support(rng, 3, 3, 2);
    Support q = random_support(rng, 3, 4, 2), r = random_support(rng, 3, 4, 2);
    Integer m = mixed_volume({p, q, r});
    EXPECT_EQ(m, mixed_volume({q, r, p}));
    EXPECT_EQ(m, mixed_volume({r, p, q}));
    EXPECT_EQ(mixed_volume({minkowski_sum(p, pp), q, r}), m + mixed_volume({pp, q, r}));
  }
}

TEST(MixedVolume, FourDimensionalCube) {
  Support cube;
  for (int m = 0; m < 16; ++m) cube.push_back({m & 1, (m >> 1) & 1, (m >> 2) & 1, (m >> 3) & 1});
  EXPECT_EQ(normalized_volume({cube}), 24);
  EXPECT_EQ(mixed_volume({cube, cube, cube, cube}), 24);
}

TEST(LatticePoints, Triangle) {
  Support t = {{0, 0}, {2, 0}, {0, 2}};
  EXPECT_EQ(lattice_points(t).size(), 6u);
  EXPECT_EQ(lattice_points({{0, 0}, {2, 2}}).size(), 3u);
  EXPECT_EQ(lattice_points({{0, 0}, {2, 1}}).size(), 2u);
}

TEST(Support, ProductSupportIsContainedInMinkowskiSum) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 10; ++t) {
    Support a = random_support(rng, 2, 4, 4), b = random_support(rng, 2, 4, 4);
    Support s = minkowski_sum(a, b);
    // with generic coefficients the vertices always survive
    for (const auto& v : polytope_vertices(s)) EXPECT_TRUE(std::binary_search(s.begin(), s.end(), v));
  }
}
