#include <gtest/gtest.h>

#include <random>

#include "sparsetrace/errors.hpp"
#include "sparsetrace/lattice.hpp"

using namespace sparsetrace;

namespace {

IntegerMatrix M(const std::vector<std::vector<long>>& rows) {
  std::vector<Point> pts(rows.begin(), rows.end());
  return IntegerMatrix::from_points(pts, rows.empty() ? 0 : rows[0].size());
}

void expect_smith(const IntegerMatrix& m) {
  SmithForm s = smith_normal_form(m);
  EXPECT_EQ(s.U * m * s.V, s.D);
  EXPECT_EQ(abs(determinant(s.U)), 1);
  EXPECT_EQ(abs(determinant(s.V)), 1);
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j)
      if (i != j) EXPECT_EQ(s.D(i, j), 0);
  for (std::size_t i = 0; i + 1 < s.rank; ++i) EXPECT_EQ(s.D(i + 1, i + 1) % s.D(i, i), 0);
  for (std::size_t i = 0; i < s.rank; ++i) EXPECT_GT(s.D(i, i), 0);
}

}  // namespace

TEST(Smith, Examples) {
  SmithForm a = smith_normal_form(M({{2, 0}, {0, 2}}));
  EXPECT_EQ(a.D, M({{2, 0}, {0, 2}}));
  SmithForm b = smith_normal_form(M({{2, 4}, {6, 8}}));
  EXPECT_EQ(b.D, M({{2, 0}, {0, 4}}));
  SmithForm c = smith_normal_form(IntegerMatrix::identity(3));
  EXPECT_EQ(c.D, IntegerMatrix::identity(3));
  expect_smith(M({{2, 4}, {6, 8}}));
}

TEST(Smith, RandomMatricesSatisfyContract) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-12, 12), sz(1, 4);
  for (int t = 0; t < 60; ++t) {
    std::size_t r = sz(rng), c = sz(rng);
    IntegerMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    expect_smith(m);
  }
}

TEST(Hermite, EchelonAndSpan) {
  IntegerMatrix h = hermite_normal_form(M({{2, 4}, {6, 8}, {4, 4}}));
  EXPECT_EQ(h, M({{2, 0}, {0, 4}}));
  EXPECT_EQ(hermite_normal_form(M({{0, 0}})).rows(), 0u);
  EXPECT_EQ(matrix_rank(M({{1, 2, 3}, {2, 4, 6}})), 1u);
}

TEST(Determinant, Bareiss) {
  EXPECT_EQ(determinant(M({{2, 4}, {6, 8}})), -8);
  EXPECT_EQ(determinant(M({{0, 1, 2}, {1, 0, 3}, {4, -3, 8}})), -2);
  EXPECT_EQ(determinant(M({{1, 2}, {2, 4}})), 0);
}

TEST(Kernel, LeftKernel) {
  auto k = left_kernel(M({{1, 2}, {2, 4}, {0, 1}}));
  ASSERT_EQ(k.size(), 1u);
  IntegerMatrix row = IntegerMatrix::from_rows(k, 3);
  EXPECT_EQ(row * M({{1, 2}, {2, 4}, {0, 1}}), IntegerMatrix(1, 2));
}

TEST(Lattice, DifferenceLatticeOfCylinderSystem) {
  std::vector<Support> a = {
      {{0, 0, 0}, {0, 2, 0}},
      {{0, 0, 0}, {2, 0, 0}, {0, 2, 0}},
      {{0, 0, 0}, {0, 2, 0}, {0, 0, 2}},
      {{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}},
  };
  IntegerLattice l = difference_lattice(a);
  EXPECT_EQ(l.rank(), 3u);
  EXPECT_EQ(lattice_index(IntegerLattice::full(3), l).value, 8);
  std::vector<Support> shifted = a;
  for (auto& s : shifted)
    for (auto& p : s)
      for (auto& x : p) x += 1;
  EXPECT_EQ(difference_lattice(shifted), l);
}

TEST(Lattice, DifferenceLatticeSmallCases) {
  EXPECT_EQ(difference_lattice({{{0}}}).rank(), 0u);
  EXPECT_EQ(difference_lattice({{{0, 0}, {1, 0}}, {{0, 0}, {0, 1}}}), IntegerLattice::full(2));
  EXPECT_THROW(difference_lattice({}), DomainError);
}

TEST(Lattice, Index) {
  IntegerLattice even = IntegerLattice::from_points(2, {{1, 1}, {0, 2}});
  EXPECT_EQ(lattice_index(IntegerLattice::full(2), even).value, 2);
  EXPECT_EQ(lattice_index(even, even).value, 1);
  IntegerLattice line = IntegerLattice::from_points(2, {{1, 0}});
  EXPECT_TRUE(lattice_index(IntegerLattice::full(2), line).infinite);
  EXPECT_THROW(lattice_index(even, IntegerLattice::full(2)), DomainError);
}

TEST(Lattice, IndexIsMultiplicative) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> d(-4, 4);
  for (int t = 0; t < 30; ++t) {
    std::vector<Point> g = {{d(rng), d(rng), d(rng)}, {d(rng), d(rng), d(rng)}, {d(rng), d(rng), d(rng)}};
    IntegerLattice b = IntegerLattice::from_points(3, g);
    if (b.rank() < 3) continue;
    std::vector<IntVector> h;
    for (std::size_t i = 0; i < 3; ++i) {
      IntVector r = b.basis().row(i);
      for (auto& x : r) x *= (i + 2);
      h.push_back(r);
    }
    IntegerLattice c(3, h);
    auto full = IntegerLattice::full(3);
    EXPECT_EQ(lattice_index(full, c).value, lattice_index(full, b).value * lattice_index(b, c).value);
  }
}

TEST(Lattice, Saturation) {
  EXPECT_EQ(saturate(IntegerLattice::from_points(1, {{2}}), IntegerLattice::full(1)), IntegerLattice::full(1));
  EXPECT_EQ(saturate(IntegerLattice::from_points(2, {{2, 0}}), IntegerLattice::full(2)),
            IntegerLattice::from_points(2, {{1, 0}}));
  IntegerLattice even = IntegerLattice::from_points(2, {{1, 1}, {0, 2}});
  EXPECT_EQ(saturate(even, even), even);
  IntegerLattice s = saturate(IntegerLattice::from_points(3, {{2, 4, 6}, {0, 3, 3}}), IntegerLattice::full(3));
  EXPECT_EQ(saturate(s, IntegerLattice::full(3)), s);
  EXPECT_EQ(lattice_index(s, IntegerLattice::from_points(3, {{2, 4, 6}, {0, 3, 3}})).value, 6);
}

TEST(Lattice, OrthogonalSublatticeAndCompletion) {
  IntegerLattice h = orthogonal_sublattice(IntegerLattice::full(3), {1, 1, 1});
  EXPECT_EQ(h.rank(), 2u);
  EXPECT_EQ(saturate(h, IntegerLattice::full(3)), h);
  IntegerLattice even = IntegerLattice::from_points(2, {{2, 0}, {0, 2}});
  EXPECT_EQ(orthogonal_sublattice(even, {1, 0}), IntegerLattice::from_points(2, {{0, 2}}));
  IntegerMatrix b = complete_basis(IntegerLattice::from_points(3, {{1, 1, 0}}), IntegerLattice::full(3));
  EXPECT_EQ(abs(determinant(b)), 1);
  EXPECT_TRUE(IntegerLattice::from_points(3, {{1, 1, 0}}).contains(b.row(0)));
}

TEST(Lattice, Charts) {
  LatticeChart c(IntegerLattice::from_points(2, {{2, 0}, {0, 2}}));
  EXPECT_EQ(c.to_chart(Point{4, -2}), (Point{2, -1}));
  EXPECT_THROW(c.to_chart(Point{1, 0}), DomainError);
  EXPECT_EQ(c.from_chart(IntVector{1, 1}), (IntVector{2, 2}));
}
