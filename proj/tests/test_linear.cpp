#include <gtest/gtest.h>

#include <random>

#include "sparsetrace/errors.hpp"
#include "sparsetrace/rational_matrix.hpp"
#include "sparsetrace/simplex.hpp"
#include "sparsetrace/univariate.hpp"

using namespace sparsetrace;

namespace {

RationalMatrix from(const std::vector<std::vector<long>>& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

std::vector<Rational> vec(const std::vector<long>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(RationalMatrix, Determinants) {
  EXPECT_EQ(determinant(from({{2, 1}, {7, 4}})), 1);
  EXPECT_EQ(determinant(from({{0, 1}, {1, 0}})), -1);
  EXPECT_EQ(determinant(from({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})), 0);
  RationalMatrix h(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) h(i, j) = make_rational(1, static_cast<long>(i + j + 1));
  EXPECT_EQ(determinant(h), make_rational(1, 2160));
  EXPECT_EQ(determinant(RationalMatrix(0, 0)), 1);
}

TEST(RationalMatrix, SolveInverseRank) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    RationalMatrix a(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) a(i, j) = d(rng);
    if (determinant(a) == 0) {
      EXPECT_THROW(inverse(a), ZeroDivisorError);
      EXPECT_LT(matrix_rank(a), 4u);
      continue;
    }
    EXPECT_EQ(a * inverse(a), RationalMatrix::identity(4));
    EXPECT_EQ(matrix_rank(a), 4u);
    EXPECT_EQ(determinant(inverse(a)), 1 / determinant(a));
  }
  EXPECT_EQ(matrix_rank(from({{1, 2}, {2, 4}, {0, 0}})), 1u);
}

TEST(Univariate, InterpolationRoundTrip) {
  TPencilPolynomial f(vec({3, 0, -2, 5}));
  auto nodes = interpolation_nodes(5);
  EXPECT_EQ(nodes, vec({0, 1, -1, 2, -2}));
  std::vector<Rational> values;
  for (const auto& t : nodes) values.push_back(f.evaluate(t));
  EXPECT_EQ(TPencilPolynomial::interpolate(nodes, values), f);
  EXPECT_EQ(f.degree(), 3);
  EXPECT_EQ(TPencilPolynomial(vec({0, 0})).degree(), -1);
}

TEST(Univariate, LogDerivativeOfQuadratic) {
  // 3 + 6T + T^2: X'(0)/X(0) = 2
  TPencilPolynomial x(vec({3, 6, 1}));
  EXPECT_EQ(x.coefficient(1) / x.coefficient(0), 2);
}

TEST(Simplex, SmallOptimum) {
  // min -x - y  s.t. x + y + s = 4, x + 3y + u = 6
  auto res = solve_lp(from({{1, 1, 1, 0}, {1, 3, 0, 1}}), vec({4, 6}), vec({-1, -2, 0, 0}));
  ASSERT_EQ(res.status, LpResult::Status::optimal);
  EXPECT_EQ(res.objective, -5);
  EXPECT_EQ(res.x[0], 3);
  EXPECT_EQ(res.x[1], 1);
  EXPECT_TRUE(res.unique);
  EXPECT_FALSE(res.degenerate);
}

TEST(Simplex, InfeasibleAndUnbounded) {
  EXPECT_EQ(solve_lp(from({{1, 1}}), vec({-1}), vec({0, 0})).status, LpResult::Status::infeasible);
  EXPECT_EQ(solve_lp(from({{1, -1}}), vec({1}), vec({0, -1})).status, LpResult::Status::unbounded);
}

TEST(Simplex, DegenerateAndNonUnique) {
  // x + y = 1 with equal costs: every point of the segment is optimal
  auto tie = solve_lp(from({{1, 1}}), vec({1}), vec({1, 1}));
  ASSERT_EQ(tie.status, LpResult::Status::optimal);
  EXPECT_FALSE(tie.unique);
  // optimum at a vertex where a basic variable is zero
  auto deg = solve_lp(from({{1, 1, 0}, {1, 0, 1}}), vec({1, 1}), vec({0, 1, 1}));
  ASSERT_EQ(deg.status, LpResult::Status::optimal);
  EXPECT_EQ(deg.objective, 0);
  EXPECT_EQ(deg.x[0], 1);
  EXPECT_TRUE(deg.degenerate);
}

TEST(Simplex, RedundantRows) {
  auto res = solve_lp(from({{1, 1}, {2, 2}}), vec({2, 4}), vec({1, 3}));
  ASSERT_EQ(res.status, LpResult::Status::optimal);
  EXPECT_EQ(res.objective, 2);
  EXPECT_EQ(res.basis.size(), 1u);
}
