#include <gtest/gtest.h>

#include <random>

#include "sparsetrace/errors.hpp"
#include "sparsetrace/polytope.hpp"
#include "sparsetrace/random.hpp"
#include "sparsetrace/resultant.hpp"
#include "sparsetrace/traceform.hpp"

using namespace sparsetrace;

namespace {

const std::vector<std::string> kT = {"t1", "t2", "t3"};
const std::vector<std::string> kT2 = {"t1", "t2"};
const std::vector<std::string> kC = {"c11", "c12", "c13", "c21", "c22", "c23", "q1", "q2", "q3"};

Polynomial P(const std::string& s, std::size_t n) { return parse_polynomial(s, default_variable_names(n)); }

const char* kPentagonNumerator =
    "2*c13*c11^2*c22^3*q2*c21*q1 - 3*c13^2*c11*c21^2*q2*c23^2*q1 - 2*c13*c11*c21*c22^2*q1^2*c23*c12"
    " + 2*c11^2*c21^2*q3^2*c23*c22*c12 - c13*c11^2*c22^4*q1^2 - c13*c11^2*c22^2*q2^2*c21^2"
    " - c13*c11^2*q3*c23*q2*c22*c21^2 - c13*c11^2*q3*c23*c22^2*q1*c21 - c11^2*q3*c22^3*c12*q1*c21"
    " + 4*c13*c11*q1*c12*c23^2*c21^2*q3 + c13*c11*c21^3*q2^2*c23*c12 - c13*q1^2*c12^2*c23^2*c21^2"
    " + c11^3*c22^3*q3^2*c21 + c13*c11*c21^2*q2*c23*q1*c22*c12 + 4*c13^2*c11*c21*c22*q1^2*c23^2"
    " - 3*c13*c11^2*c21^2*q3^2*c23^2 + c11^2*q3*c22^2*c12*q2*c21^2 - 2*c11*c21^2*q1*c12^2*c23*q3*c22";

struct Pentagon {
  std::vector<Rational> c;  // c11 c12 c13 c21 c22 c23 q1 q2 q3
  std::vector<Polynomial> f;
  Polynomial q;
};

Pentagon random_pentagon(std::mt19937_64& rng) {
  CoefficientRange range{50, 7};
  Pentagon s;
  for (int i = 0; i < 9; ++i) s.c.push_back(random_rational(rng, range));
  auto term = [](const Rational& c, const Point& e) { return Polynomial::monomial(e, c); };
  s.f = {term(s.c[0], {1, 0}) + term(s.c[1], {1, 1}) + term(s.c[2], {0, 2}),
         term(s.c[3], {0, 1}) + term(s.c[4], {1, 1}) + term(s.c[5], {2, 0})};
  s.q = term(s.c[6], {0, 0}) + term(s.c[7], {1, 0}) + term(s.c[8], {0, 1});
  return s;
}

bool up_to_sign(const Rational& a, const Rational& b) { return a == b || a == -b; }

}  // namespace

TEST(ChowForm, Examples) {
  auto ch = chowform_from_roots({{{Rational(2)}, 1}}, 1);
  EXPECT_EQ(ch.form, P("x1 + 2*x2", 2));
  auto ch2 = chowform_from_roots({{{Rational(1)}, 1}, {{Rational(-1)}, 1}}, 1);
  EXPECT_EQ(ch2.form, P("x1^2 - x2^2", 2));
  auto ch3 = chowform_from_roots({{{Rational(0)}, 2}}, 1);
  EXPECT_EQ(ch3.form, P("x1^2", 2));
  EXPECT_EQ(trace_from_chowform(ch, P("x1", 1), P("1", 1)).value, 2);
  EXPECT_EQ(trace_from_chowform(ch2, P("x1", 1), P("1", 1)).value, 0);
  EXPECT_EQ(trace_from_chowform(ch3, P("1", 1), P("1", 1)).value, 2);
  EXPECT_THROW(trace_from_chowform(ch2, P("1", 1), P("x1 - 1", 1)), ZeroDivisorError);
}

TEST(ChowForm, AgreesWithOracleOnConstructedIdeals) {
  std::mt19937_64 rng(40);
  CoefficientRange range{9, 3};
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<RootSpec> roots;
    std::vector<Rational> xs;
    while (roots.size() < 3) {
      Rational x = random_rational(rng, range);
      if (std::find(xs.begin(), xs.end(), x) != xs.end()) continue;
      xs.push_back(x);
      roots.push_back({{x, random_rational(rng, range)}, 1 + static_cast<long>(roots.size() % 2)});
    }
    Polynomial p = P("x1*x2 + 2", 2), q = P("x2^2 + x1 + 3", 2);
    Rational expect = 0;
    bool ok = true;
    for (const auto& r : roots) {
      Rational qv = q.evaluate(r.point);
      if (qv == 0) ok = false;
      else expect += r.multiplicity * p.evaluate(r.point) / qv;
    }
    if (!ok) continue;
    auto ch = chowform_from_roots(roots, 2);
    EXPECT_EQ(trace_from_chowform(ch, p, q).value, expect);
    auto alg = affine_algebra(ideal_from_roots(roots));
    EXPECT_EQ(alg.dimension(), 4u);
    EXPECT_EQ(trace_oracle(p, q, alg), expect);
  }
}

TEST(TraceSparse, ThreeQuadricsSpecialized) {
  std::vector<Polynomial> f = {parse_polynomial("-1 + t1^2 + t2^2", kT), parse_polynomial("-1 + t2^2 + t3^2", kT),
                               parse_polynomial("-1 + t1^2 + t2^2 + t3^2", kT)};
  auto r = trace_sparse(parse_polynomial("t2^2", kT), parse_polynomial("1", kT), f);
  EXPECT_EQ(r.value, 8);
  EXPECT_EQ(*r.e, 1);
  EXPECT_EQ(*r.index, 8);
  EXPECT_EQ(*r.d, 8);
  auto oracle = trace_oracle_for_system(parse_polynomial("t2^2", kT), parse_polynomial("1", kT), f, 8);
  EXPECT_EQ(oracle.value, 8);
  EXPECT_EQ(oracle.algebra, "affine");
}

TEST(TraceSparse, ThreeQuadricsClosedForm) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<Rational> c(11);
    for (auto& x : c) x = random_rational(rng, {30, 5});
    // c11 c12 c13 | c21 c22 c23 | c31 c32 c33 c34
    auto mono = [](const Rational& v, Point e) { return Polynomial::monomial(e, v); };
    std::vector<Polynomial> f = {
        mono(c[0], {0, 0, 0}) + mono(c[1], {2, 0, 0}) + mono(c[2], {0, 2, 0}),
        mono(c[3], {0, 0, 0}) + mono(c[4], {0, 2, 0}) + mono(c[5], {0, 0, 2}),
        mono(c[6], {0, 0, 0}) + mono(c[7], {2, 0, 0}) + mono(c[8], {0, 2, 0}) + mono(c[9], {0, 0, 2})};
    const Rational &c11 = c[0], &c12 = c[1], &c13 = c[2], &c21 = c[3], &c22 = c[4], &c23 = c[5], &c31 = c[6],
                   &c32 = c[7], &c33 = c[8], &c34 = c[9];
    Rational den = -c12 * c22 * c34 + c12 * c23 * c33 - c32 * c13 * c23;
    if (den == 0) continue;
    Rational expect = 8 * (c11 * c32 * c23 + c21 * c12 * c34 - c31 * c12 * c23) / den;
    auto r = trace_sparse(parse_polynomial("t2^2", kT), parse_polynomial("1", kT), f, {static_cast<std::uint64_t>(trial)});
    EXPECT_EQ(r.value, expect);
  }
}

TEST(TraceSparse, PentagonAgreesWithOracle) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 5; ++trial) {
    Pentagon s = random_pentagon(rng);
    Polynomial p = P("x1^2 + 3*x2", 2);
    auto r = trace_sparse(p, s.q, s.f, {7});
    auto o = trace_oracle_for_system(p, s.q, s.f, 3);
    EXPECT_EQ(o.algebra, "torus");
    EXPECT_EQ(r.value, o.value);
  }
}

TEST(TraceSparse, IdentityTraceIsMixedVolume) {
  std::mt19937_64 rng(10);
  Pentagon s = random_pentagon(rng);
  EXPECT_EQ(trace_sparse(s.q, s.q, s.f).value, 3);
}

TEST(TraceSparse, LinearAndScaleInvariant) {
  std::mt19937_64 rng(11);
  Pentagon s = random_pentagon(rng);
  Polynomial p1 = P("x1^2", 2), p2 = P("3*x1*x2 - x2^-1", 2);
  Rational t1 = trace_sparse(p1, s.q, s.f).value, t2 = trace_sparse(p2, s.q, s.f).value;
  EXPECT_EQ(trace_sparse(p1 + p2, s.q, s.f).value, t1 + t2);
  std::vector<Polynomial> scaled = {s.f[0] * Rational(5), s.f[1] * make_rational(-2, 3)};
  EXPECT_EQ(trace_sparse(p1 * Rational(7), s.q * Rational(7), scaled).value, t1);
}

TEST(TraceSparse, NormalizedDenominatorIsResultant) {
  std::mt19937_64 rng(12);
  Pentagon s = random_pentagon(rng);
  Polynomial p = P("x1^2", 2);
  auto r = trace_sparse(p, s.q, s.f, {3, true});
  auto raw = trace_sparse(p, s.q, s.f, {3, false});
  EXPECT_EQ(r.value, raw.value);
  std::mt19937_64 r2(1);
  Support a0 = support_union(p.support(), s.q.support());
  Rational res = sparse_resultant(ResultantProblem{{a0, s.f[0].support(), s.f[1].support()}, {s.q, s.f[0], s.f[1]}}, r2);
  EXPECT_TRUE(up_to_sign(r.denominator, res));
}

TEST(Denominator, PentagonFactorization) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 3; ++trial) {
    Pentagon s = random_pentagon(rng);
    auto df = denominator_factorization({2, 0}, s.q, s.f);
    EXPECT_EQ(df.base_exponent, 1);
    const Rational &c12 = s.c[1], &c13 = s.c[2], &c22 = s.c[4], &c23 = s.c[5];
    std::vector<Point> positive;
    for (const auto& ff : df.facets)
      if (ff.mu > 0) {
        positive.push_back(ff.normal);
        EXPECT_EQ(ff.exponent, 1);
        if (ff.normal == Point{-1, 0}) EXPECT_TRUE(up_to_sign(ff.value, c23));
        if (ff.normal == Point{-1, -1}) EXPECT_TRUE(up_to_sign(ff.value, c22 * c12 - c13 * c23));
      }
    std::sort(positive.begin(), positive.end());
    EXPECT_EQ(positive, (std::vector<Point>{{-1, -1}, {-1, 0}}));
    EXPECT_TRUE(df.matches);
    EXPECT_TRUE(df.matches_ambient);
  }
}

TEST(Denominator, MonomialInsideSupportHasNoFacetFactors) {
  std::mt19937_64 rng(14);
  Pentagon s = random_pentagon(rng);
  auto df = denominator_factorization({1, 0}, s.q, s.f);
  for (const auto& ff : df.facets) EXPECT_EQ(ff.mu, 0);
  EXPECT_TRUE(df.matches);
}

TEST(Denominator, ClearsThePrintedNumerator) {
  std::mt19937_64 rng(15);
  Polynomial numerator = parse_polynomial(kPentagonNumerator, kC);
  for (int trial = 0; trial < 3; ++trial) {
    Pentagon s = random_pentagon(rng);
    Rational n = numerator.evaluate(s.c);
    if (n == 0) continue;
    auto df = denominator_factorization({2, 0}, s.q, s.f);
    Rational tr = trace_sparse(P("x1^2", 2), s.q, s.f).value;
    EXPECT_TRUE(up_to_sign(tr * df.product / n, 1));
  }
}

TEST(ResidueDenominators, ZeroMonomial) {
  std::vector<Polynomial> f = {P("x1 + 2*x1*x2 + 3*x2^2", 2), P("5*x2 + 7*x1*x2 + 11*x1^2", 2)};
  auto classical = residue_denominator_classical({0, 0}, f);
  auto refined = residue_denominator_refined({0, 0}, f);
  ASSERT_EQ(classical.factors.size(), 5u);
  for (std::size_t i = 0; i < classical.factors.size(); ++i) {
    EXPECT_EQ(classical.factors[i].exponent, classical.factors[i].index);
    EXPECT_EQ(*classical.factors[i].enumerated, classical.factors[i].exponent);
    EXPECT_EQ(refined.factors[i].exponent, 0);
  }
  EXPECT_EQ(classical.shifts[0], (Point{1, 1}));
  EXPECT_FALSE(classical.lattice_point_supports);
}

TEST(ResidueDenominators, ComparisonOnPentagon) {
  std::vector<Polynomial> f = {P("x1 + 2*x1*x2 + 3*x2^2", 2), P("5*x2 + 7*x1*x2 + 11*x1^2", 2)};
  auto cmp = compare_denominators({2, 0}, f);
  EXPECT_TRUE(cmp.refined_le_classical);
  EXPECT_TRUE(cmp.strict_where_expected);
  EXPECT_LT(cmp.total_refined, cmp.total_classical);
  for (const auto& row : cmp.rows)
    if (row.a_dot_omega <= 0) EXPECT_EQ(row.refined + 1, row.classical);  // index 1 on every edge here
}

TEST(DenseResidue, Univariate) {
  std::vector<Polynomial> f = {P("x1^2 - 1", 1)};
  EXPECT_EQ(dense_residue({0}, f).value, 0);
  EXPECT_EQ(dense_residue({1}, f).value, 1);
  EXPECT_EQ(dense_residue({2}, f).value, 0);
}

TEST(DenseResidue, AgreesWithOracle) {
  std::mt19937_64 rng(16);
  Support s2 = make_support({{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}});
  std::vector<Polynomial> f = {random_polynomial(s2, rng, {9, 1}), random_polynomial(s2, rng, {9, 1})};
  for (const auto& beta : monomials_up_to(2, 2))
    EXPECT_EQ(dense_residue(beta, f).value, global_residue_oracle(Polynomial::monomial(beta), f));
}

TEST(EulerJacobi, Vanishing) {
  auto r = euler_jacobi_check({P("x1^2 - 1", 1)});
  EXPECT_EQ(r.rho, 1);
  EXPECT_TRUE(r.all_below_rho_zero);
  std::mt19937_64 rng(17);
  Support s2 = make_support({{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}});
  Support s3 = make_support({{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {3, 0}, {2, 1}, {1, 2}, {0, 3}});
  auto r2 = euler_jacobi_check({random_polynomial(s2, rng, {9, 1}), random_polynomial(s3, rng, {9, 1})});
  EXPECT_EQ(r2.rho, 3);
  EXPECT_EQ(r2.below_rho.size(), 6u);
  EXPECT_TRUE(r2.all_below_rho_zero);
}
