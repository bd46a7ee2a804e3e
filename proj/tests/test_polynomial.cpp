#include <gtest/gtest.h>

#include <random>

#include "sparsetrace/errors.hpp"
#include "sparsetrace/polynomial.hpp"

using namespace sparsetrace;

namespace {

const std::vector<std::string> kT3 = {"t1", "t2", "t3"};
const std::vector<std::string> kXY = {"x", "y"};

Polynomial P(const std::string& s, const std::vector<std::string>& v) { return parse_polynomial(s, v); }

Polynomial random_poly(std::mt19937_64& rng, std::size_t arity, int terms) {
  std::uniform_int_distribution<long> e(-1, 2), c(-9, 9);
  Polynomial f(arity);
  for (int i = 0; i < terms; ++i) {
    Exponent x(arity);
    for (auto& v : x) v = e(rng);
    f.add_term(x, make_rational(c(rng), 1 + std::labs(c(rng))));
  }
  return f;
}

}  // namespace

TEST(Rational, CanonicalStrings) {
  EXPECT_EQ(to_fraction_string(make_rational(4, -6)), "-2/3");
  EXPECT_EQ(to_fraction_string(Rational(0)), "0/1");
  EXPECT_EQ(parse_rational("6/4"), make_rational(3, 2));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
}

TEST(Parse, SphereCylinderPolynomial) {
  Polynomial f = P("-1 + t1^2 + t2^2", kT3);
  EXPECT_EQ(f.arity(), 3u);
  EXPECT_EQ(f.term_count(), 3u);
  EXPECT_EQ(f.coefficient({2, 0, 0}), 1);
  EXPECT_EQ(f.coefficient({0, 0, 0}), -1);
}

TEST(Parse, ZeroAndLaurent) {
  EXPECT_TRUE(P("0", {"x"}).is_zero());
  Polynomial g = P("t1^-1 + 2/3*t1", {"t1"});
  EXPECT_EQ(g.term_count(), 2u);
  EXPECT_EQ(g.coefficient({-1}), 1);
  EXPECT_EQ(g.coefficient({1}), make_rational(2, 3));
}

TEST(Parse, CollectsLikeTerms) {
  EXPECT_TRUE(P("x*y + 2*y*x - 3*x*y", kXY).is_zero());
  EXPECT_EQ(P("x + x + y", kXY).term_count(), 2u);
  EXPECT_THROW(P("3 x", kXY), ParseError);
}

TEST(Parse, Errors) {
  try {
    P("x + z", kXY);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(P("x +", kXY), ParseError);
  EXPECT_THROW(P("x^", kXY), ParseError);
  EXPECT_THROW(P("", kXY), ParseError);
}

TEST(Parse, RoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    Polynomial f = random_poly(rng, 3, 5);
    EXPECT_EQ(P(f.to_string(kT3), kT3), f);
  }
  EXPECT_EQ(P("-1 + t1^2 + t2^2", kT3).to_string(kT3), "t1^2 + t2^2 - 1");
}

TEST(Evaluate, Examples) {
  std::vector<Rational> pt = {1, 0, 5};
  EXPECT_EQ(P("-1 + t1^2 + t2^2", kT3).evaluate(pt), 0);
  std::vector<Rational> two = {2};
  EXPECT_EQ(P("t1^-1", {"t1"}).evaluate(two), make_rational(1, 2));
  std::vector<Rational> zero = {0};
  EXPECT_THROW(P("t1^-1", {"t1"}).evaluate(zero), DomainError);
  // c11 + c12 t1^2 + c13 t2^2 at c = (1,1,1), t = (1,1)
  std::vector<Rational> ones = {1, 1};
  EXPECT_EQ(P("1 + t1^2 + t2^2", {"t1", "t2"}).evaluate(ones), 3);
}

TEST(Support, Examples) {
  EXPECT_EQ(P("-1 + t1^2 + t2^2", {"t1", "t2"}).support(), (Support{{0, 0}, {0, 2}, {2, 0}}));
  EXPECT_TRUE(Polynomial(2).support().empty());
  EXPECT_EQ(P("3 + 2*t1 - t2", {"t1", "t2"}).support(), (Support{{0, 0}, {0, 1}, {1, 0}}));
}

TEST(Pencil, Examples) {
  auto q = P("1", {"x"}), p = P("x", {"x"});
  EXPECT_EQ(pencil(q, p).at(2), P("1 + 2*x", {"x"}));
  EXPECT_EQ(pencil(P("x", {"x"}), Polynomial(1)).at(7), P("x", {"x"}));
  EXPECT_EQ(pencil(P("1 + x", {"x"}), P("1 - x", {"x"})).at(1), P("2", {"x"}));
}

TEST(Pencil, EvaluationIsAffineInT) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    auto q = random_poly(rng, 2, 4), p = random_poly(rng, 2, 4);
    std::vector<Rational> pt = {make_rational(2, 3), make_rational(-5, 7)};
    Rational t0 = make_rational(i - 4, 3);
    EXPECT_EQ(pencil(q, p).at(t0).evaluate(pt), q.evaluate(pt) + t0 * p.evaluate(pt));
  }
}

TEST(Jacobian, Examples) {
  std::vector<Polynomial> f1 = {P("x^2 - 1", {"x"})};
  EXPECT_EQ(jacobian(f1), P("2*x", {"x"}));
  std::vector<Polynomial> f2 = {P("x^2 + y^2 - 1", kXY), P("x*y", kXY)};
  EXPECT_EQ(jacobian(f2), P("2*x^2 - 2*y^2", kXY));
  std::vector<Polynomial> f3 = {P("x^2 + 3*y^2 - x + 1", kXY), P("x*y + y^2 + 2", kXY)};
  EXPECT_EQ(jacobian(f3).degree(), 2);
  std::vector<Polynomial> bad = {P("x", kXY)};
  EXPECT_THROW(jacobian(bad), DomainError);
}

TEST(Jacobian, LinearSystemGivesConstantDeterminant) {
  std::vector<Polynomial> f = {P("2*x + 3*y + 1", kXY), P("5*x - y + 4", kXY)};
  EXPECT_EQ(jacobian(f), P("-17", kXY));
}

TEST(ToricJacobian, Examples) {
  std::vector<Polynomial> f1 = {P("t - 1", {"t"})};
  EXPECT_EQ(toric_jacobian(f1), P("t", {"t"}));
  std::vector<Polynomial> f2 = {P("t1*t2", {"t1", "t2"}), P("t1 + t2", {"t1", "t2"})};
  EXPECT_EQ(toric_jacobian(f2), P("t1*t2^2 - t1^2*t2", {"t1", "t2"}));
  std::vector<Polynomial> f3 = {P("3 + 5*t^2", {"t"})};
  EXPECT_EQ(toric_jacobian(f3), P("10*t^2", {"t"}));
}

TEST(Arithmetic, Examples) {
  EXPECT_EQ(P("x + 1", {"x"}) * P("x - 1", {"x"}), P("x^2 - 1", {"x"}));
  EXPECT_EQ(P("x^2*y", kXY).derivative(0), P("2*x*y", kXY));
  auto f = P("x^3 - 2*y + 1/2", kXY);
  EXPECT_TRUE((f + (-f)).is_zero());
  EXPECT_EQ((f + (-f)).term_count(), 0u);
  EXPECT_EQ(P("t^-2", {"t"}).derivative(0), P("-2*t^-3", {"t"}));
}

TEST(Arithmetic, RingAxiomsOnRandomSamples) {
  std::mt19937_64 rng(11);
  std::vector<Rational> pt = {make_rational(3, 2), make_rational(-2, 5)};
  for (int i = 0; i < 20; ++i) {
    auto a = random_poly(rng, 2, 4), b = random_poly(rng, 2, 3), c = random_poly(rng, 2, 3);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b).evaluate(pt), a.evaluate(pt) * b.evaluate(pt));
  }
}
