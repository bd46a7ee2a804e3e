#include <gtest/gtest.h>

#include "sparsetrace/errors.hpp"
#include "sparsetrace/exponents.hpp"

using namespace sparsetrace;

namespace {

const std::vector<Support> kCylinders = {
    make_support({{0, 0, 0}, {0, 2, 0}}),
    make_support({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}}),
    make_support({{0, 0, 0}, {0, 2, 0}, {0, 0, 2}}),
    make_support({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}}),
};

const Support kPentagonA1 = make_support({{1, 0}, {1, 1}, {0, 2}});
const Support kPentagonA2 = make_support({{0, 1}, {1, 1}, {2, 0}});
const Support kPentagonPrime = make_support({{0, 0}, {1, 0}, {0, 1}});

}  // namespace

TEST(Essential, CylinderFamilyIsEssential) {
  auto r = essential_subfamily(kCylinders);
  ASSERT_EQ(r.status, EssentialStatus::unique);
  EXPECT_EQ(r.indices, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(Essential, SmallFamilies) {
  std::vector<Support> twice = {{{0}, {1}}, {{0}, {1}}};
  EXPECT_EQ(essential_subfamily(twice).indices, (std::vector<std::size_t>{0, 1}));
  std::vector<Support> points = {{{0}}, {{0}}};
  auto r = essential_subfamily_containing(points, 0);
  ASSERT_EQ(r.status, EssentialStatus::unique);
  EXPECT_EQ(r.indices, (std::vector<std::size_t>{0}));
  EXPECT_EQ(essential_subfamily(points).status, EssentialStatus::not_unique);
}

TEST(Exponents, CylinderFamily) {
  EXPECT_EQ(exponent_e(kCylinders), 1);
  EXPECT_EQ(exponent_d(kCylinders), 8);
  auto shifted = kCylinders;
  for (auto& s : shifted)
    for (auto& p : s)
      for (auto& x : p) x += 1;
  EXPECT_EQ(exponent_d(shifted), 8);
}

TEST(Exponents, ProjectedSegment) {
  std::vector<Support> fam = {{{0, 0}, {2, 0}}, {{0, 0}, {2, 0}}, {{0, 0}, {0, 1}}};
  EXPECT_EQ(essential_subfamily(fam).indices, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(exponent_e(fam), 1);
  std::vector<Support> longer = {{{0, 0}, {1, 0}}, {{0, 0}, {1, 0}}, {{0, 0}, {0, 1}, {0, 3}}};
  EXPECT_EQ(exponent_e(longer), 3);
  EXPECT_EQ(exponent_d(longer), 3);
}

TEST(Exponents, WholeFamilyEssentialGivesOne) {
  std::vector<Support> fam = {{{0, 0}, {1, 0}, {0, 1}}, {{0, 0}, {1, 0}, {0, 1}}, {{0, 0}, {1, 0}, {0, 1}}};
  EXPECT_EQ(exponent_e(fam), 1);
  EXPECT_EQ(exponent_d(fam), 1);
}

TEST(Exponents, NoUniqueEssentialSubfamily) {
  std::vector<Support> points = {{{0}}, {{0}}};
  EXPECT_THROW(exponent_e(points), DegenerateError);
}

TEST(Delta, PentagonExample) {
  DeltaExponents d = delta_exponents(kPentagonPrime, {2, 0}, {kPentagonA1, kPentagonA2});
  EXPECT_EQ(d.delta_base, 1);
  std::vector<Point> positive;
  for (const auto& f : d.facets) {
    EXPECT_GE(f.mu, 0);
    if (f.mu > 0) {
      positive.push_back(f.normal);
      EXPECT_EQ(f.delta, 1);
      EXPECT_EQ(f.delta_ambient, 1);
    } else {
      EXPECT_EQ(f.delta, 0);
    }
  }
  std::sort(positive.begin(), positive.end());
  EXPECT_EQ(positive, (std::vector<Point>{{-1, -1}, {-1, 0}}));
  EXPECT_EQ(d.facets.size(), 5u);
}

TEST(Delta, PointInsidePrimeSupport) {
  DeltaExponents d = delta_exponents(kPentagonPrime, {1, 0}, {kPentagonA1, kPentagonA2});
  EXPECT_EQ(d.delta_base, 1);
  for (const auto& f : d.facets) EXPECT_EQ(f.mu, 0);
}

TEST(Delta, MuMatchesFaceData) {
  Support a0 = support_union(kPentagonPrime, {{2, 0}});
  DeltaExponents d = delta_exponents(kPentagonPrime, {2, 0}, {kPentagonA1, kPentagonA2});
  for (const auto& f : d.facets)
    EXPECT_EQ(f.mu, face_data(a0, f.normal).second - face_data(kPentagonPrime, f.normal).second);
}

TEST(Delta, LatticeVariantsDifferOnEvenLattice) {
  // A_0 = {0, 2}, A_1 = {0, 2, 4}: in s = t^2, Res(c0, f_1) = b2 * c0^2, so
  // the facet at 4 carries exponent 1; the in-lattice reading doubles it
  std::vector<Support> fs = {{{0}, {2}, {4}}};
  DeltaExponents d = delta_exponents({{0}}, {2}, fs);
  ASSERT_EQ(d.facets.size(), 2u);
  for (const auto& f : d.facets) {
    if (f.normal == Point{-1}) {
      EXPECT_EQ(f.mu, 2);
      EXPECT_EQ(f.delta, 2);
      EXPECT_EQ(f.delta_ambient, 1);
    } else {
      EXPECT_EQ(f.mu, 0);
    }
  }
}
