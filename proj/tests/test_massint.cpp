#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "pluripot/checks.hpp"
#include "pluripot/massint.hpp"
#include "pluripot/surrogates.hpp"

using namespace pluripot;

namespace {

constexpr double kPi = std::numbers::pi;

Body unit_interval() { return Body(1, {make_point({0}), make_point({1})}); }

}  // namespace

TEST(TotalMass, Examples) {
  const auto sig = ma_total_mass(standard_simplex(2));
  EXPECT_TRUE(sig.exact);
  EXPECT_EQ(sig.factor, 1);
  EXPECT_NEAR(sig.value, 4 * kPi * kPi, 1e-12);
  EXPECT_NEAR(ma_total_mass(unit_cube(2)).value, 8 * kPi * kPi, 1e-12);
  const auto q = ma_total_mass(checks::quadrilateral());
  EXPECT_EQ(q.factor, make_rational(21, 25));
  EXPECT_EQ(q.formula(), "(2π)^2 · 2 · 21/50");
}

TEST(TotalMass, SimplexGivesTwoPiToTheN) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto r = ma_total_mass(standard_simplex(n));
    EXPECT_EQ(r.factor, 1);
    EXPECT_NEAR(r.value, std::pow(2 * kPi, static_cast<double>(n)), 1e-9);
  }
}

TEST(L2Finiteness, Examples) {
  const Body s = standard_simplex(2);
  // (2,1) is interior to 4 Sigma but lies on the edge x + y = 3 of 3 Sigma.
  EXPECT_TRUE(l2_finiteness(s, {1, 0}, 4));
  EXPECT_FALSE(l2_finiteness(s, {1, 0}, 3));
  EXPECT_FALSE(l2_finiteness(s, {1, 0}, 2));
  // alpha + 1 = (2, 2) is a vertex of twice the unit square.
  EXPECT_FALSE(l2_finiteness(unit_cube(2), {1, 1}, 2));
  EXPECT_TRUE(l2_finiteness(checks::quadrilateral(), {1, 0}, 4));
  EXPECT_FALSE(l2_finiteness(checks::quadrilateral(), {2, 0}, 4));
}

TEST(L2Finiteness, BoundaryPointsAreNotInterior) {
  // (1,1) + 1 = (2,2) lies on the edge x + y = 4 of 4 Sigma.
  EXPECT_FALSE(l2_finiteness(standard_simplex(2), {1, 1}, 4));
  EXPECT_TRUE(l2_finiteness(standard_simplex(2), {1, 1}, 5));
}

TEST(L2Norm, OneDimensionalRadialValue) {
  const auto r = monomial_l2_norm(unit_interval(), {0}, 2, L2Method::Quadrature);
  ASSERT_FALSE(r.infinite);
  EXPECT_NEAR(r.value, 2 * kPi, 1e-7 * 2 * kPi);
}

TEST(L2Norm, QuadrilateralClosedFormMatchesQuadrature) {
  const Body q = checks::quadrilateral();
  const auto closed = monomial_l2_norm(q, {1, 0}, 4, L2Method::ClosedForm2D);
  ASSERT_FALSE(closed.infinite);
  ASSERT_TRUE(closed.rational_factor.has_value());
  EXPECT_EQ(*closed.rational_factor, make_rational(17, 18));
  EXPECT_NEAR(closed.value, 17.0 / 18 * 4 * kPi * kPi, 1e-12);
  const auto quad = monomial_l2_norm(q, {1, 0}, 4, L2Method::Quadrature);
  EXPECT_NEAR(quad.value, closed.value, 1e-6 * closed.value);
}

TEST(L2Norm, ClosedFormSumsConeTerms) {
  const auto r = monomial_l2_norm(checks::quadrilateral(), {1, 0}, 4, L2Method::ClosedForm2D);
  Rational sum = 0;
  for (const auto& t : r.terms) {
    EXPECT_GT(t.value, 0);
    sum += t.value;
  }
  EXPECT_EQ(sum, *r.rational_factor);
}

TEST(L2Norm, InfiniteExactlyWhenNotInterior) {
  const Body q = checks::quadrilateral();
  EXPECT_TRUE(monomial_l2_norm(q, {2, 0}, 4, L2Method::ClosedForm2D).infinite);
  EXPECT_TRUE(monomial_l2_norm(q, {2, 0}, 4, L2Method::Quadrature).infinite);
  EXPECT_THROW(monomial_l2_norm(standard_simplex(3), {0, 0, 0}, 4, L2Method::ClosedForm2D), std::invalid_argument);
}

TEST(L2Norm, ClosedFormMatchesQuadratureOnRandomPolygons) {
  std::mt19937_64 rng(151);
  int finite = 0;
  for (int t = 0; t < 12 && finite < 4; ++t) {
    const Body s = random_polygon(rng, 4, 4);
    const MultiIndex alpha = {t % 2, (t / 2) % 2};
    const long m = 3 + t % 2;
    const auto closed = monomial_l2_norm(s, alpha, m, L2Method::ClosedForm2D);
    EXPECT_EQ(closed.infinite, !l2_finiteness(s, alpha, m));
    if (closed.infinite) continue;
    ++finite;
    const auto quad = monomial_l2_norm(s, alpha, m, L2Method::Quadrature);
    EXPECT_NEAR(quad.value, closed.value, 1e-6 * closed.value) << "trial " << t;
  }
  EXPECT_GT(finite, 0);
}

TEST(GammaCone, OpeningAngle) {
  const auto c2 = gamma_a_cone(2, 0, 1);
  EXPECT_NEAR(c2.half_angle, 3 * kPi / 4, 1e-12);
  const auto rays = c2.boundary_rays_2d();
  EXPECT_NEAR(rays[0][0], -1, 1e-12);
  EXPECT_NEAR(rays[0][1], 0, 1e-12);
  EXPECT_NEAR(rays[1][0], 0, 1e-12);
  EXPECT_NEAR(rays[1][1], -1, 1e-12);
  EXPECT_NEAR(gamma_a_cone(3, 0, 1).half_angle, std::acos(-1 / std::sqrt(3.0)), 1e-12);
  EXPECT_NEAR(gamma_a_cone(2, 1 - 1e-12, 1).half_angle, kPi / 2, 1e-9);
}

TEST(GammaCone, OneDimensionalCaseIsWholeLine) {
  const auto c = gamma_a_cone(1, 0, 1);
  EXPECT_NEAR(c.half_angle, kPi, 1e-12);
  EXPECT_TRUE(c.contains({-1.0}));
  EXPECT_TRUE(c.contains({1.0}));
}

TEST(GammaCone, MembershipIsAngleTest) {
  const auto c = gamma_a_cone(2, 0.2, 0.7);
  std::mt19937_64 rng(157);
  std::uniform_real_distribution<double> th(-kPi, kPi);
  for (int k = 0; k < 200; ++k) {
    const double t = th(rng);
    const double angle = std::abs(std::remainder(t - kPi / 4, 2 * kPi));
    if (std::abs(angle - c.half_angle) < 1e-9) continue;
    EXPECT_EQ(c.contains({std::cos(t), std::sin(t)}), angle <= c.half_angle);
  }
  EXPECT_THROW(gamma_a_cone(2, 1, 1), std::invalid_argument);
  EXPECT_THROW(gamma_a_cone(2, -0.1, 1), std::invalid_argument);
}

TEST(GapConeHull, LowerSetIsUnchanged) {
  for (const Body& s : {standard_simplex(2), unit_cube(2)}) {
    const auto t = gap_cone_hull(s, 2, 0.1);
    ASSERT_TRUE(t.hull.has_value());
    EXPECT_EQ(*t.hull, reduced(s));
  }
}

TEST(GapConeHull, QuadrilateralGainsLatticePoints) {
  const Body q = checks::quadrilateral();
  const auto t = gap_cone_hull(q, 4, 0.01);
  ASSERT_TRUE(t.hull.has_value());
  const auto base = lattice_points(q, 4), grown = lattice_points(*t.hull, 4);
  EXPECT_TRUE(std::includes(grown.begin(), grown.end(), base.begin(), base.end()));
  EXPECT_GT(grown.size(), base.size());
  EXPECT_GT(volume(*t.hull), volume(q));
}

TEST(GapConeHull, FiniteNormImpliesHullMembership) {
  const Body q = checks::quadrilateral();
  const long m = 4;
  const auto t = gap_cone_hull(q, m, 0.01);
  const auto base = lattice_points(q, m);
  const auto grown = lattice_points(*t.hull, m);
  for_each_in_box({0, 0}, {m + 1, m + 1}, [&](const MultiIndex& a) {
    if (std::binary_search(base.begin(), base.end(), a)) return;
    if (!l2_finiteness(q, a, m)) return;
    EXPECT_TRUE(std::binary_search(grown.begin(), grown.end(), a)) << to_string(a);
    EXPECT_TRUE(gap_cone_member(q, t.cone, m, a));
  });
}

TEST(GapConeHull, SampledMembershipInThreeDimensions) {
  const Body s = standard_simplex(3);
  const auto t = gap_cone_hull(s, 2, 0.1);
  EXPECT_FALSE(t.hull.has_value());
  EXPECT_TRUE(gap_cone_member(s, t.cone, 2, {1, 1, 0}));
  EXPECT_FALSE(gap_cone_member(s, t.cone, 2, {2, 1, 0}));
}

TEST(GapConeHull, RejectsLevelAboveGap) {
  EXPECT_THROW(gap_cone_hull(standard_simplex(2), 2, 1.0), std::invalid_argument);
}
