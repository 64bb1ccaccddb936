#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "pluripot/checks.hpp"
#include "pluripot/polytope.hpp"
#include "pluripot/surrogates.hpp"

using namespace pluripot;

namespace {

Point pt(Rational a, Rational b) { return make_point({a, b}); }

bool same_set(std::vector<Point> a, std::vector<Point> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

TEST(Support, SimplexExamples) {
  const Body s = standard_simplex(2);
  EXPECT_EQ(support(s, pt(1, 1)), 1);
  EXPECT_EQ(support(s, pt(-1, -1)), 0);
  EXPECT_EQ(support(s, pt(2, -3)), 2);
}

TEST(Support, QuadrilateralExample) {
  EXPECT_EQ(support(checks::quadrilateral(), pt(1, 0)), make_rational(4, 5));
}

TEST(Support, DoubleAgreesWithExact) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const Body s = random_body(rng, 3, 6);
    const Point xi = random_direction(rng, 3);
    const auto xd = to_double(xi);
    EXPECT_NEAR(support(s, std::span<const double>(xd)), to_double(support(s, xi)), 1e-12);
  }
}

TEST(Support, HomogeneousAndSubadditive) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const Body s = random_body(rng, 3, 5);
    const Point a = random_direction(rng, 3), b = random_direction(rng, 3);
    const Rational lam = make_rational(static_cast<long>(t % 7) + 1, 3);
    EXPECT_EQ(support(s, lam * a), lam * support(s, a));
    EXPECT_LE(support(s, a + b), support(s, a) + support(s, b));
  }
}

TEST(Support, NonnegativeAndMonotoneOnBodies) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const Body s = random_body(rng, 2, 5);
    const Point xi = random_direction(rng, 2);
    EXPECT_GE(support(s, xi), 0);
    Point bigger = xi;
    bigger[0] += 1;
    EXPECT_LE(support(s, xi), support(s, bigger));
  }
}

TEST(Body, RejectsPointsOutsideOrthant) {
  EXPECT_THROW(Body(2, {pt(0, 0), pt(-1, 1)}), std::invalid_argument);
  EXPECT_THROW(Body(2, {pt(1, 0), pt(0, 1)}), std::invalid_argument);  // origin missing
}

TEST(ExtremePoints, DropsInteriorAndEdgePoints) {
  const Polytope p(2, {pt(0, 0), pt(2, 0), pt(0, 2), pt(1, 0), pt(make_rational(1, 2), make_rational(1, 2)), pt(2, 0)});
  EXPECT_TRUE(same_set(extreme_points(p), {pt(0, 0), pt(2, 0), pt(0, 2)}));
}

TEST(ExtremePoints, ThreeDimensionalCube) {
  std::vector<Point> pts = unit_cube(3).vertices();
  pts.push_back(make_point({make_rational(1, 2), make_rational(1, 2), make_rational(1, 2)}));
  pts.push_back(make_point({1, make_rational(1, 2), 1}));
  EXPECT_EQ(extreme_points(Polytope(3, pts)).size(), 8u);
}

TEST(ExtremePoints, SupportIsUnchangedByReduction) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 50; ++t) {
    const Body s = random_body(rng, 3, 9);
    const Body r = reduced(s);
    for (int k = 0; k < 10; ++k) {
      const Point xi = random_direction(rng, 3);
      EXPECT_EQ(support(s, xi), support(r, xi));
    }
  }
}

TEST(HalfspaceRep, ContainmentMatchesConvexWeights) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> d(0, 12);
  for (int t = 0; t < 30; ++t) {
    const Body s = random_body(rng, 2, 6);
    const HRep h = halfspaces(s);
    for (int k = 0; k < 30; ++k) {
      const Point x = pt(make_rational(d(rng), 12), make_rational(d(rng), 12));
      EXPECT_EQ(contains(h, x), contains(static_cast<const Polytope&>(s), x));
    }
  }
}

TEST(Volume, Examples) {
  EXPECT_EQ(volume(standard_simplex(2)), make_rational(1, 2));
  EXPECT_EQ(volume(unit_cube(2)), 1);
  EXPECT_EQ(volume(checks::quadrilateral()), make_rational(21, 50));
  EXPECT_EQ(volume(standard_simplex(3)), make_rational(1, 6));
  EXPECT_EQ(volume(unit_cube(4)), 1);
  EXPECT_EQ(volume(standard_simplex(4)), make_rational(1, 24));
}

TEST(Volume, PlanarMatchesShoelace) {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 100; ++t) {
    const Body s = random_polygon(rng, 7);
    EXPECT_EQ(volume(s), checks::shoelace_area(extreme_points(s)));
  }
}

TEST(Volume, ScalesWithDimensionPower) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t) {
    const Body s = random_body(rng, 3, 7);
    std::vector<Point> scaled;
    for (const auto& v : s.vertices()) scaled.push_back(Rational(2) * v);
    EXPECT_EQ(volume(Polytope(3, scaled)), 8 * volume(s));
  }
}

TEST(Volume, MonteCarloAgreesWithinThreeStandardErrors) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 10; ++t) {
    const Body s = random_body(rng, 3, 8);
    const auto est = volume_monte_carlo(s, 200000, 100 + t);
    EXPECT_LE(std::abs(est.value - to_double(volume(s))), 3 * est.std_error + 1e-12);
  }
}
