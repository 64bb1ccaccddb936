#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "pluripot/checks.hpp"
#include "pluripot/polyspace.hpp"
#include "pluripot/surrogates.hpp"

using namespace pluripot;

namespace {

SparsePoly poly(std::size_t n, std::initializer_list<MultiIndex> exps) {
  SparsePoly p(n);
  for (const auto& a : exps) p.add(a, 1.0);
  return p;
}

// alpha in mS by convex-combination feasibility of alpha/m.
bool brute_in_scaled(const Body& s, const MultiIndex& a, long m) {
  Point x = to_point(a);
  for (auto& c : x) c /= m;
  return contains(static_cast<const Polytope&>(s), x);
}

SparsePoly random_member(std::mt19937_64& rng, const Body& s, long m) {
  const auto pts = lattice_points(s, m);
  std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
  std::uniform_real_distribution<double> c(-1, 1);
  SparsePoly p(s.dim());
  for (int k = 0; k < 3; ++k) p.add(pts[pick(rng)], Complex(c(rng), c(rng)));
  if (p.is_zero()) p.add(MultiIndex(s.dim(), 0), 1.0);
  return p;
}

}  // namespace

TEST(LatticePoints, SimplexScaledByTwo) {
  const MultiIndexSet expect = {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}};
  EXPECT_EQ(lattice_points(standard_simplex(2), 2), expect);
}

TEST(LatticePoints, QuadrilateralExcludesFirstAxisPoint) {
  const auto pts = lattice_points(checks::quadrilateral(), 4);
  EXPECT_EQ(std::count(pts.begin(), pts.end(), MultiIndex{1, 0}), 0);
  EXPECT_EQ(std::count(pts.begin(), pts.end(), MultiIndex{0, 4}), 1);
}

TEST(LatticePoints, RationalSegment) {
  const Body seg(2, {make_point({0, 0}), make_point({1, make_rational(3, 2)})});
  const MultiIndexSet expect = {{0, 0}, {2, 3}, {4, 6}};
  EXPECT_EQ(lattice_points(seg, 5), expect);
}

TEST(LatticePoints, MatchesConvexCombinationOracle) {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 20; ++t) {
    const Body s = random_body(rng, 2 + t % 2, 4, 6);
    const long m = 1 + t % 4;
    const auto pts = lattice_points(s, m);
    EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
    std::size_t count = 0;
    const long hi = m + 1;
    for_each_in_box(MultiIndex(s.dim(), 0), MultiIndex(s.dim(), hi), [&](const MultiIndex& a) {
      const bool in = brute_in_scaled(s, a, m);
      count += in;
      EXPECT_EQ(in, std::binary_search(pts.begin(), pts.end(), a));
    });
    EXPECT_EQ(count, pts.size());
  }
}

TEST(LatticePoints, NestedInM) {
  std::mt19937_64 rng(103);
  for (int t = 0; t < 10; ++t) {
    const Body s = random_body(rng, 2, 4);
    for (long m = 1; m < 6; ++m) {
      const auto a = lattice_points(s, m), b = lattice_points(s, m + 1);
      EXPECT_TRUE(std::includes(b.begin(), b.end(), a.begin(), a.end()));
    }
  }
}

TEST(LatticePoints, SurdSegmentHasOnlyOrigin) {
  const SurdSegment seg;
  for (long m = 1; m <= 50; ++m) {
    const auto pts = seg.lattice_points(m);
    ASSERT_EQ(pts.size(), 1u);
    EXPECT_EQ(pts[0], (std::vector<long>{0, 0}));
  }
}

TEST(SDegree, Examples) {
  EXPECT_EQ(s_degree(SparsePoly::constant(2, 1.0), standard_simplex(2)), 0);
  EXPECT_EQ(s_degree(poly(2, {{1, 1}}), standard_simplex(2)), 2);
  EXPECT_EQ(s_degree(poly(2, {{1, 0}}), checks::quadrilateral()), 5);
  EXPECT_EQ(s_degree(SparsePoly(2), standard_simplex(2)), 0);
}

TEST(SDegree, InfiniteOutsideTheCone) {
  const Body seg(2, {make_point({0, 0}), make_point({1, 1})});
  EXPECT_FALSE(s_degree(poly(2, {{1, 0}}), seg).has_value());
  EXPECT_EQ(s_degree(poly(2, {{3, 3}}), seg), 3);
}

TEST(IsMember, Examples) {
  EXPECT_TRUE(is_member(poly(2, {{2, 0}, {0, 1}}), standard_simplex(2), 2));
  EXPECT_FALSE(is_member(poly(2, {{1, 0}}), checks::quadrilateral(), 4));
}

TEST(IsMember, RoundTripsWithDegree) {
  std::mt19937_64 rng(107);
  for (int t = 0; t < 30; ++t) {
    const Body s = random_body(rng, 2, 4);
    const auto p = random_member(rng, s, 1 + t % 5);
    const auto d = s_degree(p, s);
    ASSERT_TRUE(d.has_value());
    EXPECT_TRUE(is_member(p, s, *d));
    if (*d > 0) EXPECT_FALSE(is_member(p, s, *d - 1));
  }
}

TEST(Grading, ProductsAndSumsRespectDegree) {
  std::mt19937_64 rng(109);
  for (int t = 0; t < 30; ++t) {
    const Body s = random_body(rng, 2, 4);
    const long j = 1 + t % 3, k = 1 + (t / 3) % 3;
    const auto p = random_member(rng, s, j), q = random_member(rng, s, k);
    EXPECT_TRUE(is_member(p * q, s, j + k));
    const auto dp = *s_degree(p, s), dq = *s_degree(q, s);
    EXPECT_LE(*s_degree(p * q, s), dp + dq);
    const auto sum = p + q;
    if (!sum.is_zero()) EXPECT_LE(*s_degree(sum, s), std::max(dp, dq));
  }
}

TEST(GapDistance, Examples) {
  EXPECT_DOUBLE_EQ(gap_distance(standard_simplex(2), 2, Norm::L1).distance, 1.0);
  EXPECT_NEAR(gap_distance(standard_simplex(2), 2, Norm::L2).distance, std::sqrt(2.0) / 2, 1e-9);
  EXPECT_DOUBLE_EQ(gap_distance(unit_cube(2), 1, Norm::L1).distance, 1.0);
}

TEST(GapDistance, ExactL1Distance) {
  const Body sig = standard_simplex(2);
  std::vector<Point> scaled;
  for (const auto& p : sig.vertices()) scaled.push_back(Rational(3) * p);
  EXPECT_EQ(l1_distance(scaled, make_point({2, 2})), 1);
  EXPECT_EQ(l1_distance(scaled, make_point({1, 1})), 0);
}

TEST(GapDistance, EuclideanNeverExceedsL1) {
  std::mt19937_64 rng(113);
  for (int t = 0; t < 20; ++t) {
    const Body s = random_body(rng, 2 + t % 2, 4, 6);
    const long m = 1 + t % 3;
    const auto l1 = gap_distance(s, m, Norm::L1), l2 = gap_distance(s, m, Norm::L2);
    EXPECT_GT(l2.distance, 0);
    EXPECT_LE(l2.distance, l1.distance + 1e-9);
    EXPECT_GE(l2.distance * std::sqrt(static_cast<double>(s.dim())), l1.distance - 1e-9);
    const auto pts = lattice_points(s, m);
    EXPECT_FALSE(std::binary_search(pts.begin(), pts.end(), l1.nearest));
  }
}

TEST(GapDistance, MatchesBruteForceInThePlane) {
  std::mt19937_64 rng(127);
  for (int t = 0; t < 10; ++t) {
    const Body s = random_polygon(rng, 4, 6);
    const long m = 1 + t % 3;
    std::vector<Point> verts;
    for (const auto& v : s.vertices()) verts.push_back(Rational(m) * v);
    Rational best = -1;
    for_each_in_box({0, 0}, {m + 3, m + 3}, [&](const MultiIndex& a) {
      if (brute_in_scaled(s, a, m)) return;
      const Rational d = l1_distance(verts, to_point(a));
      if (best < 0 || d < best) best = d;
    });
    EXPECT_NEAR(gap_distance(s, m, Norm::L1).distance, to_double(best), 1e-12);
  }
}

TEST(GrowthProbe, Examples) {
  const Body s = standard_simplex(2);
  const std::vector<double> radii = {2, 4, 8, 16, 32, 64, 128};
  const auto bounded = growth_probe(poly(2, {{3, 0}}), s, 3, 0.0, radii);
  EXPECT_TRUE(bounded.bounded);
  for (double r : bounded.sup_ratio) EXPECT_LE(r, 1 + 1e-9);
  EXPECT_TRUE(growth_probe(SparsePoly::constant(2, 1.0), s, 1, 0.0, radii).bounded);
  const auto grows = growth_probe(poly(2, {{4, 0}}), s, 3, 0.5, radii);
  EXPECT_FALSE(grows.bounded);
  EXPECT_NEAR(grows.growth_exponent, 0.5, 0.1);
  EXPECT_THROW(growth_probe(poly(2, {{1, 0}}), s, 1, -1.0, radii), std::invalid_argument);
}
