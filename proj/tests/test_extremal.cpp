#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "pluripot/checks.hpp"
#include "pluripot/extremal.hpp"
#include "pluripot/surrogates.hpp"

using namespace pluripot;

namespace {

const double kE = std::exp(1.0);

Body unit_interval() { return Body(1, {make_point({0}), make_point({1})}); }

WeightedSampleSet circle(std::size_t count, double q = 0) {
  auto k = torus_samples({count});
  for (auto& w : k.weights) w = q;
  return k;
}

// Every phase constraint written out at once: maximize Re p(z) subject to
// Re(e^{-i phi_k} p(x)) <= e^{m q(x)} for all samples x and all P phases.
double dense_phi(const Body& s, const WeightedSampleSet& k, long m, const ComplexPoint& z, std::size_t phases) {
  const auto basis = lattice_points(s, m);
  auto mono = [](const MultiIndex& a, const ComplexPoint& x) {
    Complex v = 1.0;
    for (std::size_t i = 0; i < a.size(); ++i) v *= std::pow(x[i], static_cast<int>(a[i]));
    return v;
  };
  LPProblem<double> lp;
  const std::size_t nb = basis.size();
  lp.bounds.assign(2 * nb, VariableBound<double>::free());
  lp.objective.resize(2 * nb);
  for (std::size_t a = 0; a < nb; ++a) {
    const Complex v = mono(basis[a], z);
    lp.objective[2 * a] = v.real();
    lp.objective[2 * a + 1] = -v.imag();
  }
  for (std::size_t j = 0; j < k.points.size(); ++j)
    for (std::size_t p = 0; p < phases; ++p) {
      const Complex rot = std::polar(1.0, -2 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(phases));
      std::vector<double> row(2 * nb);
      for (std::size_t a = 0; a < nb; ++a) {
        const Complex v = rot * mono(basis[a], k.points[j]);
        row[2 * a] = v.real();
        row[2 * a + 1] = -v.imag();
      }
      lp.add_row(std::move(row), Sense::LessEqual, std::exp(static_cast<double>(m) * k.weights[j]));
    }
  const auto r = lp_solve(lp);
  EXPECT_TRUE(r.optimal());
  return std::pow(r.value, 1.0 / static_cast<double>(m));
}

}  // namespace

TEST(PhiM, DiscOutsidePoint) {
  const auto r = phi_m(unit_interval(), circle(64), 3, {2.0}, 32);
  ASSERT_TRUE(r.solved());
  EXPECT_GE(r.value, 2 / 1.02);
  EXPECT_LE(r.value, 2 * 1.02);
  EXPECT_GE(r.value, 2.0 - 1e-9);
}

TEST(PhiM, DiscInsidePoint) {
  const auto r = phi_m(unit_interval(), circle(64), 3, {0.5}, 32);
  ASSERT_TRUE(r.solved());
  EXPECT_NEAR(r.value, 1.0, 0.02);
}

TEST(PhiM, ConstantWeightShiftScalesByExp) {
  const Body s = standard_simplex(2);
  const ComplexPoint z = {Complex(1.5, 0.3), Complex(-0.4, 1.1)};
  const double base = phi_m(s, torus_samples({8, 8}), 2, z).value;
  for (double c : {-0.7, 0.3, 1.2}) {
    auto k = torus_samples({8, 8});
    for (auto& w : k.weights) w = c;
    EXPECT_NEAR(phi_m(s, k, 2, z).value, std::exp(c) * base, 1e-6 * std::exp(c) * base);
  }
}

TEST(PhiM, MatchesDenseLP) {
  const Body s = standard_simplex(2);
  const auto k = torus_samples({6, 6});
  const ComplexPoint z = {Complex(1.3, 0.5), Complex(0.2, -1.7)};
  for (std::size_t phases : {16u, 32u}) {
    const auto r = phi_m(s, k, 2, z, phases);
    ASSERT_TRUE(r.solved());
    EXPECT_NEAR(r.value, dense_phi(s, k, 2, z, phases), 1e-8 * r.value);
    EXPECT_LE(r.constraints, k.points.size() * phases);
  }
}

TEST(PhiM, MatchesDenseLPWithWeights) {
  const Body q = checks::quadrilateral();
  auto k = torus_samples({5, 5});
  std::mt19937_64 rng(131);
  std::uniform_real_distribution<double> u(0, 0.5);
  for (auto& p : k.points)
    for (auto& c : p) c *= 1 + u(rng);
  for (auto& w : k.weights) w = u(rng);
  const ComplexPoint z = {Complex(2.0, 1.0), Complex(-1.0, 0.5)};
  const auto r = phi_m(q, k, 4, z, 16);
  ASSERT_TRUE(r.solved());
  EXPECT_NEAR(r.value, dense_phi(q, k, 4, z, 16), 1e-8 * r.value);
}

TEST(PhiM, NonincreasingUnderPhaseRefinement) {
  const Body s = standard_simplex(2);
  const auto k = torus_samples({8, 8});
  const ComplexPoint z = {Complex(2.0, 0.5), Complex(0.7, 0.9)};
  double prev = std::numeric_limits<double>::infinity();
  for (std::size_t phases : {8u, 16u, 32u, 64u, 128u}) {
    const auto r = phi_m(s, k, 3, z, phases);
    ASSERT_TRUE(r.solved());
    EXPECT_LE(r.value, prev * (1 + 1e-9));
    EXPECT_NEAR(r.lower_bound, r.value * std::pow(std::cos(std::numbers::pi / static_cast<double>(phases)), 1.0 / 3), 1e-12);
    prev = r.value;
  }
}

TEST(PhiM, AtLeastExpOfMinimumWeight) {
  std::mt19937_64 rng(137);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int t = 0; t < 5; ++t) {
    auto k = torus_samples({6, 6});
    for (auto& w : k.weights) w = u(rng);
    const double qmin = *std::min_element(k.weights.begin(), k.weights.end());
    const ComplexPoint z = {Complex(u(rng), u(rng)), Complex(u(rng), u(rng))};
    EXPECT_GE(phi_m(standard_simplex(2), k, 2, z).value, std::exp(qmin) * (1 - 1e-9));
  }
}

TEST(PhiM, RealPathAgreesWithComplexData) {
  const auto k = circle(32);
  const auto r = phi_m(unit_interval(), k, 2, {1.5}, 32);
  ASSERT_TRUE(r.solved());
  EXPECT_NEAR(r.value, dense_phi(unit_interval(), k, 2, {1.5}, 32), 1e-8);
}

TEST(PhiM, RejectsBadArguments) {
  const auto k = torus_samples({4, 4});
  EXPECT_THROW(phi_m(standard_simplex(2), k, 0, {1.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(phi_m(standard_simplex(2), k, 1, {1.0, 1.0}, 4), std::invalid_argument);
  EXPECT_THROW(phi_m(standard_simplex(2), k, 1, {1.0}), std::invalid_argument);
}

TEST(Fekete, DiscExampleHolds) {
  const auto rep = fekete_check(unit_interval(), circle(64), {{1, 1}, {1, 2}, {2, 2}}, {2.0}, 32);
  EXPECT_TRUE(rep.all_hold);
  EXPECT_EQ(rep.rows.size(), 3u);
}

TEST(Fekete, FlatOnTheSampleSet) {
  const auto k = torus_samples({8, 8});
  const ComplexPoint z = k.points[3];
  const auto rep = fekete_check(standard_simplex(2), k, {{1, 1}, {1, 2}, {2, 2}}, z, 64);
  EXPECT_TRUE(rep.all_hold);
  const double tol = 1 / std::cos(std::numbers::pi / 64);
  for (const auto& [m, r] : rep.phi) {
    EXPECT_GE(r.value, 1 - 1e-9);
    EXPECT_LE(r.value, tol + 1e-9);
  }
}

TEST(MonomialTorusBound, SimplexAtE) {
  EXPECT_NEAR(monomial_torus_bound(standard_simplex(2), 1, {kE, kE}), 1.0, 1e-15);
}

TEST(MonomialTorusBound, QuadrilateralIncreasesTowardSupport) {
  const Body q = checks::quadrilateral();
  const ComplexPoint z = {kE, 1.0};
  double prev = -1;
  for (long m : {4, 8, 16, 32}) {
    const double v = monomial_torus_bound(q, m, z);
    EXPECT_GE(v, prev - 1e-15);
    EXPECT_LE(v, 0.8 + 1e-15);
    prev = v;
  }
  EXPECT_NEAR(monomial_torus_bound(q, 5, z), 0.8, 1e-15);
}

TEST(MonomialTorusBound, NeverExceedsHsAndGrowsAlongDoubling) {
  std::mt19937_64 rng(139);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int t = 0; t < 10; ++t) {
    const Body s = random_body(rng, 2, 4);
    const ComplexPoint z = {std::exp(u(rng)), std::exp(u(rng))};
    double prev = -std::numeric_limits<double>::infinity();
    for (long m : {1, 2, 4, 8}) {
      const double v = monomial_torus_bound(s, m, z);
      EXPECT_LE(v, hs_eval(s, z) + 1e-12);
      EXPECT_GE(v, prev - 1e-12);
      prev = v;
    }
  }
  EXPECT_THROW(monomial_torus_bound(standard_simplex(2), 1, {0.0, 1.0}), std::invalid_argument);
}

TEST(MonomialTorusBound, SurdSegmentStaysAtZero) {
  const SurdSegment seg;
  for (long m : {1, 7, 50}) EXPECT_EQ(seg.monomial_torus_bound(m, {kE, kE}), 0.0);
  EXPECT_NEAR(seg.hs_eval({kE, kE}), 1 + std::sqrt(2.0), 1e-12);
}

TEST(ValidateWeight, CircleWithZeroWeightPasses) {
  EXPECT_TRUE(validate_weight(unit_interval(), circle(32), false).pass());
}

TEST(ValidateWeight, GrowingWeightHasDecreasingTrend) {
  const Body s = standard_simplex(2);
  const double sig = to_double(sigma(s));
  WeightedSampleSet e;
  for (int i = -10; i <= 10; ++i)
    for (int j = -10; j <= 10; ++j) {
      const ComplexPoint z = {Complex(5.0 * i, 1.0), Complex(3.0, 5.0 * j)};
      double nn = 0;
      for (const auto& c : z) nn += std::norm(c);
      e.points.push_back(z);
      e.weights.push_back(2 * sig * std::log1p(std::sqrt(nn)));
    }
  const auto rep = validate_weight(s, e, true);
  ASSERT_TRUE(rep.trend_ok.has_value());
  EXPECT_TRUE(*rep.trend_ok);
  EXPECT_TRUE(rep.pass());
}

TEST(ValidateWeight, RejectsMinusInfinity) {
  auto k = circle(16);
  k.weights[3] = -std::numeric_limits<double>::infinity();
  const auto rep = validate_weight(unit_interval(), k, false);
  EXPECT_FALSE(rep.finite_ok);
  EXPECT_FALSE(rep.pass());
}

TEST(ValidateWeight, FlagsDegenerateSamples) {
  WeightedSampleSet e;
  for (int i = 0; i < 10; ++i) {
    e.points.push_back({Complex(i, 0), Complex(2 * i, 0)});
    e.weights.push_back(0);
  }
  EXPECT_FALSE(validate_weight(standard_simplex(2), e, false).nontrivial_ok);
}
