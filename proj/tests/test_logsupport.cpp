#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "pluripot/checks.hpp"
#include "pluripot/cone.hpp"
#include "pluripot/logsupport.hpp"
#include "pluripot/surrogates.hpp"

using namespace pluripot;

namespace {

ComplexPoint random_point(std::mt19937_64& rng, std::size_t n, double lo = -3, double hi = 3) {
  std::uniform_real_distribution<double> lr(lo, hi), th(0, 2 * std::numbers::pi);
  ComplexPoint z(n);
  for (auto& c : z) c = std::polar(std::exp(lr(rng)), th(rng));
  return z;
}

double sup_norm(const ComplexPoint& z) {
  double m = 0;
  for (const auto& c : z) m = std::max(m, std::abs(c));
  return m;
}

std::vector<Body> sample_bodies() {
  std::mt19937_64 rng(61);
  std::vector<Body> out{standard_simplex(2), unit_cube(2), checks::quadrilateral(), standard_simplex(3)};
  for (int k = 0; k < 4; ++k) out.push_back(random_body(rng, 2 + k % 2, 5));
  return out;
}

}  // namespace

TEST(HsEval, Examples) {
  const Body s = standard_simplex(2);
  EXPECT_NEAR(hs_eval(s, {2.0, 1.0}), std::log(2.0), 1e-15);
  EXPECT_EQ(hs_eval(s, {1.0, 1.0}), 0.0);
  EXPECT_EQ(hs_eval(s, {0.0, 0.0}), 0.0);
  EXPECT_EQ(hs_eval(lens_surrogate(), {5.0, 0.0}), 0.0);
  EXPECT_EQ(hs_eval(lens_surrogate(), {0.0, 5.0}), 0.0);
}

TEST(HsEval, RejectsBadInput) {
  EXPECT_THROW(hs_eval(standard_simplex(2), {1.0}), std::invalid_argument);
  EXPECT_THROW(hs_eval(standard_simplex(2), {Complex(NAN, 0), 1.0}), std::invalid_argument);
}

TEST(Sigma, Examples) {
  EXPECT_EQ(sigma(standard_simplex(2)), 1);
  EXPECT_EQ(sigma(unit_cube(2)), 2);
  EXPECT_EQ(sigma(checks::quadrilateral()), 1);
}

TEST(SliceBody, Examples) {
  const Body s = standard_simplex(2);
  EXPECT_EQ(slice_body(s, {0}), Body(1, {make_point({0}), make_point({1})}));
  EXPECT_EQ(slice_body(lens_surrogate(), {0}), Body(1, {make_point({0})}));
  EXPECT_EQ(slice_body(lens_surrogate(), {1}), Body(1, {make_point({0})}));
  EXPECT_EQ(slice_body(unit_cube(2), {1}), Body(1, {make_point({0}), make_point({1})}));
  EXPECT_THROW(slice_body(s, {}), std::invalid_argument);
  EXPECT_THROW(slice_body(s, {2}), std::invalid_argument);
}

TEST(ZeroSetProbe, Examples) {
  EXPECT_TRUE(hs_zero_set_probe(standard_simplex(2), {0.5, 0.5}));
  EXPECT_FALSE(hs_zero_set_probe(standard_simplex(2), {2.0, 0.5}));
  EXPECT_TRUE(hs_zero_set_probe(lens_surrogate(), {1e6, 0.0}));
}

TEST(HsInvariants, Homogeneity) {
  std::mt19937_64 rng(67);
  for (const auto& s : sample_bodies())
    for (int k = 0; k < 50; ++k) {
      const auto z = random_point(rng, s.dim());
      const double lam = 0.25 + 3 * std::uniform_real_distribution<double>(0, 1)(rng);
      ComplexPoint zl(z.size());
      for (std::size_t i = 0; i < z.size(); ++i) zl[i] = std::pow(std::abs(z[i]), lam);
      EXPECT_NEAR(hs_eval(s, zl), lam * hs_eval(s, z), 1e-9 * (1 + std::abs(hs_eval(s, zl))));
    }
}

TEST(HsInvariants, Submultiplicative) {
  std::mt19937_64 rng(71);
  for (const auto& s : sample_bodies())
    for (int k = 0; k < 50; ++k) {
      const auto z = random_point(rng, s.dim()), w = random_point(rng, s.dim());
      ComplexPoint zw(z.size());
      for (std::size_t i = 0; i < z.size(); ++i) zw[i] = z[i] * w[i];
      EXPECT_LE(hs_eval(s, zw), hs_eval(s, z) + hs_eval(s, w) + 1e-9);
    }
}

TEST(HsInvariants, ScalarBound) {
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> lr(-4, 4);
  for (const auto& s : sample_bodies()) {
    const double sig = to_double(sigma(s));
    for (int k = 0; k < 50; ++k) {
      const auto z = random_point(rng, s.dim());
      const Complex lam = std::polar(std::exp(lr(rng)), 1.0);
      ComplexPoint lz(z.size());
      for (std::size_t i = 0; i < z.size(); ++i) lz[i] = lam * z[i];
      EXPECT_LE(hs_eval(s, lz), hs_eval(s, z) + sig * log_plus(std::abs(lam)) + 1e-9);
    }
  }
}

TEST(HsInvariants, DiscBoundNearOne) {
  std::mt19937_64 rng(79);
  std::uniform_real_distribution<double> u(0, 1), th(0, 2 * std::numbers::pi);
  for (const auto& s : sample_bodies()) {
    const double sig = to_double(sigma(s));
    for (int k = 0; k < 100; ++k) {
      const double delta = 0.01 + 0.98 * u(rng);
      ComplexPoint z(s.dim());
      for (auto& c : z) c = 1.0 + delta * std::polar(u(rng), th(rng));
      EXPECT_LE(hs_eval(s, z), delta * sig + 1e-9);
    }
  }
}

TEST(HsInvariants, ContinuousAcrossCoordinateHyperplanes) {
  std::mt19937_64 rng(83);
  for (const auto& s : sample_bodies())
    for (int k = 0; k < 20; ++k) {
      auto a = random_point(rng, s.dim());
      a[k % s.dim()] = 0.0;
      const double target = hs_eval(s, a);
      auto z = a;
      z[k % s.dim()] = Complex(1e-12, 1e-12);
      EXPECT_NEAR(hs_eval(s, z), target, 1e-6);
    }
}

TEST(HsInvariants, LowerSetProductIdentity) {
  std::mt19937_64 rng(89);
  for (const auto& s : sample_bodies()) {
    bool gap_seen = false;
    for (int k = 0; k < 200; ++k) {
      const auto z = random_point(rng, s.dim());
      const double diff = hs_log_plus(s, z) - hs_eval(s, z);
      EXPECT_GE(diff, -1e-9);  // phi_S(Log+ z) always dominates
      if (is_lower_set(s)) EXPECT_LE(diff, 1e-9);
      gap_seen = gap_seen || diff > 1e-6;
    }
    if (!is_lower_set(s)) {
      // A witness direction xi gives the point z = exp(xi) with a strict gap.
      const auto w = lower_set_witness(s);
      ASSERT_TRUE(w.has_value());
      ComplexPoint z(s.dim());
      for (std::size_t i = 0; i < z.size(); ++i) z[i] = std::exp(to_double((*w)[i]));
      EXPECT_GT(hs_log_plus(s, z) - hs_eval(s, z), 1e-9);
    }
  }
}

TEST(HsInvariants, LowerSetDifferenceBound) {
  std::mt19937_64 rng(97);
  std::uniform_real_distribution<double> u(-1, 1);
  for (const auto& s : sample_bodies()) {
    if (!is_lower_set(s)) continue;
    const double sig = to_double(sigma(s));
    for (int k = 0; k < 100; ++k) {
      const auto z = random_point(rng, s.dim(), -2, 2);
      ComplexPoint w(s.dim()), d(s.dim());
      const double scale = std::exp(3 * u(rng));
      for (std::size_t i = 0; i < w.size(); ++i) {
        w[i] = scale * Complex(u(rng), u(rng));
        d[i] = z[i] - w[i];
      }
      EXPECT_LE(hs_eval(s, d), sig * sup_norm(w) + hs_eval(s, z) + 1e-9);
    }
  }
}

TEST(LensSurrogate, InscribedAndTouchingAxesOnlyAtOrigin) {
  const Body l = lens_surrogate(64);
  EXPECT_EQ(l.vertices().size(), 2 * 64u);
  for (const auto& v : l.vertices()) {
    const double x = to_double(v[0]), y = to_double(v[1]);
    EXPECT_LE((x - 1) * (x - 1) + y * y, 1 + 1e-12);
    EXPECT_LE(x * x + (y - 1) * (y - 1), 1 + 1e-12);
  }
  EXPECT_FALSE(is_lower_set(l));
}
