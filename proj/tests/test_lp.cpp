#include <gtest/gtest.h>

#include <random>

#include "pluripot/lp.hpp"

using namespace pluripot;

TEST(LP, SingleBound) {
  LPProblem<Rational> p;
  p.objective = {1};
  p.add_row({1}, Sense::LessEqual, 3);
  const auto r = lp_solve(p);
  ASSERT_TRUE(r.optimal());
  EXPECT_EQ(r.value, 3);
  EXPECT_EQ(r.x[0], 3);
}

TEST(LP, Infeasible) {
  LPProblem<Rational> p;
  p.objective = {1, 1};
  p.add_row({1, 1}, Sense::LessEqual, 1);
  p.add_row({1, 1}, Sense::GreaterEqual, 2);
  EXPECT_EQ(lp_solve(p).status, LPStatus::Infeasible);
}

TEST(LP, Unbounded) {
  LPProblem<double> p;
  p.objective = {1, 0};
  p.add_row({-1, 1}, Sense::LessEqual, 1);
  EXPECT_EQ(lp_solve(p).status, LPStatus::Unbounded);
}

TEST(LP, EqualityAndFreeVariables) {
  LPProblem<Rational> p;
  p.objective = {1, 1};
  p.minimize = true;
  p.bounds = {VariableBound<Rational>::free(), VariableBound<Rational>::free()};
  p.add_row({1, -1}, Sense::Equal, 2);
  p.add_row({1, 0}, Sense::GreaterEqual, -5);
  p.add_row({0, 1}, Sense::GreaterEqual, -5);
  const auto r = lp_solve(p);
  ASSERT_TRUE(r.optimal());
  EXPECT_EQ(r.value, -8);
}

// Degenerate example on which the largest-coefficient rule cycles.
TEST(LP, DegenerateVertexTerminates) {
  LPProblem<Rational> p;
  p.objective = {10, -57, -9, -24};
  p.add_row({make_rational(1, 2), make_rational(-11, 2), make_rational(-5, 2), 9}, Sense::LessEqual, 0);
  p.add_row({make_rational(1, 2), make_rational(-3, 2), make_rational(-1, 2), 1}, Sense::LessEqual, 0);
  p.add_row({1, 0, 0, 0}, Sense::LessEqual, 1);
  const auto r = lp_solve(p);
  ASSERT_TRUE(r.optimal());
  EXPECT_EQ(r.value, 1);
}

namespace {

// Brute force: every vertex of {Ax <= b, x >= 0} in the plane is the
// intersection of two tight constraints.
Rational brute_force_max(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                         const std::vector<Rational>& c, bool& feasible) {
  std::vector<std::vector<Rational>> rows = a;
  std::vector<Rational> rhs = b;
  rows.push_back({-1, 0});
  rhs.push_back(0);
  rows.push_back({0, -1});
  rhs.push_back(0);
  feasible = false;
  Rational best;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      const Rational det = rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0];
      if (det == 0) continue;
      const Rational x = (rhs[i] * rows[j][1] - rows[i][1] * rhs[j]) / det;
      const Rational y = (rows[i][0] * rhs[j] - rhs[i] * rows[j][0]) / det;
      bool ok = true;
      for (std::size_t k = 0; k < rows.size() && ok; ++k) ok = rows[k][0] * x + rows[k][1] * y <= rhs[k];
      if (!ok) continue;
      const Rational v = c[0] * x + c[1] * y;
      if (!feasible || v > best) best = v;
      feasible = true;
    }
  return best;
}

}  // namespace

TEST(LP, RandomPlanarProblemsMatchVertexEnumeration) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    LPProblem<Rational> p;
    p.objective = {d(rng), d(rng)};
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    const int rows = 2 + trial % 4;
    for (int k = 0; k < rows; ++k) {
      a.push_back({d(rng), d(rng)});
      b.push_back(d(rng));
    }
    a.push_back({1, 0});
    b.push_back(10);
    a.push_back({0, 1});
    b.push_back(10);
    for (std::size_t k = 0; k < a.size(); ++k) p.add_row(a[k], Sense::LessEqual, b[k]);
    bool feasible = false;
    const Rational expect = brute_force_max(a, b, p.objective, feasible);
    const auto r = lp_solve(p);
    if (!feasible) {
      EXPECT_EQ(r.status, LPStatus::Infeasible) << "trial " << trial;
      continue;
    }
    ASSERT_TRUE(r.optimal()) << "trial " << trial;
    EXPECT_EQ(r.value, expect) << "trial " << trial;

    // Strong duality: the row multipliers certify the value.
    Rational dual_value = 0;
    for (std::size_t k = 0; k < b.size(); ++k) {
      EXPECT_GE(r.duals[k], 0);
      dual_value += b[k] * r.duals[k];
    }
    EXPECT_EQ(dual_value, r.value) << "trial " << trial;

    // The double solver agrees.
    LPProblem<double> pd;
    pd.objective = {to_double(p.objective[0]), to_double(p.objective[1])};
    for (std::size_t k = 0; k < a.size(); ++k)
      pd.add_row({to_double(a[k][0]), to_double(a[k][1])}, Sense::LessEqual, to_double(b[k]));
    const auto rd = lp_solve(pd);
    ASSERT_TRUE(rd.optimal());
    EXPECT_NEAR(rd.value, to_double(expect), 1e-9);
  }
}

TEST(LP, ValidateRejectsRaggedRows) {
  LPProblem<double> p;
  p.objective = {1, 1};
  p.add_row({1}, Sense::LessEqual, 1);
  EXPECT_THROW(lp_solve(p), std::invalid_argument);
}
