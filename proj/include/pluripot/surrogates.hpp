#pragma once

// Rational stand-ins for non-polytopal bodies, an exact model of the segment
// in direction (1, sqrt 2), and random instance generators.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "cone.hpp"
#include "logsupport.hpp"
#include "polytope.hpp"
#include "rational.hpp"

namespace pluripot {

/// Inscribed polygon of the lens B_1(e_1) ∩ B_1(e_2). Each boundary arc is
/// sampled at the rational points of the circle with tangent-half-angle
/// parameter u = k/steps, k = 0..steps, so the polygon has 2*steps vertices
/// and meets the axes only at the origin.
inline Body lens_surrogate(std::size_t steps = 128) {
  if (steps == 0) throw std::invalid_argument("lens_surrogate: steps must be positive");
  std::vector<Point> pts;
  for (std::size_t k = 0; k <= steps; ++k) {
    const Rational u = make_rational(static_cast<long>(k), static_cast<long>(steps));
    const Rational d = 1 + u * u;
    const Rational c = (1 - u * u) / d;
    const Rational s = 2 * u / d;
    pts.push_back(make_point({s, 1 - c}));  // arc of the circle about e_2
    pts.push_back(make_point({1 - c, s}));  // arc of the circle about e_1
  }
  return Body(2, std::move(pts));
}

/// The segment {t(1, sqrt 2) : 0 <= t <= 1}. Membership of integer points in
/// mS is decided exactly: b = sqrt(2) a has no integer solution but a = b = 0.
/// A fixed-point enclosure of sqrt 2 with 64 fractional bits screens most
/// points before the exact test.
class SurdSegment {
 public:
  SurdSegment() {
    mpz_class two_scaled = mpz_class(2) << 128;
    mpz_sqrt(lo_.get_mpz_t(), two_scaled.get_mpz_t());
    hi_ = lo_ + 1;
  }

  static constexpr double kSqrt2 = 1.41421356237309504880;

  /// Is (a, b) in m·S?
  bool contains_scaled(long a, long b, long m) const {
    if (a < 0 || b < 0 || a > m) return false;
    const mpz_class bs = mpz_class(b) << 64;
    if (bs < lo_ * a || bs > hi_ * a) return false;
    return mpz_class(b) * b == 2 * mpz_class(a) * a;
  }

  /// Integer points of mS over the box [0, m] x [0, ceil(m sqrt 2)].
  std::vector<std::vector<long>> lattice_points(long m) const {
    std::vector<std::vector<long>> out;
    const long bmax = static_cast<long>(std::ceil(static_cast<double>(m) * kSqrt2));
    for (long a = 0; a <= m; ++a)
      for (long b = 0; b <= bmax; ++b)
        if (contains_scaled(a, b, m)) out.push_back({a, b});
    return out;
  }

  double support(double x, double y) const { return std::max(0.0, x + kSqrt2 * y); }

  /// H_S(z); the slice bodies on both axes are {0}.
  double hs_eval(const ComplexPoint& z) const {
    if (z.size() != 2) throw std::invalid_argument("SurdSegment::hs_eval: dimension mismatch");
    if (z[0] == Complex(0, 0) || z[1] == Complex(0, 0)) return 0.0;
    return support(std::log(std::abs(z[0])), std::log(std::abs(z[1])));
  }

  /// max over lattice points of mS of (1/m)<alpha, Log z>.
  double monomial_torus_bound(long m, const ComplexPoint& z) const {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& a : lattice_points(m)) {
      const double v = (static_cast<double>(a[0]) * std::log(std::abs(z[0])) +
                        static_cast<double>(a[1]) * std::log(std::abs(z[1]))) /
                       static_cast<double>(m);
      best = std::max(best, v);
    }
    return best;
  }

 private:
  mpz_class lo_, hi_;
};

/// Uniform rational in [0, 1] with the given denominator.
inline Rational random_rational(std::mt19937_64& rng, long denom) {
  std::uniform_int_distribution<long> d(0, denom);
  return make_rational(d(rng), denom);
}

/// Hull of the origin and `count` random points of [0,1]^n with coordinates
/// on the grid (1/denom)Z.
inline Body random_body(std::mt19937_64& rng, std::size_t n, std::size_t count, long denom = 12) {
  std::vector<Point> pts{zero_point(n)};
  for (std::size_t k = 0; k < count; ++k) {
    Point p(n);
    for (auto& c : p) c = random_rational(rng, denom);
    pts.push_back(std::move(p));
  }
  return reduced(Body(n, std::move(pts)));
}

/// Hull of the origin, a random point of the first axis and `count` random
/// grid points of (0,1]^2.
inline Body random_polygon(std::mt19937_64& rng, std::size_t count, long denom = 24) {
  std::vector<Point> pts{zero_point(2)};
  std::uniform_int_distribution<long> d(1, denom);
  for (std::size_t k = 0; k < count; ++k) pts.push_back(make_point({make_rational(d(rng), denom), make_rational(d(rng), denom)}));
  pts.push_back(make_point({make_rational(d(rng), denom), 0}));
  return reduced(Body(2, std::move(pts)));
}

/// A random polyhedral cone meeting the open positive orthant: a strictly
/// positive generator plus a few integer directions from [-3, 3]^n.
inline PolyCone random_cone(std::mt19937_64& rng, std::size_t n, std::size_t extra = 2) {
  std::uniform_int_distribution<int> pos(1, 3), any(-3, 3);
  std::vector<Point> gens;
  Point p(n);
  for (auto& c : p) c = pos(rng);
  gens.push_back(std::move(p));
  for (std::size_t k = 0; k < extra; ++k) {
    Point g(n);
    for (auto& c : g) c = any(rng);
    if (std::all_of(g.begin(), g.end(), [](const Rational& c) { return sgn(c) == 0; })) continue;
    gens.push_back(std::move(g));
  }
  return PolyCone::from_generators(n, std::move(gens));
}

/// Random rational direction with integer entries in [-r, r], not all zero.
inline Point random_direction(std::mt19937_64& rng, std::size_t n, long r = 6) {
  std::uniform_int_distribution<long> d(-r, r);
  while (true) {
    Point p(n);
    bool nz = false;
    for (auto& c : p) {
      c = d(rng);
      nz = nz || sgn(c) != 0;
    }
    if (nz) return p;
  }
}

}  // namespace pluripot
