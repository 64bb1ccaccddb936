#pragma once

// Monge-Ampere total mass, weighted L2 norms of monomials over the normal
// fan, the strict-interior finiteness test, and the circular cones Gamma_a.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cone.hpp"
#include "linalg.hpp"
#include "lp.hpp"
#include "polyspace.hpp"
#include "polytope.hpp"
#include "quadrature.hpp"
#include "rational.hpp"

namespace pluripot {

struct MassReport {
  std::size_t dim = 0;
  Rational volume;      // vol(S)
  mpz_class factorial;  // n!
  Rational factor;      // n! vol(S); the mass is (2 pi)^n times this
  double value = 0;
  bool exact = true;

  std::string formula() const {
    return "(2π)^" + std::to_string(dim) + " · " + factorial.get_str() + " · " + to_string(volume);
  }
};

/// (2 pi)^n n! vol(S). Exact rational factor for n <= 4; a Monte Carlo
/// volume (flagged inexact) beyond that.
inline MassReport ma_total_mass(const Body& s, std::size_t mc_samples = 1'000'000, std::uint64_t seed = 1) {
  MassReport r;
  r.dim = s.dim();
  r.factorial = detail::factorial(s.dim());
  const double two_pi_n = std::pow(2 * std::numbers::pi, static_cast<double>(s.dim()));
  if (s.dim() <= kMaxExactVolumeDim) {
    r.volume = volume(s);
    r.factor = Rational(r.factorial) * r.volume;
    r.value = two_pi_n * r.factor.get_d();
  } else {
    r.exact = false;
    const auto est = volume_monte_carlo(s, mc_samples, seed);
    r.volume = from_double(est.value);
    r.factor = Rational(r.factorial) * r.volume;
    r.value = two_pi_n * r.factorial.get_d() * est.value;
  }
  return r;
}

/// True iff alpha + 1 lies in the interior of mS, i.e. <alpha+1, xi> < m phi_S(xi)
/// for every xi != 0. Exact: maximize t subject to lambda_i >= t over convex
/// weights of the extreme points representing alpha + 1; the point is
/// interior iff mS is full-dimensional and the optimum is positive.
inline bool l2_finiteness(const Body& s, const MultiIndex& alpha, long m) {
  const std::size_t n = s.dim();
  if (alpha.size() != n) throw std::invalid_argument("l2_finiteness: dimension mismatch");
  if (m < 1) throw std::invalid_argument("l2_finiteness: m must be positive");
  const auto ext = extreme_points(s);
  if (affine_dimension(ext) < n) return false;
  const std::size_t k = ext.size();
  LPProblem<Rational> lp;
  lp.objective.assign(k + 1, Rational(0));
  lp.objective[k] = 1;
  lp.bounds.assign(k + 1, VariableBound<Rational>{});
  lp.bounds[k] = VariableBound<Rational>::free();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row(k + 1);
    for (std::size_t j = 0; j < k; ++j) row[j] = m * ext[j][i];
    lp.add_row(std::move(row), Sense::Equal, Rational(alpha[i] + 1));
  }
  std::vector<Rational> sum(k + 1, Rational(1));
  sum[k] = 0;
  lp.add_row(std::move(sum), Sense::Equal, Rational(1));
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Rational> row(k + 1);
    row[j] = 1;
    row[k] = -1;
    lp.add_row(std::move(row), Sense::GreaterEqual, Rational(0));
  }
  const auto r = lp_solve(lp);
  return r.optimal() && sgn(r.value) > 0;
}

enum class L2Method { ClosedForm2D, Quadrature };

inline const char* to_string(L2Method m) { return m == L2Method::ClosedForm2D ? "closed_form_2d" : "quadrature"; }

/// One normal cone N_s = cone(ray1, ray2) of a planar body and its integral
/// of exp(<2(alpha+1) - 2ms, xi>).
struct ConeTerm {
  Point vertex, ray1, ray2;
  Rational value;
};

struct L2Result {
  bool infinite = false;
  double value = 0;  // squared weighted norm, including the (2 pi)^n factor
  double error_bound = 0;
  std::optional<Rational> rational_factor;  // value = (2 pi)^n * factor (closed form)
  std::vector<ConeTerm> terms;
  L2Method method = L2Method::ClosedForm2D;
  double box_half_width = 0;
  double tail_bound = 0;
  double gap = 0;  // min of 2m phi_S - <2(alpha+1), .> on the unit sup-sphere
  std::size_t evals = 0;
  bool converged = true;
};

/// min over {||xi||_inf = 1} of 2m phi_S(xi) - <beta, xi>, by one exact LP
/// per face of the cube.
inline Rational sup_sphere_gap(const Body& s, const Point& beta, long m) {
  const std::size_t n = s.dim();
  const auto ext = extreme_points(s);
  std::optional<Rational> best;
  for (std::size_t face = 0; face < 2 * n; ++face) {
    const std::size_t axis = face / 2;
    const Rational fixed = face % 2 ? Rational(1) : Rational(-1);
    // variables xi_1..xi_n, t; minimize t with t >= <2m v - beta, xi>.
    LPProblem<Rational> lp;
    lp.minimize = true;
    lp.objective.assign(n + 1, Rational(0));
    lp.objective[n] = 1;
    lp.bounds.assign(n + 1, VariableBound<Rational>{Rational(-1), Rational(1)});
    lp.bounds[axis] = VariableBound<Rational>{fixed, fixed};
    lp.bounds[n] = VariableBound<Rational>::free();
    for (const auto& v : ext) {
      std::vector<Rational> row(n + 1);
      for (std::size_t i = 0; i < n; ++i) row[i] = -(2 * m * v[i] - beta[i]);
      row[n] = 1;
      lp.add_row(std::move(row), Sense::GreaterEqual, Rational(0));
    }
    const auto r = lp_solve(lp);
    if (!r.optimal()) throw std::runtime_error("sup_sphere_gap: LP failed");
    if (!best || r.value < *best) best = r.value;
  }
  return *best;
}

/// Integral of exp(-g ||xi||_inf) over {||xi||_inf > L} in R^n.
inline double sup_norm_tail(std::size_t n, double g, double l) {
  // shells of the sup norm have (n-1)-volume 2n (2r)^(n-1)
  double sum = 0, fact = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (j > 0) fact *= static_cast<double>(n - j);
    sum += fact * std::pow(l, static_cast<double>(n - 1 - j)) / std::pow(g, static_cast<double>(j + 1));
  }
  return std::ldexp(1.0, static_cast<int>(n)) * static_cast<double>(n) * std::exp(-g * l) * sum;
}

struct L2Options {
  double rel_tol = 1e-9;
  std::size_t max_evals = 20'000'000;
};

/// Squared norm of z^alpha in L2(C^n, exp(-2m H_S)):
///   (2 pi)^n ∫_{R^n} exp(<2(alpha+1), xi> - 2m phi_S(xi)) dxi,
/// or infinite when alpha + 1 is not interior to mS.
inline L2Result monomial_l2_norm(const Body& s, const MultiIndex& alpha, long m, L2Method method,
                                 const L2Options& opt = {}) {
  const std::size_t n = s.dim();
  if (alpha.size() != n) throw std::invalid_argument("monomial_l2_norm: dimension mismatch");
  L2Result res;
  res.method = method;
  if (method == L2Method::ClosedForm2D && n != 2)
    throw std::invalid_argument("monomial_l2_norm: closed_form_2d needs n = 2");
  if (!l2_finiteness(s, alpha, m)) {
    res.infinite = true;
    res.value = std::numeric_limits<double>::infinity();
    return res;
  }
  const double two_pi_n = std::pow(2 * std::numbers::pi, static_cast<double>(n));
  Point beta(n);
  for (std::size_t i = 0; i < n; ++i) beta[i] = 2 * (alpha[i] + 1);

  if (method == L2Method::ClosedForm2D) {
    Rational total = 0;
    for (const auto& v : extreme_points(s)) {
      const auto rays = cone_rays(2, normal_cone(s, v).inequalities());
      if (rays.rays.size() != 2 || !rays.lineality.empty())
        throw std::logic_error("monomial_l2_norm: normal cone is not a pointed planar sector");
      const Point w = beta - Rational(2 * m) * v;
      const Point& r1 = rays.rays[0];
      const Point& r2 = rays.rays[1];
      const Rational det = abs(r1[0] * r2[1] - r1[1] * r2[0]);
      ConeTerm t{v, r1, r2, det / (dot(w, r1) * dot(w, r2))};
      total += t.value;
      res.terms.push_back(std::move(t));
    }
    res.rational_factor = total;
    res.value = two_pi_n * total.get_d();
    return res;
  }

  const Rational gap = sup_sphere_gap(s, beta, m);
  res.gap = gap.get_d();
  const auto& verts = s.vertices_double();
  const std::vector<double> bd = to_double(beta);
  const double dm = static_cast<double>(m);
  Integrand f = [&](const std::vector<double>& xi) {
    double phi = -std::numeric_limits<double>::infinity();
    for (const auto& v : verts) {
      double d = 0;
      for (std::size_t i = 0; i < n; ++i) d += v[i] * xi[i];
      phi = std::max(phi, d);
    }
    double lin = 0;
    for (std::size_t i = 0; i < n; ++i) lin += bd[i] * xi[i];
    return std::exp(lin - 2 * dm * phi);
  };
  QuadratureOptions qo;
  qo.rel_tol = opt.rel_tol;
  qo.max_evals = opt.max_evals;
  auto run = [&](double l) {
    std::vector<std::pair<std::vector<double>, std::vector<double>>> boxes;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<double> lo(n), hi(n);
      for (std::size_t i = 0; i < n; ++i) {
        lo[i] = (mask >> i & 1u) ? 0.0 : -l;
        hi[i] = (mask >> i & 1u) ? l : 0.0;
      }
      boxes.emplace_back(std::move(lo), std::move(hi));
    }
    const auto q = integrate_boxes(f, boxes, qo);
    res.evals += q.evals;
    res.box_half_width = l;
    res.tail_bound = sup_norm_tail(n, res.gap, l);
    res.converged = q.converged;
    res.value = two_pi_n * q.value;
    res.error_bound = two_pi_n * (q.error + res.tail_bound);
    return q.value;
  };
  // A coarse pass sets the scale; the box is then widened until the tail
  // bound is a small fraction of the tolerance.
  QuadratureOptions coarse = qo;
  coarse.rel_tol = 1e-4;
  std::swap(qo, coarse);
  const double scale = run(8.0 / res.gap);
  std::swap(qo, coarse);
  double l = 8.0 / res.gap;
  while (sup_norm_tail(n, res.gap, l) > 0.01 * opt.rel_tol * scale) l *= 1.1;
  run(l);
  return res;
}

/// Directions at angle <= half_angle from 1 = (1, ..., 1), with
/// half_angle = arccos(-(d_m - a)/sqrt n).
struct CircularCone {
  std::size_t dim = 0;
  double a = 0, dm = 0;
  double cos_half = 0, half_angle = 0;

  bool contains(const std::vector<double>& xi) const {
    double s = 0, nn = 0;
    for (double c : xi) {
      s += c;
      nn += c * c;
    }
    if (nn == 0) return true;
    return s >= cos_half * std::sqrt(nn * static_cast<double>(dim)) - 1e-12 * std::sqrt(nn);
  }

  /// The two boundary rays 1 rotated by +-half_angle (n = 2), unit length.
  std::vector<std::vector<double>> boundary_rays_2d() const {
    if (dim != 2) throw std::logic_error("CircularCone: boundary rays exist only in the plane");
    std::vector<std::vector<double>> out;
    for (double sgn_ : {1.0, -1.0}) {
      const double t = std::numbers::pi / 4 + sgn_ * half_angle;
      out.push_back({std::cos(t), std::sin(t)});
    }
    return out;
  }

  /// Two convex sectors whose union is the cone shrunk by `inward` radians
  /// at each boundary ray: sector k is spanned by 1, the mid-ray and the
  /// boundary ray, with rational generators (dyadic, 40 fractional bits).
  std::vector<PolyCone> convex_pieces_2d(double inward = 1e-9) const {
    if (dim != 2) throw std::logic_error("CircularCone: convex pieces only in the plane");
    auto ray = [](double t) {
      auto q = [](double x) { return from_double(std::ldexp(std::round(std::ldexp(x, 40)), -40)); };
      return make_point({q(std::cos(t)), q(std::sin(t))});
    };
    const double th = std::max(0.0, half_angle - inward);
    std::vector<PolyCone> out;
    for (double sgn_ : {1.0, -1.0}) {
      const double base = std::numbers::pi / 4;
      out.push_back(PolyCone::from_generators(2, {make_point({1, 1}), ray(base + sgn_ * th / 2), ray(base + sgn_ * th)}));
    }
    return out;
  }
};

/// Gamma_a. Requires 0 <= a < d_m.
inline CircularCone gamma_a_cone(std::size_t n, double a, double dm) {
  if (n == 0) throw std::invalid_argument("gamma_a_cone: dimension must be positive");
  if (!(a >= 0) || !(a < dm)) throw std::invalid_argument("gamma_a_cone: need 0 <= a < d_m");
  CircularCone c;
  c.dim = n;
  c.a = a;
  c.dm = dm;
  c.cos_half = std::max(-1.0, -(dm - a) / std::sqrt(static_cast<double>(n)));
  c.half_angle = std::acos(c.cos_half);
  return c;
}

struct GapConeHull {
  CircularCone cone;
  double dm = 0;             // euclidean d_m
  std::optional<Body> hull;  // planar case
};

/// The Gamma_a-hull of S with d_m the euclidean gap distance. In the plane
/// the hull is computed from inward-rationalized convex pieces of Gamma_a,
/// which over-approximates the hull.
inline GapConeHull gap_cone_hull(const Body& s, long m, double a) {
  GapConeHull t;
  t.dm = gap_distance(s, m, Norm::L2).distance;
  if (!(a >= 0) || !(a < t.dm)) throw std::invalid_argument("gap_cone_hull: a must satisfy 0 <= a < d_m");
  t.cone = gamma_a_cone(s.dim(), a, t.dm);
  if (s.dim() == 2) t.hull = gamma_hull(s, t.cone.convex_pieces_2d());
  return t;
}

/// Over-approximate membership alpha ∈ m Ŝ_Gamma for any n: the support
/// inequality <alpha, xi> <= m phi_S(xi) is tested at 1, the coordinate
/// directions and facet normals of S lying in the cone, and at `samples`
/// random directions of the cone.
inline bool gap_cone_member(const Body& s, const CircularCone& cone, long m, const MultiIndex& alpha,
                             std::size_t samples = 512, std::uint64_t seed = 1) {
  const std::size_t n = s.dim();
  if (alpha.size() != n || cone.dim != n) throw std::invalid_argument("gap_cone_member: dimension mismatch");
  std::vector<std::vector<double>> dirs;
  dirs.emplace_back(n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> e(n, 0.0);
    e[i] = 1;
    dirs.push_back(e);
  }
  for (const auto& f : halfspaces(s).inequalities) dirs.push_back(to_double(f.normal));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0, 1);
  for (std::size_t k = 0; k < samples; ++k) {
    std::vector<double> d(n);
    for (auto& c : d) c = g(rng);
    dirs.push_back(std::move(d));
  }
  const double dm = static_cast<double>(m);
  for (const auto& d : dirs) {
    if (!cone.contains(d)) continue;
    double lhs = 0, scale = 0;
    for (std::size_t i = 0; i < n; ++i) {
      lhs += static_cast<double>(alpha[i]) * d[i];
      scale += std::abs(d[i]);
    }
    if (lhs > dm * support(s, std::span<const double>(d)) + 1e-9 * scale * (1 + dm)) return false;
  }
  return true;
}

}  // namespace pluripot
