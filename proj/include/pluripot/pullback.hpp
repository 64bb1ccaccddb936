#pragma once

// Newton polytopes of polynomial maps, the pullback body
// S' = union over x in S of x_1 S_1 + ... + x_n S_n, composition of
// polynomials with a map, and a sampling probe comparing f*H_S with H_{S'}.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "logsupport.hpp"
#include "polyspace.hpp"
#include "polytope.hpp"
#include "rational.hpp"

namespace pluripot {

struct NewtonPolytope {
  Polytope hull;  // convex hull of the exponent support
  Body body;      // hull with the origin adjoined
  bool zero_adjoined = false;
};

inline NewtonPolytope newton_polytope(const SparsePoly& p) {
  if (p.is_zero()) throw std::invalid_argument("newton_polytope: zero polynomial");
  std::vector<Point> pts;
  bool has_zero = false;
  for (const auto& [a, c] : p.terms()) {
    has_zero = has_zero || std::all_of(a.begin(), a.end(), [](long v) { return v == 0; });
    pts.push_back(to_point(a));
  }
  Polytope hull = reduced(Polytope(p.dim(), pts));
  if (!has_zero) pts.push_back(zero_point(p.dim()));
  Body body = reduced(Body(p.dim(), std::move(pts)));
  return {std::move(hull), std::move(body), !has_zero};
}

/// Extreme points of A + B.
inline Polytope minkowski_sum(const Polytope& a, const Polytope& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("minkowski_sum: dimension mismatch");
  std::vector<Point> pts;
  for (const auto& u : a.vertices())
    for (const auto& v : b.vertices()) pts.push_back(u + v);
  return reduced(Polytope(a.dim(), std::move(pts)));
}

/// S' = conv{ sum_j x_j v_j : x extreme in S, v_j extreme in S_j }. Each
/// S_j is a polytope in the closed positive orthant of R^l; it need not
/// contain the origin. phi_{S'}(xi) = phi_S(phi_{S_1}(xi), ..., phi_{S_n}(xi)).
inline Body pullback_body(const Body& s, const std::vector<Polytope>& components) {
  if (components.size() != s.dim())
    throw std::invalid_argument("pullback_body: need one component polytope per coordinate of S");
  if (components.empty()) throw std::invalid_argument("pullback_body: no components");
  const std::size_t l = components.front().dim();
  for (const auto& c : components) {
    if (c.dim() != l) throw std::invalid_argument("pullback_body: components differ in dimension");
    for (const auto& v : c.vertices())
      for (const auto& x : v)
        if (sgn(x) < 0) throw std::invalid_argument("pullback_body: component vertex " + to_string(v) + " is negative");
  }
  std::vector<Point> pts;
  for (const auto& x : extreme_points(s)) {
    Polytope acc(l, {zero_point(l)});
    for (std::size_t j = 0; j < s.dim(); ++j) {
      if (sgn(x[j]) == 0) continue;
      std::vector<Point> scaled;
      for (const auto& v : components[j].vertices()) scaled.push_back(x[j] * v);
      acc = minkowski_sum(acc, Polytope(l, std::move(scaled)));
    }
    for (const auto& v : acc.vertices()) pts.push_back(v);
  }
  return reduced(Body(l, std::move(pts)));
}

/// A polynomial map f = (f_1, ..., f_n) from C^l to C^n.
struct PolyMap {
  std::size_t source_dim = 0;
  std::vector<SparsePoly> components;

  std::size_t target_dim() const { return components.size(); }

  void check() const {
    if (source_dim == 0) throw std::invalid_argument("PolyMap: source dimension must be positive");
    if (components.empty()) throw std::invalid_argument("PolyMap: no components");
    for (std::size_t j = 0; j < components.size(); ++j) {
      if (components[j].dim() != source_dim)
        throw std::invalid_argument("PolyMap: component " + std::to_string(j) + " has the wrong number of variables");
      if (components[j].is_zero()) throw std::invalid_argument("PolyMap: component " + std::to_string(j) + " is zero");
    }
  }

  ComplexPoint operator()(const ComplexPoint& z) const {
    ComplexPoint w;
    w.reserve(components.size());
    for (const auto& c : components) w.push_back(c(z));
    return w;
  }

  static PolyMap identity(std::size_t n) {
    PolyMap f{n, {}};
    for (std::size_t j = 0; j < n; ++j) {
      MultiIndex e(n, 0);
      e[j] = 1;
      f.components.push_back(SparsePoly::monomial(n, e));
    }
    return f;
  }
};

/// Newton polytope hulls (without the adjoined origin) of the components.
inline std::vector<Polytope> newton_hulls(const PolyMap& f) {
  f.check();
  std::vector<Polytope> out;
  for (const auto& c : f.components) out.push_back(newton_polytope(c).hull);
  return out;
}

inline Body pullback_body(const Body& s, const PolyMap& f) { return pullback_body(s, newton_hulls(f)); }

/// f*p = p(f_1, ..., f_n), fully expanded.
inline SparsePoly pullback_poly(const PolyMap& f, const SparsePoly& p) {
  f.check();
  if (p.dim() != f.target_dim()) throw std::invalid_argument("pullback_poly: polynomial and map dimensions differ");
  std::vector<std::vector<SparsePoly>> powers(f.target_dim());
  auto power = [&](std::size_t j, long e) -> const SparsePoly& {
    auto& cache = powers[j];
    if (cache.empty()) cache.push_back(SparsePoly::constant(f.source_dim, 1.0));
    while (static_cast<long>(cache.size()) <= e) cache.push_back(cache.back() * f.components[j]);
    return cache[static_cast<std::size_t>(e)];
  };
  SparsePoly out(f.source_dim);
  for (const auto& [beta, b] : p.terms()) {
    SparsePoly t = SparsePoly::constant(f.source_dim, b);
    for (std::size_t j = 0; j < beta.size(); ++j)
      if (beta[j]) t = t * power(j, beta[j]);
    out = out + t;
  }
  return out;
}

struct ProbeRow {
  double radius = 0;
  double max_diff = 0;  // max of H_S(f(z)) - H_{S'}(z) over the samples
  double min_diff = 0;
};

struct ExactnessReport {
  Body pulled;
  std::vector<ProbeRow> rows;
  double slope = 0;  // least-squares slope of max |diff| against log r
  bool bounded_trend = true;
  std::vector<std::string> warnings;
};

inline constexpr double kBoundedSlope = 0.05;

/// Samples z_j = r^{t_j} e^{i theta_j}, t_j uniform in [0, 1], for each
/// radius r > 1, and records the range of f*H_S - H_{S'}. The trend counts
/// as bounded when max |diff| grows slower than kBoundedSlope per unit of
/// log r. This is evidence only: properness of f is never checked.
inline ExactnessReport pullback_exactness_probe(const PolyMap& f, const Body& s, const std::vector<double>& radii,
                                                std::size_t samples = 256, std::uint64_t seed = 1) {
  f.check();
  if (f.target_dim() != s.dim()) throw std::invalid_argument("pullback_exactness_probe: map target and body dimensions differ");
  if (f.source_dim != f.target_dim())
    throw std::invalid_argument("pullback_exactness_probe: source and target dimensions must agree");
  ExactnessReport rep{pullback_body(s, f), {}, 0, true, {}};
  rep.warnings.push_back("properness of f is not checked");
  if (affine_dimension(rep.pulled.vertices()) < f.source_dim)
    rep.warnings.push_back("pullback body is not full-dimensional: f looks degenerate");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t l = f.source_dim;
  std::vector<double> xs, ys;
  for (double r : radii) {
    if (!(r > 1)) throw std::invalid_argument("pullback_exactness_probe: radii must exceed 1");
    ProbeRow row{r, -std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    ComplexPoint z(l);
    for (std::size_t k = 0; k < samples; ++k) {
      for (auto& c : z) c = std::polar(std::pow(r, unit(rng)), 2 * std::numbers::pi * unit(rng));
      const double d = hs_eval(s, f(z)) - hs_eval(rep.pulled, z);
      row.max_diff = std::max(row.max_diff, d);
      row.min_diff = std::min(row.min_diff, d);
    }
    xs.push_back(std::log(r));
    ys.push_back(std::max(std::abs(row.max_diff), std::abs(row.min_diff)));
    rep.rows.push_back(row);
  }
  if (xs.size() >= 2) {
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      mx += xs[i];
      my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(xs.size());
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxy += (xs[i] - mx) * (ys[i] - my);
      sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    rep.slope = sxx > 0 ? sxy / sxx : 0;
  }
  rep.bounded_trend = rep.slope <= kBoundedSlope;
  return rep;
}

}  // namespace pluripot
