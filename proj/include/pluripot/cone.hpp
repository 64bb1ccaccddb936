#pragma once

// Polyhedral cones, normal cones, Gamma-hulls and lower hulls.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "lp.hpp"
#include "polytope.hpp"
#include "rational.hpp"

namespace pluripot {

/// A polyhedral cone in R^n given by generators (conic hull), by
/// inequalities {xi : <eta, xi> >= 0}, or by both describing the same set.
class PolyCone {
 public:
  PolyCone(std::size_t dim, std::vector<Point> generators, std::vector<Point> inequalities)
      : dim_(dim), generators_(std::move(generators)), inequalities_(std::move(inequalities)) {
    if (dim == 0) throw std::invalid_argument("PolyCone: dimension must be positive");
    if (generators_.empty() && inequalities_.empty())
      throw std::invalid_argument("PolyCone: needs generators or inequalities");
    for (const auto* list : {&generators_, &inequalities_})
      for (const auto& v : *list)
        if (v.size() != dim) throw std::invalid_argument("PolyCone: vector " + to_string(v) + " has wrong dimension");
  }

  static PolyCone from_generators(std::size_t dim, std::vector<Point> g) { return PolyCone(dim, std::move(g), {}); }
  static PolyCone from_inequalities(std::size_t dim, std::vector<Point> h) { return PolyCone(dim, {}, std::move(h)); }

  static PolyCone orthant(std::size_t n) {
    std::vector<Point> e;
    for (std::size_t i = 0; i < n; ++i) {
      Point v = zero_point(n);
      v[i] = 1;
      e.push_back(std::move(v));
    }
    return PolyCone(n, e, e);
  }

  static PolyCone whole_space(std::size_t n) { return from_inequalities(n, {zero_point(n)}); }
  static PolyCone origin(std::size_t n) { return from_generators(n, {zero_point(n)}); }

  std::size_t dim() const { return dim_; }
  const std::vector<Point>& generators() const { return generators_; }
  const std::vector<Point>& inequalities() const { return inequalities_; }

 private:
  std::size_t dim_;
  std::vector<Point> generators_;
  std::vector<Point> inequalities_;
};

/// Extreme rays of the pointed part plus a basis of the lineality space.
struct ConeGenerators {
  std::vector<Point> rays;
  std::vector<Point> lineality;

  std::vector<Point> all() const {
    std::vector<Point> out = rays;
    for (const auto& l : lineality) {
      out.push_back(l);
      Point neg = l;
      for (auto& c : neg) c = -c;
      out.push_back(std::move(neg));
    }
    return out;
  }
};

/// Generators of {xi : <eta_i, xi> >= 0 for all i}. Extreme rays are found
/// by enumerating subsets of tight constraints, so this is meant for small
/// constraint counts.
inline ConeGenerators cone_rays(std::size_t n, const std::vector<Point>& inequalities) {
  ConeGenerators out;
  std::vector<Point> rows;
  for (const auto& r : inequalities)
    if (std::any_of(r.begin(), r.end(), [](const Rational& c) { return sgn(c) != 0; })) rows.push_back(r);
  Matrix<Rational> a(rows.begin(), rows.end());
  for (auto& l : nullspace(a, n)) out.lineality.push_back(primitive(l));
  const std::size_t ldim = out.lineality.size();
  if (ldim == n) return out;
  const std::size_t tight = n - ldim - 1;
  std::set<Point> found;
  for_each_combination(rows.size(), tight, [&](const std::vector<std::size_t>& idx) {
    Matrix<Rational> m;
    for (auto i : idx) m.push_back(rows[i]);
    for (const auto& l : out.lineality) m.push_back(l);
    auto ns = nullspace(std::move(m), n);
    if (ns.size() != 1) return true;
    Point r = std::move(ns[0]);
    bool all_ge = true, all_le = true;
    for (const auto& eta : rows) {
      const int s = sgn(dot(eta, r));
      if (s < 0) all_ge = false;
      if (s > 0) all_le = false;
    }
    if (!all_ge && !all_le) return true;
    if (!all_ge)
      for (auto& c : r) c = -c;
    found.insert(primitive(r));
    return true;
  });
  out.rays.assign(found.begin(), found.end());
  return out;
}

/// Generators of the cone, computing them from the inequalities if needed.
inline std::vector<Point> generators_of(const PolyCone& g) {
  if (!g.generators().empty()) return g.generators();
  return cone_rays(g.dim(), g.inequalities()).all();
}

/// Inequality normals of the cone, computing them from the generators if
/// needed (a lineality direction l contributes both l and -l).
inline std::vector<Point> inequalities_of(const PolyCone& g) {
  if (!g.inequalities().empty()) return g.inequalities();
  auto h = cone_rays(g.dim(), g.generators()).all();
  if (h.empty()) h.push_back(zero_point(g.dim()));
  return h;
}

/// Membership of a direction. Inequalities are used when present, otherwise
/// a conic-combination LP.
inline bool contains(const PolyCone& g, const Point& xi) {
  if (xi.size() != g.dim()) throw std::invalid_argument("contains: dimension mismatch");
  if (!g.inequalities().empty()) {
    for (const auto& eta : g.inequalities())
      if (sgn(dot(eta, xi)) < 0) return false;
    return true;
  }
  const auto& gens = g.generators();
  LPProblem<Rational> lp;
  lp.objective.assign(gens.size(), Rational(0));
  for (std::size_t i = 0; i < g.dim(); ++i) {
    std::vector<Rational> row(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) row[j] = gens[j][i];
    lp.add_row(std::move(row), Sense::Equal, xi[i]);
  }
  return lp_solve(lp).optimal();
}

/// The dual cone {x : <x, xi> >= 0 for all xi in G}: generators and
/// inequalities swap roles.
inline PolyCone dual_cone(const PolyCone& g) { return PolyCone(g.dim(), g.inequalities(), g.generators()); }

/// True when the two descriptions of `g` agree (each generator satisfies the
/// inequalities and each generator of the inequality cone lies in the conic
/// hull of the generators). Trivially true for single descriptions.
inline bool is_consistent(const PolyCone& g) {
  if (g.generators().empty() || g.inequalities().empty()) return true;
  const PolyCone by_ineq = PolyCone::from_inequalities(g.dim(), g.inequalities());
  const PolyCone by_gen = PolyCone::from_generators(g.dim(), g.generators());
  for (const auto& v : g.generators())
    if (!contains(by_ineq, v)) return false;
  for (const auto& v : cone_rays(g.dim(), g.inequalities()).all())
    if (!contains(by_gen, v)) return false;
  return true;
}

/// Normal cone {xi : <s - t, xi> >= 0 for all extreme t} at an extreme
/// point s. Throws std::domain_error if s is not extreme.
inline PolyCone normal_cone(const Polytope& s, const Point& at) {
  if (at.size() != s.dim()) throw std::invalid_argument("normal_cone: dimension mismatch");
  const auto ext = extreme_points(s);
  if (!std::binary_search(ext.begin(), ext.end(), at))
    throw std::domain_error("normal_cone: " + to_string(at) + " is not an extreme point");
  std::vector<Point> ineq;
  for (const auto& t : ext)
    if (t != at) ineq.push_back(primitive(at - t));
  if (ineq.empty()) ineq.push_back(zero_point(s.dim()));
  return PolyCone::from_inequalities(s.dim(), std::move(ineq));
}

/// True when the cone contains a direction with all coordinates > 0.
inline bool meets_open_orthant(const PolyCone& g) {
  const auto gens = generators_of(g);
  if (gens.empty()) return false;
  LPProblem<Rational> lp;
  lp.objective.assign(gens.size(), Rational(0));
  for (std::size_t i = 0; i < g.dim(); ++i) {
    std::vector<Rational> row(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) row[j] = gens[j][i];
    lp.add_row(std::move(row), Sense::GreaterEqual, Rational(1));
  }
  return lp_solve(lp).optimal();
}

/// Vertices of the bounded polyhedron {x : <a_i, x> <= b_i}, by testing every
/// n-subset of constraints. Intended for small constraint counts.
inline std::vector<Point> enumerate_vertices(std::size_t n, const std::vector<Halfspace>& cons) {
  std::set<Point> found;
  for_each_combination(cons.size(), n, [&](const std::vector<std::size_t>& idx) {
    Matrix<Rational> a;
    std::vector<Rational> b;
    for (auto i : idx) {
      a.push_back(cons[i].normal);
      b.push_back(cons[i].offset);
    }
    auto x = solve(a, b);
    if (!x) return true;
    for (const auto& c : cons)
      if (dot(c.normal, *x) > c.offset) return true;
    found.insert(std::move(*x));
    return true;
  });
  return {found.begin(), found.end()};
}

/// Constraints <x, r> <= phi_S(r) for the generators r of every cell
/// cone ∩ N_s of the normal fan restricted to the cone.
inline std::vector<Halfspace> gamma_constraints(const Body& s, const PolyCone& cone) {
  const std::size_t n = s.dim();
  const auto ineq = inequalities_of(cone);
  std::set<Halfspace> out;
  for (const auto& v : extreme_points(s)) {
    std::vector<Point> cell = ineq;
    const auto nc = normal_cone(s, v);
    cell.insert(cell.end(), nc.inequalities().begin(), nc.inequalities().end());
    for (const auto& r : cone_rays(n, cell).all()) {
      Point p = primitive(r);
      Rational off = dot(p, v);
      out.insert({std::move(p), std::move(off)});
    }
  }
  return {out.begin(), out.end()};
}

/// Gamma-hull of S for the intersection of the constraint families of all
/// given convex cones, i.e. for the union of the cones. Each cone must meet
/// the open positive orthant.
inline Body gamma_hull(const Body& s, const std::vector<PolyCone>& cones) {
  const std::size_t n = s.dim();
  if (cones.empty()) throw std::invalid_argument("gamma_hull: no cone given");
  std::set<Halfspace> cons;
  for (const auto& g : cones) {
    if (g.dim() != n) throw std::invalid_argument("gamma_hull: cone dimension mismatch");
    if (!meets_open_orthant(g))
      throw std::domain_error("gamma_hull: cone is not proper or contains no strictly positive direction");
    for (auto& h : gamma_constraints(s, g)) cons.insert(std::move(h));
  }
  for (std::size_t i = 0; i < n; ++i) {
    Point e = zero_point(n);
    e[i] = -1;
    cons.insert({std::move(e), Rational(0)});
  }
  std::vector<Halfspace> list(cons.begin(), cons.end());
  auto verts = enumerate_vertices(n, list);
  return Body(n, std::move(verts));
}

/// Gamma-hull (S - G°) ∩ R^n_+ for a single convex cone G.
inline Body gamma_hull(const Body& s, const PolyCone& g) { return gamma_hull(s, std::vector<PolyCone>{g}); }

inline Point positive_part(const Point& xi) {
  Point out = xi;
  for (auto& c : out)
    if (sgn(c) < 0) c = 0;
  return out;
}

/// The lower hull: the union of the cubes [0,s_1]x...x[0,s_n] over s in S,
/// returned as the hull of the cube corners of the extreme points.
inline Body lower_hull(const Body& s) {
  const std::size_t n = s.dim();
  std::vector<Point> corners;
  for (const auto& v : extreme_points(s))
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      Point c = zero_point(n);
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1u) c[i] = v[i];
      corners.push_back(std::move(c));
    }
  return reduced(Body(n, std::move(corners)));
}

/// Vertex-cube criterion: every corner of every cube C_v, v extreme, is in S.
inline bool is_lower_set(const Body& s) {
  const std::size_t n = s.dim();
  const auto h = halfspaces(s);
  for (const auto& v : extreme_points(s))
    for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << n); ++mask) {
      Point c = zero_point(n);
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1u) c[i] = v[i];
      if (!contains(h, c)) return false;
    }
  return true;
}

/// A direction xi with phi_S(xi) < phi_S(xi^+), or nullopt when S is a lower
/// set. The candidates are the facet and affine-hull normals of S: one of
/// them separates a missing cube corner.
inline std::optional<Point> lower_set_witness(const Body& s) {
  const auto h = halfspaces(s);
  std::vector<Point> candidates;
  for (const auto& f : h.inequalities) candidates.push_back(f.normal);
  for (const auto& e : h.equalities) {
    candidates.push_back(e.normal);
    Point neg = e.normal;
    for (auto& c : neg) c = -c;
    candidates.push_back(std::move(neg));
  }
  for (const auto& xi : candidates)
    if (support(s, xi) < support(s, positive_part(xi))) return xi;
  return std::nullopt;
}

}  // namespace pluripot
