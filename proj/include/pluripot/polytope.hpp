#pragma once

// Vertex-represented convex polytopes with exact rational coordinates.
//
// Polytope is the convex hull of a finite point list. Body adds the standing
// hypotheses on the sets S used throughout the library: S lies in the closed
// positive orthant and contains the origin.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cmath>
#include <functional>
#include <iterator>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "lp.hpp"
#include "rational.hpp"

namespace pluripot {

class Polytope {
 public:
  Polytope(std::size_t dim, std::vector<Point> points) : dim_(dim) {
    if (dim == 0) throw std::invalid_argument("Polytope: dimension must be positive");
    if (points.empty()) throw std::invalid_argument("Polytope: at least one point required");
    for (auto& p : points) {
      if (p.size() != dim)
        throw std::invalid_argument("Polytope: point " + to_string(p) + " has wrong dimension");
      for (auto& c : p) c.canonicalize();
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    vertices_ = std::move(points);
    vertices_double_.reserve(vertices_.size());
    for (const auto& v : vertices_) vertices_double_.push_back(to_double(v));
  }

  std::size_t dim() const { return dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<std::vector<double>>& vertices_double() const { return vertices_double_; }

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }

 private:
  std::size_t dim_;
  std::vector<Point> vertices_;
  std::vector<std::vector<double>> vertices_double_;
};

/// Barycentric weights expressing x as a convex combination of `pts`, or
/// nullopt when x lies outside their hull. Exact.
inline std::optional<std::vector<Rational>> convex_weights(const std::vector<Point>& pts,
                                                           const Point& x) {
  const std::size_t n = x.size(), k = pts.size();
  LPProblem<Rational> lp;
  lp.objective.assign(k, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = pts[j][i];
    lp.add_row(std::move(row), Sense::Equal, x[i]);
  }
  lp.add_row(std::vector<Rational>(k, Rational(1)), Sense::Equal, Rational(1));
  auto res = lp_solve(lp);
  if (!res.optimal()) return std::nullopt;
  return std::move(res.x);
}

/// Exact membership by LP feasibility of a convex combination.
inline bool contains(const Polytope& p, const Point& x) {
  if (x.size() != p.dim()) throw std::invalid_argument("contains: dimension mismatch");
  return convex_weights(p.vertices(), x).has_value();
}

/// A compact convex set S in the closed positive orthant with 0 in S.
class Body : public Polytope {
 public:
  Body(std::size_t dim, std::vector<Point> vertices) : Polytope(dim, std::move(vertices)) {
    for (const auto& v : this->vertices())
      for (const auto& c : v)
        if (sgn(c) < 0) throw std::invalid_argument("Body: vertex " + to_string(v) + " has a negative coordinate");
    if (!contains(*this, zero_point(dim)))
      throw std::invalid_argument("Body: the origin is not in the convex hull of the vertices");
  }
  explicit Body(const Polytope& p) : Body(p.dim(), p.vertices()) {}
};

/// The standard simplex conv{0, e_1, ..., e_n}.
inline Body standard_simplex(std::size_t n) {
  std::vector<Point> v{zero_point(n)};
  for (std::size_t i = 0; i < n; ++i) {
    Point e = zero_point(n);
    e[i] = 1;
    v.push_back(std::move(e));
  }
  return Body(n, std::move(v));
}

/// The unit cube [0,1]^n.
inline Body unit_cube(std::size_t n) {
  std::vector<Point> v;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Point p = zero_point(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) p[i] = 1;
    v.push_back(std::move(p));
  }
  return Body(n, std::move(v));
}

inline Rational support(const Polytope& s, std::span<const Rational> xi) {
  if (xi.size() != s.dim()) throw std::invalid_argument("support: dimension mismatch");
  const auto& vs = s.vertices();
  Rational best = dot(vs.front(), xi);
  for (std::size_t i = 1; i < vs.size(); ++i) {
    Rational v = dot(vs[i], xi);
    if (v > best) best = std::move(v);
  }
  return best;
}

inline double support(const Polytope& s, std::span<const double> xi) {
  if (xi.size() != s.dim()) throw std::invalid_argument("support: dimension mismatch");
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : s.vertices_double()) {
    double d = 0;
    for (std::size_t i = 0; i < v.size(); ++i) d += v[i] * xi[i];
    best = std::max(best, d);
  }
  return best;
}

/// Call fn(indices) for every k-subset of {0..n-1} in lexicographic order.
/// Stops early when fn returns false.
inline void for_each_combination(std::size_t n, std::size_t k,
                                 const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!fn(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

namespace detail {

inline Rational cross2(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

/// Counter-clockwise hull of planar points, collinear points dropped,
/// starting at the lexicographically smallest point.
inline std::vector<Point> planar_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<Point> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && sgn(cross2(h[k - 2], h[k - 1], p)) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && sgn(cross2(h[k - 2], h[k - 1], pts[i])) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

}  // namespace detail

/// Minimal vertex set, sorted lexicographically. Planar inputs use a
/// monotone-chain hull; other dimensions test each point for membership in
/// the hull of the remaining points.
inline std::vector<Point> extreme_points(const Polytope& s) {
  const auto& vs = s.vertices();
  if (vs.size() <= 1) return vs;
  std::vector<Point> out;
  if (s.dim() == 1) {
    out = {vs.front(), vs.back()};
  } else if (s.dim() == 2) {
    out = detail::planar_hull(vs);
  } else {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      std::vector<Point> others;
      others.reserve(vs.size() - 1);
      for (std::size_t j = 0; j < vs.size(); ++j)
        if (j != i) others.push_back(vs[j]);
      if (!convex_weights(others, vs[i])) out.push_back(vs[i]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Reduce a polytope to its extreme points.
inline Polytope reduced(const Polytope& p) { return Polytope(p.dim(), extreme_points(p)); }
inline Body reduced(const Body& b) { return Body(b.dim(), extreme_points(b)); }

/// <normal, x> <= offset (or == offset for equalities).
struct Halfspace {
  Point normal;
  Rational offset;

  friend bool operator<(const Halfspace& a, const Halfspace& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  }
  friend bool operator==(const Halfspace& a, const Halfspace& b) {
    return a.normal == b.normal && a.offset == b.offset;
  }
};

struct HRep {
  std::size_t dim = 0;
  std::vector<Halfspace> inequalities;
  std::vector<Halfspace> equalities;  // affine hull, empty when full-dimensional
};

inline bool contains(const HRep& h, const Point& x) {
  for (const auto& e : h.equalities)
    if (dot(e.normal, x) != e.offset) return false;
  for (const auto& f : h.inequalities)
    if (dot(f.normal, x) > f.offset) return false;
  return true;
}

/// Halfspace representation. Planar full-dimensional polygons read their
/// edges off the hull; otherwise every hyperplane through affinely
/// independent extreme points is tested, which is exponential in the
/// dimension and intended for small vertex counts.
inline HRep halfspaces(const Polytope& s) {
  const std::size_t n = s.dim();
  const auto ext = extreme_points(s);
  HRep h;
  h.dim = n;
  Matrix<Rational> diffs;
  for (std::size_t i = 1; i < ext.size(); ++i) diffs.push_back(ext[i] - ext[0]);
  const auto eq_normals = nullspace(diffs, n);
  for (const auto& eta : eq_normals) {
    Point p = primitive(eta);
    Rational off = dot(p, ext[0]);
    h.equalities.push_back({std::move(p), std::move(off)});
  }
  const std::size_t k = n - eq_normals.size();
  if (k == 0) return h;

  std::set<Halfspace> found;
  auto consider = [&](Point eta, const Rational& level) {
    bool all_le = true, all_ge = true;
    for (const auto& v : ext) {
      const Rational d = dot(eta, v);
      if (d > level) all_le = false;
      if (d < level) all_ge = false;
      if (!all_le && !all_ge) return;
    }
    if (all_le && all_ge) return;  // eta lies in the equality directions
    if (!all_le)
      for (auto& c : eta) c = -c;
    Point p = primitive(eta);
    Rational off = dot(p, ext.front());
    for (const auto& v : ext) {
      Rational d = dot(p, v);
      if (d > off) off = std::move(d);
    }
    found.insert({std::move(p), std::move(off)});
  };

  if (n == 2 && k == 2) {
    auto hull = detail::planar_hull(ext);
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const Point& a = hull[i];
      const Point& b = hull[(i + 1) % hull.size()];
      // Outward normal of a counter-clockwise edge.
      Point eta{b[1] - a[1], a[0] - b[0]};
      Point p = primitive(eta);
      Rational off = dot(p, a);
      found.insert({std::move(p), std::move(off)});
    }
  } else {
    for_each_combination(ext.size(), k, [&](const std::vector<std::size_t>& idx) {
      Matrix<Rational> rows;
      for (const auto& e : eq_normals) rows.push_back(e);
      for (std::size_t i = 1; i < idx.size(); ++i) rows.push_back(ext[idx[i]] - ext[idx[0]]);
      auto ns = nullspace(rows, n);
      if (ns.size() != 1) return true;
      const Rational level = dot(ns[0], ext[idx[0]]);
      consider(std::move(ns[0]), level);
      return true;
    });
  }
  h.inequalities.assign(found.begin(), found.end());
  return h;
}

/// Extreme points lying on the hyperplane of each inequality.
inline std::vector<std::vector<std::size_t>> facet_vertex_sets(const std::vector<Point>& ext,
                                                               const HRep& h) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& f : h.inequalities) {
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < ext.size(); ++i)
      if (dot(f.normal, ext[i]) == f.offset) on.push_back(i);
    out.push_back(std::move(on));
  }
  return out;
}

namespace detail {

inline std::size_t face_dimension(const std::vector<Point>& ext, const std::vector<std::size_t>& face) {
  std::vector<Point> pts;
  pts.reserve(face.size());
  for (auto i : face) pts.push_back(ext[i]);
  return affine_dimension(pts);
}

// Pulling triangulation of a face of dimension `fdim`, using the facets of
// the whole polytope to generate the faces of the face.
inline void pull_triangulate(const std::vector<Point>& ext,
                             const std::vector<std::vector<std::size_t>>& facets,
                             const std::vector<std::size_t>& face, std::size_t fdim,
                             std::vector<std::vector<std::size_t>>& out) {
  if (fdim == 0) {
    out.push_back({face.front()});
    return;
  }
  if (fdim == 1) {
    out.push_back({face.front(), face.back()});
    return;
  }
  const std::size_t apex = face.front();
  std::set<std::vector<std::size_t>> subfaces;
  for (const auto& g : facets) {
    std::vector<std::size_t> inter;
    std::set_intersection(face.begin(), face.end(), g.begin(), g.end(), std::back_inserter(inter));
    if (inter.size() < fdim) continue;
    if (std::binary_search(inter.begin(), inter.end(), apex)) continue;
    if (face_dimension(ext, inter) != fdim - 1) continue;
    subfaces.insert(std::move(inter));
  }
  for (const auto& sub : subfaces) {
    std::vector<std::vector<std::size_t>> simplices;
    pull_triangulate(ext, facets, sub, fdim - 1, simplices);
    for (auto& sx : simplices) {
      sx.insert(sx.begin(), apex);
      out.push_back(std::move(sx));
    }
  }
}

inline mpz_class factorial(std::size_t n) {
  mpz_class f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

}  // namespace detail

/// Pulling triangulation of a full-dimensional polytope, as index tuples into
/// extreme_points(s). Empty for lower-dimensional input.
inline std::vector<std::vector<std::size_t>> triangulate(const Polytope& s) {
  const auto ext = extreme_points(s);
  if (affine_dimension(ext) < s.dim()) return {};
  const auto h = halfspaces(s);
  const auto facets = facet_vertex_sets(ext, h);
  std::vector<std::size_t> all(ext.size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  detail::pull_triangulate(ext, facets, all, s.dim(), out);
  return out;
}

inline constexpr std::size_t kMaxExactVolumeDim = 4;

/// Exact euclidean volume; 0 for lower-dimensional bodies. Throws
/// std::domain_error above kMaxExactVolumeDim (use volume_monte_carlo).
inline Rational volume(const Polytope& s) {
  const std::size_t n = s.dim();
  const auto ext = extreme_points(s);
  if (affine_dimension(ext) < n) return 0;
  if (n == 1) return ext.back()[0] - ext.front()[0];
  if (n == 2) {
    const auto hull = detail::planar_hull(ext);
    Rational twice = 0;
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const Point& a = hull[i];
      const Point& b = hull[(i + 1) % hull.size()];
      twice += a[0] * b[1] - a[1] * b[0];
    }
    return abs(twice) / 2;
  }
  if (n > kMaxExactVolumeDim)
    throw std::domain_error("volume: exact path limited to dimension " + std::to_string(kMaxExactVolumeDim));
  Rational total = 0;
  for (const auto& sx : triangulate(s)) {
    Matrix<Rational> m;
    for (std::size_t i = 1; i < sx.size(); ++i) m.push_back(ext[sx[i]] - ext[sx[0]]);
    total += abs(determinant(std::move(m)));
  }
  return total / Rational(detail::factorial(n));
}

struct VolumeEstimate {
  double value = 0;
  double std_error = 0;
  std::size_t samples = 0;
};

/// Hit-or-miss Monte Carlo over the bounding box; membership via the exact
/// halfspace representation evaluated in double precision.
inline VolumeEstimate volume_monte_carlo(const Polytope& s, std::size_t samples, std::uint64_t seed) {
  const std::size_t n = s.dim();
  const auto h = halfspaces(s);
  VolumeEstimate est;
  est.samples = samples;
  if (!h.equalities.empty() || samples == 0) return est;
  std::vector<double> lo(n, std::numeric_limits<double>::infinity()), hi(n, -lo[0]);
  for (const auto& v : s.vertices_double())
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  double box = 1;
  for (std::size_t i = 0; i < n; ++i) box *= hi[i] - lo[i];
  std::vector<std::vector<double>> normals;
  std::vector<double> offsets;
  for (const auto& f : h.inequalities) {
    normals.push_back(to_double(f.normal));
    offsets.push_back(f.offset.get_d());
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::size_t hits = 0;
  std::vector<double> x(n);
  for (std::size_t k = 0; k < samples; ++k) {
    for (std::size_t i = 0; i < n; ++i) x[i] = lo[i] + (hi[i] - lo[i]) * u(rng);
    bool in = true;
    for (std::size_t f = 0; f < normals.size() && in; ++f) {
      double d = 0;
      for (std::size_t i = 0; i < n; ++i) d += normals[f][i] * x[i];
      in = d <= offsets[f];
    }
    hits += in;
  }
  const double p = static_cast<double>(hits) / static_cast<double>(samples);
  est.value = box * p;
  est.std_error = box * std::sqrt(p * (1 - p) / static_cast<double>(samples));
  return est;
}

}  // namespace pluripot
