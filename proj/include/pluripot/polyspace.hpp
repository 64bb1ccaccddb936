#pragma once

// The graded spaces P^S_m: lattice points of mS, S-degree, membership, the
// distance d_m from mS to the excluded lattice points, and a growth probe.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "logsupport.hpp"
#include "lp.hpp"
#include "polytope.hpp"
#include "rational.hpp"

namespace pluripot {

using MultiIndex = std::vector<long>;
using MultiIndexSet = std::vector<MultiIndex>;

inline std::string to_string(const MultiIndex& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

inline Point to_point(const MultiIndex& a) {
  Point p;
  p.reserve(a.size());
  for (long v : a) p.emplace_back(v);
  return p;
}

/// A polynomial sum a_alpha z^alpha with complex coefficients. Exact zeros
/// are never stored.
class SparsePoly {
 public:
  explicit SparsePoly(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw std::invalid_argument("SparsePoly: dimension must be positive");
  }

  static SparsePoly monomial(std::size_t dim, MultiIndex alpha, Complex c = 1.0) {
    SparsePoly p(dim);
    p.add(std::move(alpha), c);
    return p;
  }

  static SparsePoly constant(std::size_t dim, Complex c) { return monomial(dim, MultiIndex(dim, 0), c); }

  void add(MultiIndex alpha, Complex c) {
    if (alpha.size() != dim_) throw std::invalid_argument("SparsePoly: exponent " + to_string(alpha) + " has wrong length");
    for (long v : alpha)
      if (v < 0) throw std::invalid_argument("SparsePoly: negative exponent in " + to_string(alpha));
    auto it = terms_.find(alpha);
    if (it == terms_.end()) {
      if (c != Complex(0, 0)) terms_.emplace(std::move(alpha), c);
      return;
    }
    it->second += c;
    if (it->second == Complex(0, 0)) terms_.erase(it);
  }

  std::size_t dim() const { return dim_; }
  const std::map<MultiIndex, Complex>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  MultiIndexSet support() const {
    MultiIndexSet s;
    for (const auto& [a, c] : terms_) s.push_back(a);
    return s;
  }

  Complex operator()(const ComplexPoint& z) const {
    if (z.size() != dim_) throw std::invalid_argument("SparsePoly: evaluation point has wrong dimension");
    Complex sum = 0;
    for (const auto& [a, c] : terms_) {
      Complex t = c;
      for (std::size_t i = 0; i < dim_; ++i)
        if (a[i]) t *= std::pow(z[i], static_cast<int>(a[i]));
      sum += t;
    }
    return sum;
  }

  friend SparsePoly operator+(const SparsePoly& p, const SparsePoly& q) {
    if (p.dim_ != q.dim_) throw std::invalid_argument("SparsePoly sum: dimension mismatch");
    SparsePoly r = p;
    for (const auto& [a, c] : q.terms_) r.add(a, c);
    return r;
  }

  friend SparsePoly operator*(const SparsePoly& p, const SparsePoly& q) {
    if (p.dim_ != q.dim_) throw std::invalid_argument("SparsePoly product: dimension mismatch");
    SparsePoly r(p.dim_);
    for (const auto& [a, c] : p.terms_)
      for (const auto& [b, d] : q.terms_) {
        MultiIndex e(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] + b[i];
        r.add(std::move(e), c * d);
      }
    return r;
  }

  friend bool operator==(const SparsePoly& p, const SparsePoly& q) { return p.dim_ == q.dim_ && p.terms_ == q.terms_; }

 private:
  std::size_t dim_;
  std::map<MultiIndex, Complex> terms_;
};

/// Exact test of alpha ∈ mS against a cached halfspace representation of S.
class ScaledMembership {
 public:
  explicit ScaledMembership(const Polytope& s) : dim_(s.dim()), h_(halfspaces(s)), max_coord_(zero_point(s.dim())) {
    for (const auto& v : s.vertices())
      for (std::size_t i = 0; i < dim_; ++i) max_coord_[i] = std::max(max_coord_[i], v[i]);
  }

  bool operator()(const MultiIndex& alpha, long m) const {
    if (alpha.size() != dim_) throw std::invalid_argument("membership: dimension mismatch");
    const Rational mm(m);
    for (const auto& e : h_.equalities)
      if (dot_int(e.normal, alpha) != mm * e.offset) return false;
    for (const auto& f : h_.inequalities)
      if (dot_int(f.normal, alpha) > mm * f.offset) return false;
    return true;
  }

  /// Integer upper corner of the bounding box of mS.
  MultiIndex box(long m) const {
    MultiIndex u(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      const Rational t = m * max_coord_[i];
      mpz_class c;
      mpz_cdiv_q(c.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
      u[i] = c.get_si();
    }
    return u;
  }

  const HRep& hrep() const { return h_; }
  std::size_t dim() const { return dim_; }

 private:
  static Rational dot_int(const Point& eta, const MultiIndex& a) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i]) s += eta[i] * a[i];
    return s;
  }

  std::size_t dim_;
  HRep h_;
  Point max_coord_;
};

/// Visit every integer point of the box [lo, hi] in lexicographic order.
inline void for_each_in_box(const MultiIndex& lo, const MultiIndex& hi, const std::function<void(const MultiIndex&)>& fn) {
  const std::size_t n = lo.size();
  for (std::size_t i = 0; i < n; ++i)
    if (hi[i] < lo[i]) return;
  MultiIndex a = lo;
  while (true) {
    fn(a);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (a[i] < hi[i]) {
        ++a[i];
        for (std::size_t j = i + 1; j < n; ++j) a[j] = lo[j];
        break;
      }
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

/// The integer points of mS, sorted lexicographically.
inline MultiIndexSet lattice_points(const Polytope& s, long m) {
  if (m < 1) throw std::invalid_argument("lattice_points: m must be positive");
  const ScaledMembership in(s);
  MultiIndexSet out;
  for_each_in_box(MultiIndex(s.dim(), 0), in.box(m), [&](const MultiIndex& a) {
    if (in(a, m)) out.push_back(a);
  });
  return out;
}

/// min{t >= 0 : alpha ∈ tS}, or nullopt when alpha is outside the cone R_+ S.
inline std::optional<Rational> gauge(const Polytope& s, const MultiIndex& alpha) {
  const auto& vs = s.vertices();
  LPProblem<Rational> lp;
  lp.minimize = true;
  lp.objective.assign(vs.size(), Rational(1));
  for (std::size_t i = 0; i < s.dim(); ++i) {
    std::vector<Rational> row(vs.size());
    for (std::size_t j = 0; j < vs.size(); ++j) row[j] = vs[j][i];
    lp.add_row(std::move(row), Sense::Equal, Rational(alpha[i]));
  }
  auto r = lp_solve(lp);
  if (!r.optimal()) return std::nullopt;
  return r.value;
}

/// The S-degree: least m with every exponent in mS. nullopt means infinite.
inline std::optional<long> s_degree(const SparsePoly& p, const Polytope& s) {
  if (p.dim() != s.dim()) throw std::invalid_argument("s_degree: dimension mismatch");
  long deg = 0;
  for (const auto& [a, c] : p.terms()) {
    const auto g = gauge(s, a);
    if (!g) return std::nullopt;
    mpz_class up;
    mpz_cdiv_q(up.get_mpz_t(), g->get_num_mpz_t(), g->get_den_mpz_t());
    deg = std::max(deg, up.get_si());
  }
  return deg;
}

inline bool is_member(const SparsePoly& p, const Polytope& s, long m) {
  if (p.dim() != s.dim()) throw std::invalid_argument("is_member: dimension mismatch");
  if (m < 0) return false;
  if (m == 0) {
    for (const auto& [a, c] : p.terms())
      if (std::any_of(a.begin(), a.end(), [](long v) { return v != 0; })) return false;
    return true;
  }
  const ScaledMembership in(s);
  for (const auto& [a, c] : p.terms())
    if (!in(a, m)) return false;
  return true;
}

enum class Norm { L1, L2 };

inline const char* to_string(Norm n) { return n == Norm::L1 ? "L1" : "L2"; }

/// Exact L1 distance from alpha to the polytope with the given vertices.
inline Rational l1_distance(const std::vector<Point>& verts, const Point& alpha) {
  const std::size_t n = alpha.size(), k = verts.size();
  // variables: mu_1..mu_k, t_1..t_n
  LPProblem<Rational> lp;
  lp.minimize = true;
  lp.objective.assign(k + n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) lp.objective[k + i] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> up(k + n), dn(k + n);
    for (std::size_t j = 0; j < k; ++j) {
      up[j] = verts[j][i];
      dn[j] = -verts[j][i];
    }
    up[k + i] = 1;
    dn[k + i] = 1;
    lp.add_row(std::move(up), Sense::GreaterEqual, alpha[i]);
    lp.add_row(std::move(dn), Sense::GreaterEqual, -alpha[i]);
  }
  std::vector<Rational> sum(k + n);
  for (std::size_t j = 0; j < k; ++j) sum[j] = 1;
  lp.add_row(std::move(sum), Sense::Equal, Rational(1));
  auto r = lp_solve(lp);
  if (!r.optimal()) throw std::runtime_error(std::string("l1_distance: LP ") + to_string(r.status));
  return r.value;
}

/// Point of minimal euclidean norm in conv(pts), by Wolfe's algorithm.
inline std::vector<double> min_norm_point(const std::vector<std::vector<double>>& pts, double tol = 1e-12) {
  const std::size_t n = pts.front().size();
  auto dotv = [&](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
  };
  double scale = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double q = dotv(pts[i], pts[i]);
    scale = std::max(scale, q);
    if (q < dotv(pts[start], pts[start])) start = i;
  }
  std::vector<std::size_t> act{start};
  std::vector<double> lam{1.0};
  auto combine = [&](const std::vector<double>& w) {
    std::vector<double> x(n, 0.0);
    for (std::size_t a = 0; a < act.size(); ++a)
      for (std::size_t i = 0; i < n; ++i) x[i] += w[a] * pts[act[a]][i];
    return x;
  };
  // Affine minimizer over the active set: [G 1; 1' 0][w; mu] = [0; 1].
  auto affine_min = [&]() -> std::optional<std::vector<double>> {
    const std::size_t k = act.size();
    Matrix<double> a(k + 1, std::vector<double>(k + 1, 0.0));
    std::vector<double> b(k + 1, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) a[i][j] = dotv(pts[act[i]], pts[act[j]]) / std::max(scale, 1e-300);
      a[i][k] = a[k][i] = 1;
    }
    b[k] = 1;
    auto w = solve(a, b);
    if (!w) return std::nullopt;
    w->resize(k);
    return w;
  };
  std::vector<double> x = combine(lam);
  for (std::size_t iter = 0; iter < 10000; ++iter) {
    std::size_t j = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const double d = dotv(x, pts[i]);
      if (d < best) {
        best = d;
        j = i;
      }
    }
    if (dotv(x, x) - best <= tol * std::max(scale, 1.0)) break;
    if (std::find(act.begin(), act.end(), j) != act.end()) break;
    act.push_back(j);
    lam.push_back(0.0);
    while (true) {
      auto w = affine_min();
      if (!w) {
        act.pop_back();
        lam.pop_back();
        break;
      }
      if (std::all_of(w->begin(), w->end(), [](double v) { return v > 1e-15; })) {
        lam = *w;
        break;
      }
      double theta = 1.0;
      for (std::size_t a = 0; a < act.size(); ++a)
        if ((*w)[a] <= 1e-15) theta = std::min(theta, lam[a] / (lam[a] - (*w)[a]));
      for (std::size_t a = 0; a < act.size(); ++a) lam[a] += theta * ((*w)[a] - lam[a]);
      std::vector<std::size_t> keep_idx;
      std::vector<double> keep_lam;
      for (std::size_t a = 0; a < act.size(); ++a)
        if (lam[a] > 1e-15) {
          keep_idx.push_back(act[a]);
          keep_lam.push_back(lam[a]);
        }
      act = std::move(keep_idx);
      lam = std::move(keep_lam);
      double total = 0;
      for (double v : lam) total += v;
      for (double& v : lam) v /= total;
    }
    x = combine(lam);
  }
  return x;
}

inline double l2_distance(const std::vector<std::vector<double>>& verts, const std::vector<double>& alpha) {
  std::vector<std::vector<double>> shifted = verts;
  for (auto& v : shifted)
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= alpha[i];
  const auto x = min_norm_point(shifted);
  double s = 0;
  for (double c : x) s += c * c;
  return std::sqrt(s);
}

struct GapResult {
  double distance = 0;
  MultiIndex nearest;  // an excluded lattice point attaining the distance
  Norm norm = Norm::L1;
  std::size_t candidates = 0;
};

/// d_m: the distance between mS and the lattice points of N^n outside mS.
/// Candidates come from an integer box around mS that is enlarged until its
/// margin exceeds the best distance found. A facet-based lower bound skips
/// candidates that cannot improve on the current best.
inline GapResult gap_distance(const Polytope& s, long m, Norm norm) {
  if (m < 1) throw std::invalid_argument("gap_distance: m must be positive");
  const std::size_t n = s.dim();
  const ScaledMembership in(s);
  std::vector<Point> verts;
  std::vector<std::vector<double>> verts_d;
  for (const auto& v : extreme_points(s)) {
    verts.push_back(Rational(m) * v);
    verts_d.push_back(to_double(verts.back()));
  }
  struct Face {
    std::vector<double> normal;
    double offset, dual_norm;
    bool equality;
  };
  std::vector<Face> faces;
  auto add_face = [&](const Halfspace& h, bool eq) {
    Face f{to_double(h.normal), to_double(Rational(m) * h.offset), 0, eq};
    for (double c : f.normal)
      f.dual_norm = norm == Norm::L1 ? std::max(f.dual_norm, std::abs(c)) : f.dual_norm + c * c;
    if (norm == Norm::L2) f.dual_norm = std::sqrt(f.dual_norm);
    faces.push_back(std::move(f));
  };
  for (const auto& h : in.hrep().inequalities) add_face(h, false);
  for (const auto& h : in.hrep().equalities) add_face(h, true);
  auto lower_bound = [&](const MultiIndex& a) {
    double lb = 0;
    for (const auto& f : faces) {
      double d = -f.offset;
      for (std::size_t i = 0; i < n; ++i) d += f.normal[i] * static_cast<double>(a[i]);
      if (f.equality) d = std::abs(d);
      lb = std::max(lb, d / f.dual_norm);
    }
    return lb * (1 - 1e-12);
  };

  GapResult res;
  res.norm = norm;
  res.distance = std::numeric_limits<double>::infinity();
  const MultiIndex base = in.box(m);
  long margin = 1;
  while (true) {
    MultiIndex hi = base;
    for (auto& v : hi) v += margin;
    std::vector<std::pair<double, MultiIndex>> cands;
    for_each_in_box(MultiIndex(n, 0), hi, [&](const MultiIndex& a) {
      if (!in(a, m)) cands.emplace_back(lower_bound(a), a);
    });
    std::sort(cands.begin(), cands.end());
    for (const auto& [lb, a] : cands) {
      if (lb >= res.distance) break;
      ++res.candidates;
      double d;
      if (norm == Norm::L1) {
        d = to_double(l1_distance(verts, to_point(a)));
      } else {
        std::vector<double> ad(a.begin(), a.end());
        d = l2_distance(verts_d, ad);
      }
      if (d < res.distance) {
        res.distance = d;
        res.nearest = a;
      }
    }
    // Points outside the box have a coordinate at least margin + 1 beyond mS.
    if (static_cast<double>(margin + 1) >= res.distance) break;
    margin = static_cast<long>(std::ceil(res.distance));
  }
  return res;
}

struct GrowthReport {
  std::vector<double> radii;
  std::vector<double> sup_ratio;  // sup |p| (1+|z|)^-a e^{-m H_S} at each radius
  double growth_exponent = 0;     // least-squares slope of log sup_ratio vs log R over the upper half
  bool bounded = true;
};

/// Samples |p(z)| (1+|z|)^{-a} e^{-m H_S(z)} over z with coordinates of
/// modulus in {0, 1, R^(1/2), R} and random phases, for each R in the
/// schedule. The trend is called bounded when the fitted exponent of the
/// sup over R is below 0.05. Not a certificate.
inline GrowthReport growth_probe(const SparsePoly& p, const Body& s, long m, double a, const std::vector<double>& radii,
                                 std::uint64_t seed = 1) {
  if (a < 0) throw std::invalid_argument("growth_probe: a must be nonnegative");
  if (p.dim() != s.dim()) throw std::invalid_argument("growth_probe: dimension mismatch");
  const std::size_t n = s.dim();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phase(0, 2 * std::numbers::pi);
  GrowthReport rep;
  for (double r : radii) {
    if (!(r > 0)) throw std::invalid_argument("growth_probe: radii must be positive");
    const double mods[] = {0.0, 1.0, std::sqrt(r), r};
    double sup = 0;
    MultiIndex lo(n, 0), hi(n, 3);
    for_each_in_box(lo, hi, [&](const MultiIndex& pick) {
      for (int rep_phase = 0; rep_phase < 4; ++rep_phase) {
        ComplexPoint z(n);
        double norm2 = 0;
        for (std::size_t i = 0; i < n; ++i) {
          z[i] = std::polar(mods[pick[i]], phase(rng));
          norm2 += mods[pick[i]] * mods[pick[i]];
        }
        const double ratio = std::abs(p(z)) * std::pow(1 + std::sqrt(norm2), -a) *
                             std::exp(-static_cast<double>(m) * hs_eval(s, z));
        sup = std::max(sup, ratio);
      }
    });
    rep.radii.push_back(r);
    rep.sup_ratio.push_back(sup);
  }
  const std::size_t k = rep.radii.size();
  const std::size_t from = k / 2;
  if (k - from >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double cnt = static_cast<double>(k - from);
    for (std::size_t i = from; i < k; ++i) {
      const double x = std::log(rep.radii[i]);
      const double y = std::log(std::max(rep.sup_ratio[i], 1e-300));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double den = cnt * sxx - sx * sx;
    rep.growth_exponent = den > 0 ? (cnt * sxy - sx * sy) / den : 0.0;
  }
  rep.bounded = rep.growth_exponent < 0.05;
  return rep;
}

}  // namespace pluripot
