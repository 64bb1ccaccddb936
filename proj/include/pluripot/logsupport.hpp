#pragma once

// The logarithmic supporting function H_S = phi_S o Log on C^n, extended to
// the coordinate hyperplanes through slice bodies.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "polytope.hpp"
#include "rational.hpp"

namespace pluripot {

using Complex = std::complex<double>;
using ComplexPoint = std::vector<Complex>;

inline double log_plus(double r) { return r > 1 ? std::log(r) : 0.0; }

/// Coordinates j with z_j != 0.
inline std::vector<std::size_t> nonzero_coordinates(const ComplexPoint& z) {
  std::vector<std::size_t> j;
  for (std::size_t i = 0; i < z.size(); ++i)
    if (z[i] != Complex(0, 0)) j.push_back(i);
  return j;
}

/// S_J: the points t in R^|J| whose embedding (zeros off J) lies in S.
/// S ∩ {x_j = 0, j not in J} is a face of S because S lies in the positive
/// orthant, so its vertices are the vertices of S that vanish off J.
inline Body slice_body(const Body& s, const std::vector<std::size_t>& j) {
  if (j.empty()) throw std::invalid_argument("slice_body: index set is empty");
  std::vector<bool> in(s.dim(), false);
  for (auto i : j) {
    if (i >= s.dim()) throw std::invalid_argument("slice_body: index out of range");
    in[i] = true;
  }
  std::vector<Point> verts;
  for (const auto& v : s.vertices()) {
    bool off_zero = true;
    for (std::size_t i = 0; i < s.dim() && off_zero; ++i)
      if (!in[i] && sgn(v[i]) != 0) off_zero = false;
    if (!off_zero) continue;
    Point t;
    for (auto i : j) t.push_back(v[i]);
    verts.push_back(std::move(t));
  }
  return reduced(Body(j.size(), std::move(verts)));
}

/// H_S(z). On C*^n this is max_v <v, Log z>; when some coordinates vanish it
/// is H_{S_J} at the nonzero coordinates, and H_S(0) = 0.
inline double hs_eval(const Body& s, const ComplexPoint& z) {
  if (z.size() != s.dim()) throw std::invalid_argument("hs_eval: dimension mismatch");
  for (const auto& c : z)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw std::invalid_argument("hs_eval: non-finite coordinate");
  const auto j = nonzero_coordinates(z);
  if (j.empty()) return 0.0;
  std::vector<double> logs(s.dim(), 0.0);
  for (auto i : j) logs[i] = std::log(std::abs(z[i]));
  double best = 0.0;  // 0 is a vertex of every slice body
  for (const auto& v : s.vertices_double()) {
    double d = 0;
    bool ok = true;
    for (std::size_t i = 0; i < v.size() && ok; ++i) {
      if (z[i] == Complex(0, 0)) {
        if (v[i] != 0) ok = false;
      } else {
        d += v[i] * logs[i];
      }
    }
    if (ok) best = std::max(best, d);
  }
  return best;
}

/// sigma_S = phi_S(1, ..., 1).
inline Rational sigma(const Body& s) { return support(s, Point(s.dim(), Rational(1))); }

/// phi_S(Log^+ z), the value H_S takes everywhere exactly when S is a lower set.
inline double hs_log_plus(const Body& s, const ComplexPoint& z) {
  if (z.size() != s.dim()) throw std::invalid_argument("hs_log_plus: dimension mismatch");
  std::vector<double> xi(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) xi[i] = log_plus(std::abs(z[i]));
  return support(s, std::span<const double>(xi));
}

inline constexpr double kZeroSetTolerance = 1e-12;

/// True when z lies in the zero set of H_S.
inline bool hs_zero_set_probe(const Body& s, const ComplexPoint& z) {
  return hs_eval(s, z) <= kZeroSetTolerance;
}

}  // namespace pluripot
