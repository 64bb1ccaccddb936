#pragma once

// Globally adaptive quadrature over axis-aligned boxes: 15-point
// Gauss-Kronrod in one dimension, the degree-7/5 Genz-Malik pair otherwise.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <queue>
#include <stdexcept>
#include <vector>

namespace pluripot {

struct QuadratureOptions {
  double rel_tol = 1e-9;
  double abs_tol = 0.0;
  std::size_t max_evals = 20'000'000;
};

struct QuadratureResult {
  double value = 0;
  double error = 0;
  std::size_t evals = 0;
  std::size_t regions = 0;
  bool converged = false;
};

using Integrand = std::function<double(const std::vector<double>&)>;

namespace detail {

struct Region {
  std::vector<double> center, half;
  double value = 0, error = 0;
  std::size_t split_axis = 0;
  bool operator<(const Region& o) const { return error < o.error; }
};

// Gauss-Kronrod 15/7 on [c - h, c + h]; only the first coordinate is used.
inline void gk15(const Integrand& f, Region& r, std::size_t& evals) {
  static constexpr double xk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                                   0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                                   0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                                   0.207784955007898467600689403773245, 0.0};
  static constexpr double wk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                   0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                   0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                   0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
  static constexpr double wg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                   0.381830050505118944950369775488975, 0.417959183673469387755102040816327};
  const double c = r.center[0], h = r.half[0];
  std::vector<double> x(1);
  x[0] = c;
  const double fc = f(x);
  double k = wk[7] * fc, g = wg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    x[0] = c - h * xk[i];
    const double a = f(x);
    x[0] = c + h * xk[i];
    const double b = f(x);
    k += wk[i] * (a + b);
    if (i % 2 == 1) g += wg[i / 2] * (a + b);
  }
  evals += 15;
  r.value = k * h;
  r.error = std::abs((k - g) * h);
  r.split_axis = 0;
}

// Genz-Malik degree-7 rule with embedded degree-5 error estimate (n >= 2).
inline void genz_malik(const Integrand& f, Region& r, std::size_t& evals) {
  const std::size_t n = r.center.size();
  const double dn = static_cast<double>(n);
  const double l2 = std::sqrt(9.0 / 70.0), l3 = std::sqrt(9.0 / 10.0), l4 = std::sqrt(9.0 / 10.0),
               l5 = std::sqrt(9.0 / 19.0);
  const double w1 = (12824.0 - 9120.0 * dn + 400.0 * dn * dn) / 19683.0, w2 = 980.0 / 6561.0,
               w3 = (1820.0 - 400.0 * dn) / 19683.0, w4 = 200.0 / 19683.0,
               w5 = 6859.0 / 19683.0 / std::ldexp(1.0, static_cast<int>(n));
  const double v1 = (729.0 - 950.0 * dn + 50.0 * dn * dn) / 729.0, v2 = 245.0 / 486.0,
               v3 = (265.0 - 100.0 * dn) / 1458.0, v4 = 25.0 / 729.0;
  std::vector<double> x = r.center;
  const double f1 = f(x);
  double s2 = 0, s3 = 0, s4 = 0, s5 = 0;
  double best_diff = -1;
  std::size_t axis = 0;
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = r.center[i] - l2 * r.half[i];
    const double a2 = f(x);
    x[i] = r.center[i] + l2 * r.half[i];
    const double b2 = f(x);
    x[i] = r.center[i] - l3 * r.half[i];
    const double a3 = f(x);
    x[i] = r.center[i] + l3 * r.half[i];
    const double b3 = f(x);
    x[i] = r.center[i];
    s2 += a2 + b2;
    s3 += a3 + b3;
    const double diff = std::abs(a2 + b2 - 2 * f1 - (l2 * l2 / (l3 * l3)) * (a3 + b3 - 2 * f1));
    if (diff > best_diff + 1e-14 * std::abs(best_diff)) {
      best_diff = diff;
      axis = i;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (int si = -1; si <= 1; si += 2)
        for (int sj = -1; sj <= 1; sj += 2) {
          x[i] = r.center[i] + si * l4 * r.half[i];
          x[j] = r.center[j] + sj * l4 * r.half[j];
          s4 += f(x);
          x[i] = r.center[i];
          x[j] = r.center[j];
        }
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i) x[i] = r.center[i] + ((mask >> i & 1u) ? l5 : -l5) * r.half[i];
    s5 += f(x);
  }
  evals += 1 + 4 * n + 2 * n * (n - 1) + (std::size_t{1} << n);
  double vol = 1;
  for (double h : r.half) vol *= 2 * h;
  const double i7 = vol * (w1 * f1 + w2 * s2 + w3 * s3 + w4 * s4 + w5 * s5);
  const double i5 = vol * (v1 * f1 + v2 * s2 + v3 * s3 + v4 * s4);
  r.value = i7;
  r.error = std::abs(i7 - i5);
  r.split_axis = axis;
}

inline void apply_rule(const Integrand& f, Region& r, std::size_t& evals) {
  if (r.center.size() == 1)
    gk15(f, r, evals);
  else
    genz_malik(f, r, evals);
}

}  // namespace detail

/// Integrate f over the union of the given boxes [lo, hi] (treated as
/// initial regions). Regions with the largest error estimate are bisected
/// until the total error estimate meets the tolerance or the evaluation
/// budget runs out.
inline QuadratureResult integrate_boxes(const Integrand& f, const std::vector<std::pair<std::vector<double>, std::vector<double>>>& boxes,
                                        const QuadratureOptions& opt = {}) {
  if (boxes.empty()) throw std::invalid_argument("integrate: no region");
  QuadratureResult res;
  std::priority_queue<detail::Region> heap;
  double total = 0, err = 0;
  for (const auto& [lo, hi] : boxes) {
    if (lo.size() != hi.size() || lo.empty()) throw std::invalid_argument("integrate: malformed box");
    detail::Region r;
    for (std::size_t i = 0; i < lo.size(); ++i) {
      r.center.push_back(0.5 * (lo[i] + hi[i]));
      r.half.push_back(0.5 * (hi[i] - lo[i]));
    }
    detail::apply_rule(f, r, res.evals);
    total += r.value;
    err += r.error;
    heap.push(std::move(r));
  }
  while (err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total)) && res.evals < opt.max_evals) {
    detail::Region r = heap.top();
    heap.pop();
    total -= r.value;
    err -= r.error;
    const std::size_t ax = r.split_axis;
    detail::Region a = r, b = r;
    a.half[ax] = b.half[ax] = 0.5 * r.half[ax];
    a.center[ax] = r.center[ax] - a.half[ax];
    b.center[ax] = r.center[ax] + b.half[ax];
    detail::apply_rule(f, a, res.evals);
    detail::apply_rule(f, b, res.evals);
    total += a.value + b.value;
    err += a.error + b.error;
    heap.push(std::move(a));
    heap.push(std::move(b));
  }
  // Re-sum to shed drift from the running updates.
  total = 0;
  err = 0;
  res.regions = heap.size();
  while (!heap.empty()) {
    total += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  res.value = total;
  res.error = err;
  res.converged = err <= std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
  return res;
}

inline QuadratureResult integrate_box(const Integrand& f, const std::vector<double>& lo, const std::vector<double>& hi,
                                      const QuadratureOptions& opt = {}) {
  return integrate_boxes(f, {{lo, hi}}, opt);
}

}  // namespace pluripot
