#pragma once

// Weighted Siciak extremal functions on finite sample sets, computed by
// linear programming over P^S_m, with the Fekete superadditivity check, the
// torus monomial bound and an advisory weight validator.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "logsupport.hpp"
#include "lp.hpp"
#include "polyspace.hpp"
#include "polytope.hpp"

namespace pluripot {

/// A finite sample of a compact K ⊂ C^n with weight values q. Points whose
/// weight is +inf impose no constraint and are skipped by the solver.
struct WeightedSampleSet {
  std::vector<ComplexPoint> points;
  std::vector<double> weights;

  std::size_t dim() const { return points.empty() ? 0 : points.front().size(); }

  /// Throws std::invalid_argument unless the set is usable by the solver.
  void check() const {
    if (points.empty()) throw std::invalid_argument("sample set is empty");
    if (points.size() != weights.size()) throw std::invalid_argument("sample set: points and weights differ in length");
    const std::size_t n = dim();
    bool any_finite = false;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (points[i].size() != n) throw std::invalid_argument("sample set: points differ in dimension");
      for (const auto& c : points[i])
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
          throw std::invalid_argument("sample set: non-finite coordinate at point " + std::to_string(i));
      const double q = weights[i];
      if (std::isnan(q) || q == -std::numeric_limits<double>::infinity())
        throw std::invalid_argument("sample set: weight at point " + std::to_string(i) + " is not bounded below");
      any_finite = any_finite || std::isfinite(q);
    }
    if (!any_finite) throw std::invalid_argument("sample set: every weight is +inf");
  }
};

/// The grid of counts[0] x ... x counts[n-1] roots of unity on the unit torus,
/// with weight q = 0.
inline WeightedSampleSet torus_samples(const std::vector<std::size_t>& counts) {
  WeightedSampleSet k;
  const std::size_t n = counts.size();
  MultiIndex hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (counts[i] == 0) throw std::invalid_argument("torus_samples: zero count");
    hi[i] = static_cast<long>(counts[i]) - 1;
  }
  for_each_in_box(MultiIndex(n, 0), hi, [&](const MultiIndex& idx) {
    ComplexPoint z(n);
    for (std::size_t i = 0; i < n; ++i)
      z[i] = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(idx[i]) / static_cast<double>(counts[i]));
    k.points.push_back(std::move(z));
    k.weights.push_back(0.0);
  });
  return k;
}

struct PhiResult {
  double value = 0;        // V^(1/m), an upper bound for Phi_m on the sample set
  double lower_bound = 0;  // (V cos(pi/P))^(1/m)
  double upper_factor = 1; // 1/cos(pi/P)
  std::size_t basis_size = 0;
  std::size_t samples = 0;
  std::size_t phases = 0;
  LPStatus status = LPStatus::Optimal;
  std::size_t rounds = 0;       // LP solves in the constraint generation loop
  std::size_t constraints = 0;  // (sample, phase) rows in the final LP
  bool real_path = false;
  std::vector<std::pair<MultiIndex, Complex>> witness;  // coefficients of an optimal p

  bool solved() const { return status == LPStatus::Optimal; }
};

inline constexpr double kPhiFeasTol = 1e-10;
inline constexpr std::size_t kPhiMaxRounds = 500;

namespace detail {

// log|x^alpha| and arg(x^alpha); -inf magnitude when x^alpha = 0.
inline std::pair<double, double> log_monomial(const MultiIndex& alpha, const std::vector<double>& logmod,
                                              const std::vector<double>& arg) {
  double lm = 0, ph = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    if (logmod[i] == -std::numeric_limits<double>::infinity()) return {logmod[i], 0.0};
    lm += static_cast<double>(alpha[i]) * logmod[i];
    ph += static_cast<double>(alpha[i]) * arg[i];
  }
  return {lm, ph};
}

inline void log_polar(const ComplexPoint& z, std::vector<double>& logmod, std::vector<double>& arg) {
  logmod.resize(z.size());
  arg.resize(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double r = std::abs(z[i]);
    logmod[i] = r == 0 ? -std::numeric_limits<double>::infinity() : std::log(r);
    arg[i] = std::arg(z[i]);
  }
}

}  // namespace detail

/// Phi^S_{K,q,m}(z) on the sample set K. The constraint |p(x)| <= e^{m q(x)}
/// is replaced by Re(e^{-i phi_k} p(x)) <= e^{m q(x)}, phi_k = 2 pi k/P,
/// and Re p(z) is maximized. This value V satisfies
/// V cos(pi/P) <= Phi_m(z)^m <= V. The LP is solved in dual form
/// (2N equality rows for a basis of size N); the optimal coefficients are
/// read from its row duals. When z and K are real and P is even the
/// coefficients may be taken real and the constraints become |p(x)| <= e^{mq}.
inline PhiResult phi_m(const Body& s, const WeightedSampleSet& k, long m, const ComplexPoint& z, std::size_t phases = 64,
                       const LPOptions& lp_opt = {}) {
  if (m < 1) throw std::invalid_argument("phi_m: m must be positive");
  if (phases < 8) throw std::invalid_argument("phi_m: need at least 8 phases");
  k.check();
  const std::size_t n = s.dim();
  if (k.dim() != n || z.size() != n) throw std::invalid_argument("phi_m: dimension mismatch");
  const auto basis = lattice_points(s, m);
  PhiResult res;
  res.basis_size = basis.size();
  res.phases = phases;
  res.upper_factor = 1.0 / std::cos(std::numbers::pi / static_cast<double>(phases));
  double qmin = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> used;
  for (std::size_t i = 0; i < k.points.size(); ++i)
    if (std::isfinite(k.weights[i])) {
      used.push_back(i);
      qmin = std::min(qmin, k.weights[i]);
    }
  res.samples = used.size();
  const double dm = static_cast<double>(m);
  if (basis.size() == 1) {
    // Only constants: |c| <= e^{m min q}.
    res.value = res.lower_bound = std::exp(qmin);
    res.witness = {{basis[0], Complex(std::exp(dm * qmin), 0)}};
    return res;
  }

  bool real = phases % 2 == 0;
  for (const auto& c : z) real = real && c.imag() == 0;
  for (auto i : used)
    for (const auto& c : k.points[i]) real = real && c.imag() == 0;
  res.real_path = real;

  const std::size_t nb = basis.size();
  const std::size_t nvar = real ? nb : 2 * nb;

  // Objective Re p(z) = sum u_a Re z^a - w_a Im z^a, scaled by max |z^a|.
  std::vector<double> lz, az;
  detail::log_polar(z, lz, az);
  std::vector<std::pair<double, double>> zmon(nb);
  double zscale = -std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < nb; ++a) {
    zmon[a] = detail::log_monomial(basis[a], lz, az);
    zscale = std::max(zscale, zmon[a].first);
  }
  std::vector<double> cost(nvar, 0.0);
  for (std::size_t a = 0; a < nb; ++a) {
    if (zmon[a].first == -std::numeric_limits<double>::infinity()) continue;
    const double mag = std::exp(zmon[a].first - zscale);
    cost[a] = mag * std::cos(zmon[a].second);
    if (!real) cost[nb + a] = -mag * std::sin(zmon[a].second);
  }

  // Per-sample monomial values x^a e^{-m q(x)}, split into real and imaginary parts.
  std::vector<std::vector<double>> gre, gim;
  std::vector<double> lx, ax;
  for (auto i : used) {
    detail::log_polar(k.points[i], lx, ax);
    std::vector<double> gr(nb), gi(nb);
    for (std::size_t a = 0; a < nb; ++a) {
      const auto [lm, ph] = detail::log_monomial(basis[a], lx, ax);
      if (lm == -std::numeric_limits<double>::infinity()) continue;
      const double mag = std::exp(lm - dm * k.weights[i]);
      gr[a] = mag * std::cos(ph);
      gi[a] = mag * std::sin(ph);
    }
    gre.push_back(std::move(gr));
    gim.push_back(std::move(gi));
  }
  const double two_pi = 2 * std::numbers::pi;
  const double dp = static_cast<double>(phases);

  // Primal row for sample j and phase index p: <row, (u, w)> <= 1.
  auto make_row = [&](std::size_t j, std::size_t p) {
    std::vector<double> row(nvar);
    if (real) {
      const double sg = p == 0 ? 1.0 : -1.0;
      for (std::size_t a = 0; a < nb; ++a) row[a] = sg * gre[j][a];
      return row;
    }
    const double phi = two_pi * static_cast<double>(p) / dp;
    const double c = std::cos(phi), sn = std::sin(phi);
    for (std::size_t a = 0; a < nb; ++a) {
      row[a] = c * gre[j][a] + sn * gim[j][a];
      row[nb + a] = -c * gim[j][a] + sn * gre[j][a];
    }
    return row;
  };

  // Active (sample, phase) pairs. The complex case starts from 16 phases per
  // sample and adds the most violated grid phase of each sample until the
  // witness satisfies every constraint of the full P-grid.
  std::set<std::pair<std::size_t, std::size_t>> active;
  const std::size_t start = real ? 2 : std::min<std::size_t>(16, phases);
  for (std::size_t j = 0; j < used.size(); ++j)
    for (std::size_t t = 0; t < start; ++t)
      active.emplace(j, real ? t : t * phases / start);

  LPResult<double> sol;
  for (std::size_t round = 0;; ++round) {
    std::vector<std::vector<double>> rows;
    for (const auto& [j, p] : active) rows.push_back(make_row(j, p));
    // Dual: minimize sum y subject to A^T y = cost, y >= 0.
    LPProblem<double> dual;
    dual.minimize = true;
    dual.objective.assign(rows.size(), 1.0);
    for (std::size_t c = 0; c < nvar; ++c) {
      std::vector<double> r(rows.size());
      for (std::size_t i = 0; i < rows.size(); ++i) r[i] = rows[i][c];
      dual.add_row(std::move(r), Sense::Equal, cost[c]);
    }
    sol = lp_solve(dual, lp_opt);
    res.rounds = round + 1;
    res.status = sol.status;
    // Dual infeasible means the primal is unbounded: K does not control P^S_m.
    if (sol.status == LPStatus::Infeasible) res.status = LPStatus::Unbounded;
    if (!sol.optimal() || real) break;
    std::size_t added = 0;
    for (std::size_t j = 0; j < used.size(); ++j) {
      double pr = 0, pi = 0;
      for (std::size_t a = 0; a < nb; ++a) {
        const double u = sol.duals[a], w = sol.duals[nb + a];
        pr += u * gre[j][a] - w * gim[j][a];
        pi += u * gim[j][a] + w * gre[j][a];
      }
      const double ang = std::atan2(pi, pr);
      auto p = static_cast<long>(std::lround(ang / two_pi * dp)) % static_cast<long>(phases);
      if (p < 0) p += static_cast<long>(phases);
      const double val = std::hypot(pr, pi) * std::cos(ang - two_pi * static_cast<double>(p) / dp);
      if (val > 1 + kPhiFeasTol && active.emplace(j, static_cast<std::size_t>(p)).second) ++added;
    }
    if (added == 0 || round + 1 >= kPhiMaxRounds) break;
  }
  res.constraints = active.size();
  if (!sol.optimal()) return res;

  const double v_log = std::log(std::max(sol.value, std::numeric_limits<double>::min())) + zscale;
  res.value = std::exp(v_log / dm);
  res.lower_bound = std::exp((v_log + std::log(std::cos(std::numbers::pi / dp))) / dm);
  for (std::size_t a = 0; a < nb; ++a) {
    const double u = sol.duals[a];
    const double w = real ? 0.0 : sol.duals[nb + a];
    res.witness.emplace_back(basis[a], Complex(u, w));
  }
  return res;
}

struct FeketeRow {
  long j = 0, k = 0;
  double lhs = 0;    // j log Phi_j + k log Phi_k (upper values)
  double rhs = 0;    // (j+k) log Phi_{j+k} (upper value)
  double slack = 0;  // allowance 2 log(1/cos(pi/P)) for the phase discretization
  bool holds = true;
};

struct FeketeReport {
  std::map<long, PhiResult> phi;
  std::vector<FeketeRow> rows;
  double sup_phi = 0;  // max over computed m of Phi_m(z)
  bool all_hold = true;
};

/// Checks Phi_j^j Phi_k^k <= Phi_{j+k}^{j+k} for each pair. With upper values
/// V_m the check V_j V_k <= V_{j+k} / cos^2(pi/P) is implied by the true
/// inequality, so a failure is a genuine violation.
inline FeketeReport fekete_check(const Body& s, const WeightedSampleSet& k, const std::vector<std::pair<long, long>>& pairs,
                                 const ComplexPoint& z, std::size_t phases = 64) {
  FeketeReport rep;
  auto get = [&](long m) -> const PhiResult& {
    auto it = rep.phi.find(m);
    if (it == rep.phi.end()) it = rep.phi.emplace(m, phi_m(s, k, m, z, phases)).first;
    if (!it->second.solved()) throw std::runtime_error("fekete_check: LP for m = " + std::to_string(m) + " failed");
    return it->second;
  };
  const double slack = 2 * std::log(1.0 / std::cos(std::numbers::pi / static_cast<double>(phases)));
  for (const auto& [j, kk] : pairs) {
    FeketeRow r;
    r.j = j;
    r.k = kk;
    r.lhs = static_cast<double>(j) * std::log(get(j).value) + static_cast<double>(kk) * std::log(get(kk).value);
    r.rhs = static_cast<double>(j + kk) * std::log(get(j + kk).value);
    r.slack = slack;
    r.holds = r.lhs <= r.rhs + slack + 1e-9 * (1 + std::abs(r.rhs));
    rep.all_hold = rep.all_hold && r.holds;
    rep.rows.push_back(r);
  }
  for (const auto& [m, p] : rep.phi) rep.sup_phi = std::max(rep.sup_phi, p.value);
  return rep;
}

/// max over alpha ∈ (mS) ∩ N^n of (1/m) <alpha, Log z>: the logarithm of the
/// best monomial candidate for K the unit torus.
inline double monomial_torus_bound(const Body& s, long m, const ComplexPoint& z) {
  if (z.size() != s.dim()) throw std::invalid_argument("monomial_torus_bound: dimension mismatch");
  std::vector<double> lz(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] == Complex(0, 0)) throw std::invalid_argument("monomial_torus_bound: z has a zero coordinate");
    lz[i] = std::log(std::abs(z[i]));
  }
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& a : lattice_points(s, m)) {
    double v = 0;
    for (std::size_t i = 0; i < a.size(); ++i) v += static_cast<double>(a[i]) * lz[i];
    best = std::max(best, v / static_cast<double>(m));
  }
  return best;
}

struct WeightReport {
  bool finite_ok = true;      // weights are not NaN or -inf
  bool nontrivial_ok = true;  // finite-weight points span C^n affinely
  std::optional<bool> trend_ok;
  std::vector<std::string> notes;
  bool pass() const { return finite_ok && nontrivial_ok && trend_ok.value_or(true); }
};

namespace detail {

inline std::size_t complex_rank(std::vector<std::vector<Complex>> a, double tol) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    for (std::size_t r = rank; r < a.size(); ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    if (std::abs(a[piv][c]) <= tol) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      const Complex f = a[r][c] / a[rank][c];
      for (std::size_t cc = c; cc < cols; ++cc) a[r][cc] -= f * a[rank][cc];
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Advisory checks of an admissible weight on a sample set: (i) weights are
/// bounded below, (ii) the finite-weight points are not contained in a
/// complex affine hyperplane, (iii) with `unbounded`, H_S - q decreases along
/// the largest-norm decile (compared with the middle decile, and by a
/// negative least-squares slope against log(1+|z|) over the top half).
inline WeightReport validate_weight(const Body& s, const WeightedSampleSet& e, bool unbounded) {
  WeightReport rep;
  if (e.points.size() != e.weights.size() || e.points.empty()) {
    rep.finite_ok = false;
    rep.notes.push_back("points and weights must be nonempty and of equal length");
    return rep;
  }
  std::vector<std::size_t> finite;
  for (std::size_t i = 0; i < e.weights.size(); ++i) {
    const double q = e.weights[i];
    if (std::isnan(q) || q == -std::numeric_limits<double>::infinity()) {
      rep.finite_ok = false;
      rep.notes.push_back("weight at point " + std::to_string(i) + " is not bounded below");
    } else if (std::isfinite(q)) {
      finite.push_back(i);
    }
  }
  const std::size_t n = s.dim();
  if (finite.size() < n + 1) {
    rep.nontrivial_ok = false;
    rep.notes.push_back("fewer than n+1 points with finite weight");
  } else {
    std::vector<std::vector<Complex>> diffs;
    double scale = 0;
    for (std::size_t t = 1; t < finite.size(); ++t) {
      std::vector<Complex> d(n);
      for (std::size_t i = 0; i < n; ++i) {
        d[i] = e.points[finite[t]][i] - e.points[finite[0]][i];
        scale = std::max(scale, std::abs(d[i]));
      }
      diffs.push_back(std::move(d));
    }
    if (detail::complex_rank(std::move(diffs), 1e-9 * std::max(scale, 1.0)) < n) {
      rep.nontrivial_ok = false;
      rep.notes.push_back("finite-weight points lie in a complex affine hyperplane");
    }
  }
  if (unbounded) {
    std::vector<std::pair<double, double>> pts;  // (|z|, H_S - q)
    for (auto i : finite) {
      double nn = 0;
      for (const auto& c : e.points[i]) nn += std::norm(c);
      pts.emplace_back(std::sqrt(nn), hs_eval(s, e.points[i]) - e.weights[i]);
    }
    std::sort(pts.begin(), pts.end());
    const std::size_t cnt = pts.size();
    if (cnt < 10) {
      rep.trend_ok = false;
      rep.notes.push_back("too few samples for a trend");
    } else {
      auto mean = [&](std::size_t from, std::size_t to) {
        double sum = 0;
        for (std::size_t i = from; i < to; ++i) sum += pts[i].second;
        return sum / static_cast<double>(to - from);
      };
      const std::size_t dec = cnt / 10;
      const double top = mean(cnt - dec, cnt), mid = mean(cnt / 2 - dec / 2, cnt / 2 - dec / 2 + dec);
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      const std::size_t from = cnt / 2;
      for (std::size_t i = from; i < cnt; ++i) {
        const double x = std::log1p(pts[i].first), y = pts[i].second;
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
      }
      const double c = static_cast<double>(cnt - from);
      const double den = c * sxx - sx * sx;
      const double slope = den > 0 ? (c * sxy - sx * sy) / den : 0.0;
      rep.trend_ok = top < mid && slope < 0;
      if (!*rep.trend_ok) rep.notes.push_back("H_S - q does not decrease along the largest samples");
    }
  }
  return rep;
}

}  // namespace pluripot
