#include "pluripot/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <utility>

#include "pluripot/cone.hpp"
#include "pluripot/extremal.hpp"
#include "pluripot/io.hpp"
#include "pluripot/logsupport.hpp"
#include "pluripot/massint.hpp"
#include "pluripot/parallel.hpp"
#include "pluripot/polyspace.hpp"
#include "pluripot/pullback.hpp"
#include "pluripot/surrogates.hpp"

namespace pluripot {

namespace checks {

void add(SuiteResult& r, std::string name, bool pass, std::string detail = {}) {
  r.lines.push_back({std::move(name), pass, std::move(detail)});
}

Body quadrilateral(const Rational& a, const Rational& b) {
  return Body(2, {zero_point(2), make_point({a, 0}), make_point({b, 1 - b}), make_point({0, 1})});
}

Body quadrilateral() { return quadrilateral(make_rational(1, 5), make_rational(4, 5)); }

Rational shoelace_area(std::vector<Point> v) {
  if (v.size() < 3) return 0;
  Point c = zero_point(2);
  for (const auto& p : v) c = c + p;
  c = make_rational(1, static_cast<long>(v.size())) * c;
  auto half = [&](const Point& p) {
    const Rational x = p[0] - c[0], y = p[1] - c[1];
    return sgn(y) < 0 || (sgn(y) == 0 && sgn(x) < 0);
  };
  std::sort(v.begin(), v.end(), [&](const Point& p, const Point& q) {
    const bool hp = half(p), hq = half(q);
    if (hp != hq) return !hp;
    return (p[0] - c[0]) * (q[1] - c[1]) - (p[1] - c[1]) * (q[0] - c[0]) > 0;
  });
  Rational twice = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& p = v[i];
    const auto& q = v[(i + 1) % v.size()];
    twice += p[0] * q[1] - p[1] * q[0];
  }
  return abs(twice) / 2;
}

std::string fmt(double x) { return format_double(x); }

bool same_vertices(const Polytope& a, const Polytope& b) { return reduced(a).vertices() == reduced(b).vertices(); }

bool hull_contains_all(const Polytope& outer, const std::vector<Point>& pts) {
  const auto h = halfspaces(outer);
  return std::all_of(pts.begin(), pts.end(), [&](const Point& p) { return contains(h, p); });
}

Point random_rational_direction(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-12, 12), den(1, 5);
  Point p(n);
  for (auto& c : p) c = make_rational(num(rng), den(rng));
  return p;
}

Polytope random_component(std::mt19937_64& rng, std::size_t l) {
  std::uniform_int_distribution<long> coord(0, 3), count(1, 3);
  std::vector<Point> pts;
  const long k = count(rng);
  for (long i = 0; i < k; ++i) {
    Point p(l);
    for (auto& c : p) c = coord(rng);
    pts.push_back(std::move(p));
  }
  return Polytope(l, std::move(pts));
}

Complex random_coefficient(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return {u(rng), u(rng)};
}

/// z with log |z_j| uniform in [lo, hi] and uniform arguments.
ComplexPoint random_point(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> lr(lo, hi), ang(-std::numbers::pi, std::numbers::pi);
  ComplexPoint z(n);
  for (auto& c : z) c = std::polar(std::exp(lr(rng)), ang(rng));
  return z;
}

// ---------------------------------------------------------------- suites

/// Cone integrals for z_1^k on the quadrilateral with m = 4, a = 1/5, b = 4/5.
void cone_integrals(SuiteResult& r, const CheckOptions&) {
  const long m = 4, k = 1;
  const Rational a = make_rational(1, 5), b = make_rational(4, 5);
  const Rational c = (b - a) / (1 - b);
  add(r, "preconditions", a < make_rational(1, m) && m * (1 - b) < 1 && c == 3 && m - 2 - a * m == make_rational(6, 5) && c > m - 2 - a * m,
      "a < 1/m, m(1-b) < 1, (b-a)/(1-b) = " + to_string(c) + " > m-2-am = " + to_string(Rational(m - 2 - a * m)));
  const Body s = quadrilateral(a, b);
  const auto pts = lattice_points(s, m);
  const bool excluded = std::find(pts.begin(), pts.end(), MultiIndex{1, 0}) == pts.end();
  add(r, "(1,0) not in 4S", excluded, std::to_string(pts.size()) + " lattice points in 4S");

  const MultiIndex alpha{k, 0};
  const auto closed = monomial_l2_norm(s, alpha, m, L2Method::ClosedForm2D);
  // Per-cone values worked out by iterated integration over each normal cone.
  const Rational kk = k, mm = m;
  const std::vector<std::pair<Point, Rational>> oracle{
      {make_point({0, 0}), 1 / (4 * (kk + 1))},
      {make_point({a, 0}), 1 / (4 * (c + mm * a - 1 - kk))},
      {make_point({b, 1 - b}), 1 / (4 * (1 - mm * (1 - b))) * (1 / (mm - 2 - kk) - 1 / (c + mm * a - 1 - kk))},
      {make_point({0, 1}), 1 / (4 * (kk + 1) * (mm - 2 - kk))},
  };
  bool terms_ok = !closed.infinite && closed.terms.size() == 4;
  Rational oracle_sum = 0;
  for (const auto& [v, val] : oracle) {
    oracle_sum += val;
    auto it = std::find_if(closed.terms.begin(), closed.terms.end(), [&](const ConeTerm& t) { return t.vertex == v; });
    const bool hit = it != closed.terms.end() && it->value == val;
    terms_ok = terms_ok && hit;
    r.table.push_back("cone at " + to_string(v) + ": " + (it == closed.terms.end() ? std::string("missing") : to_string(it->value)) +
                      "  expected " + to_string(val));
  }
  add(r, "closed-form cone integrals", terms_ok && closed.rational_factor && *closed.rational_factor == oracle_sum,
      "sum = " + to_string(oracle_sum) + ", times (2pi)^2 = " + fmt(closed.value));

  const auto quad = monomial_l2_norm(s, alpha, m, L2Method::Quadrature);
  const double rel = std::abs(quad.value - closed.value) / closed.value;
  r.table.push_back("quadrature: " + fmt(quad.value) + "  closed form: " + fmt(closed.value) + "  relative difference " + fmt(rel));
  add(r, "quadrature agrees within 1e-6", !quad.infinite && quad.converged && rel <= 1e-6,
      "relative difference " + fmt(rel) + ", " + std::to_string(quad.evals) + " evaluations");

  const auto inf = monomial_l2_norm(s, MultiIndex{2, 0}, m, L2Method::ClosedForm2D);
  add(r, "z_1^2 has infinite norm", inf.infinite);
}

/// Total mass (2 pi)^n n! vol(S).
void mass_identity(SuiteResult& r, const CheckOptions& opt) {
  bool simplex_ok = true;
  std::string detail;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto rep = ma_total_mass(standard_simplex(n));
    const bool ok = rep.exact && rep.factor == 1 &&
                    std::abs(rep.value - std::pow(2 * std::numbers::pi, static_cast<double>(n))) <= 1e-12 * rep.value;
    simplex_ok = simplex_ok && ok;
    detail += "n=" + std::to_string(n) + ": " + rep.formula() + (ok ? "" : " MISMATCH") + "; ";
  }
  add(r, "simplex mass is (2pi)^n", simplex_ok, detail);

  std::mt19937_64 rng(opt.seed);
  std::size_t bad = 0;
  for (int i = 0; i < 20; ++i) {
    const Body p = random_polygon(rng, 4 + static_cast<std::size_t>(i % 4));
    const auto rep = ma_total_mass(p);
    const Rational area = shoelace_area(extreme_points(p));
    if (!rep.exact || rep.factor / 2 != area) {
      ++bad;
      r.table.push_back("polygon " + to_json(p).dump() + ": factor " + to_string(rep.factor) + ", shoelace " + to_string(area));
    }
  }
  add(r, "polygon mass / (2pi)^2 / 2 equals shoelace area", bad == 0, std::to_string(20 - bad) + "/20 exact matches");
}

/// Number of phases for the torus LP: the polygon approximation of the
/// unit disc inflates log Phi_m by at most -log cos(pi/P)/m, kept below
/// a quarter of the 1e-6 tolerance.
inline constexpr std::size_t kConvergencePhases = 8192;

/// Monomial bounds increase to H_S and the LP values stay below H_S.
void torus_convergence(SuiteResult& r, const CheckOptions& opt) {
  const std::vector<std::pair<std::string, Body>> bodies{{"simplex", standard_simplex(2)}, {"quadrilateral", quadrilateral()}};
  const auto k = torus_samples({16, 8});
  for (const auto& [label, s] : bodies) {
    std::mt19937_64 rng(opt.seed + (label == "simplex" ? 0 : 1));
    std::vector<ComplexPoint> zs;
    while (zs.size() < 25) {
      auto z = random_point(rng, 2, -1.0, 1.5);
      if (hs_eval(s, z) > 1e-3) zs.push_back(std::move(z));
    }
    std::size_t monotone_fail = 0, close_fail = 0;
    double worst_gap = 0;
    for (const auto& z : zs) {
      double prev = -std::numeric_limits<double>::infinity();
      for (long m : {1L, 2L, 4L, 8L, 16L, 32L}) {
        const double v = monomial_torus_bound(s, m, z);
        if (v < prev - 1e-12) ++monotone_fail;
        prev = v;
      }
      const double h = hs_eval(s, z);
      const double gap = (h - prev) / h;
      worst_gap = std::max(worst_gap, gap);
      if (label == "simplex" && gap > 0.05) ++close_fail;
    }
    add(r, label + ": monomial bound nondecreasing in m", monotone_fail == 0, std::to_string(monotone_fail) + " decreases over 25 points");
    if (label == "simplex")
      add(r, "simplex: monomial bound within 5% of H_S at m = 32", close_fail == 0, "worst relative gap " + fmt(worst_gap));

    // The witness polynomial p gives the independent lower bound
    // log(|p(z)| / max_K |p|)/m for log Phi_m(z), so a positive excess can
    // be confirmed without trusting the LP optimum.
    std::vector<double> excess(zs.size() * 4, 0.0), certified(zs.size() * 4, 0.0);
    std::vector<int> solved(zs.size() * 4, 0);
    parallel_for(zs.size() * 4, opt.workers, [&](std::size_t idx) {
      const auto& z = zs[idx / 4];
      const long m = static_cast<long>(idx % 4) + 1;
      const auto phi = phi_m(s, k, m, z, kConvergencePhases);
      solved[idx] = phi.solved();
      const double h = hs_eval(s, z);
      excess[idx] = std::log(phi.value) - h;
      SparsePoly p(2);
      for (const auto& [alpha, c] : phi.witness) p.add(alpha, c);
      double sup_k = 0;
      for (const auto& x : k.points) sup_k = std::max(sup_k, std::abs(p(x)));
      certified[idx] = std::log(std::abs(p(z)) / sup_k) / static_cast<double>(m) - h;
    });
    const auto worst_at = static_cast<std::size_t>(std::max_element(excess.begin(), excess.end()) - excess.begin());
    const double worst = excess[worst_at];
    const std::size_t over = static_cast<std::size_t>(std::count_if(excess.begin(), excess.end(), [](double e) { return e > 1e-6; }));
    const bool all_solved = std::all_of(solved.begin(), solved.end(), [](int v) { return v != 0; });
    const auto& zw = zs[worst_at / 4];
    add(r, label + ": log Phi_m <= H_S + 1e-6 for m <= 4", all_solved && worst <= 1e-6,
        "max excess " + fmt(worst) + " at |z| = (" + fmt(std::abs(zw[0])) + ", " + fmt(std::abs(zw[1])) + "), m = " +
            std::to_string(worst_at % 4 + 1) + "; witness polynomial certifies excess " + fmt(certified[worst_at]) + "; " +
            std::to_string(over) + "/100 cases above 1e-6; P = " + std::to_string(kConvergencePhases) + ", 128 torus samples");
  }
}

/// Lower sets: vertex cubes, lower hull, and phi(xi) = phi(xi^+).
void lower_sets(SuiteResult& r, const CheckOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> dim(1, 3), count(2, 5), coin(0, 1);
  std::size_t discrepancies = 0, lower = 0, missing_witness = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = static_cast<std::size_t>(dim(rng));
    Body s = random_body(rng, n, static_cast<std::size_t>(count(rng)), 6);
    if (coin(rng)) s = lower_hull(s);
    const bool by_cubes = is_lower_set(s);
    const bool by_hull = same_vertices(s, lower_hull(s));
    bool by_support = true;
    for (int t = 0; t < 1000 && by_support; ++t) {
      const Point xi = random_direction(rng, n, 6);
      by_support = support(s, xi) == support(s, positive_part(xi));
    }
    if (by_cubes != by_hull || by_cubes != by_support) {
      ++discrepancies;
      r.table.push_back("discrepancy on " + to_json(s).dump());
    }
    if (by_cubes) {
      ++lower;
      continue;
    }
    const auto w = lower_set_witness(s);
    if (!w || support(s, *w) == support(s, positive_part(*w))) ++missing_witness;
  }
  add(r, "three lower-set criteria agree", discrepancies == 0,
      std::to_string(discrepancies) + " discrepancies over 200 bodies (" + std::to_string(lower) + " lower)");
  add(r, "witness xi for every non-lower body", missing_witness == 0, std::to_string(missing_witness) + " missing");
}

/// Gamma-hulls contain S, keep the support on the generators of Gamma and
/// shrink as Gamma grows.
void gamma_hull_suite(SuiteResult& r, const CheckOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> dim(2, 3), count(2, 4), extra(1, 3);
  std::size_t contain_fail = 0, support_fail = 0, monotone_fail = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = static_cast<std::size_t>(dim(rng));
    const Body s = random_body(rng, n, static_cast<std::size_t>(count(rng)), 6);
    const PolyCone g = random_cone(rng, n, static_cast<std::size_t>(extra(rng)));
    const Body h = gamma_hull(s, g);
    if (!hull_contains_all(h, s.vertices())) ++contain_fail;
    for (const auto& gen : g.generators())
      if (support(h, gen) != support(s, gen)) {
        ++support_fail;
        break;
      }
    auto gens = g.generators();
    gens.push_back(random_direction(rng, n, 3));
    const Body h2 = gamma_hull(s, PolyCone::from_generators(n, std::move(gens)));
    if (!hull_contains_all(h, h2.vertices())) ++monotone_fail;
  }
  add(r, "hull contains S", contain_fail == 0, std::to_string(contain_fail) + " failures over 100 pairs");
  add(r, "support equality on generators", support_fail == 0, std::to_string(support_fail) + " failures");
  add(r, "larger cone gives smaller hull", monotone_fail == 0, std::to_string(monotone_fail) + " failures");
}

/// The segment in direction (1, sqrt 2) has no nonzero lattice points.
void surd_gap(SuiteResult& r, const CheckOptions&) {
  const SurdSegment seg;
  bool only_zero = true, bound_zero = true;
  const ComplexPoint z{std::numbers::e, std::numbers::e};
  for (long m = 1; m <= 50; ++m) {
    const auto pts = seg.lattice_points(m);
    only_zero = only_zero && pts.size() == 1 && pts[0] == MultiIndex{0, 0};
    bound_zero = bound_zero && seg.monomial_torus_bound(m, z) == 0.0;
  }
  add(r, "lattice points of mS are {0} for m <= 50", only_zero);
  add(r, "log Phi bound is 0 at (e, e)", bound_zero);
  const double h = seg.hs_eval(z);
  const double expected = 1 + std::sqrt(2.0);
  add(r, "H_S(e, e) = 1 + sqrt 2", std::abs(h - expected) <= 1e-9, "H_S = " + fmt(h) + ", gap " + fmt(h) + " > 0");
}

/// Support identity for pullback bodies and membership of composed
/// polynomials.
void pullback_support(SuiteResult& r, const CheckOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> dim(1, 3), count(1, 4);
  std::size_t identity_fail = 0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = static_cast<std::size_t>(dim(rng)), l = static_cast<std::size_t>(dim(rng));
    const Body s = random_body(rng, n, static_cast<std::size_t>(count(rng)), 6);
    std::vector<Polytope> comps;
    for (std::size_t j = 0; j < n; ++j) comps.push_back(random_component(rng, l));
    const Body sp = pullback_body(s, comps);
    for (int t = 0; t < 200; ++t) {
      const Point xi = random_rational_direction(rng, l);
      Point inner(n);
      for (std::size_t j = 0; j < n; ++j) inner[j] = support(comps[j], xi);
      if (support(sp, xi) != support(s, inner)) {
        ++identity_fail;
        break;
      }
    }
  }
  add(r, "support identity at 200 rational directions", identity_fail == 0, std::to_string(identity_fail) + " of 50 instances fail");

  std::size_t member_fail = 0, degree_fail = 0;
  std::uniform_int_distribution<int> small(1, 2), deg(0, 2), terms(1, 3);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = static_cast<std::size_t>(small(rng)), l = static_cast<std::size_t>(small(rng));
    const Body s = random_body(rng, n, static_cast<std::size_t>(count(rng)), 4);
    auto pts = lattice_points(s, 3);
    std::shuffle(pts.begin(), pts.end(), rng);
    SparsePoly p(n);
    for (std::size_t t = 0; t < std::min<std::size_t>(pts.size(), 6); ++t) p.add(pts[t], random_coefficient(rng));
    if (p.is_zero()) p.add(MultiIndex(n, 0), 1.0);
    PolyMap f{l, {}};
    for (std::size_t j = 0; j < n; ++j) {
      SparsePoly c(l);
      const int nt = terms(rng);
      for (int t = 0; t < nt; ++t) {
        MultiIndex e(l);
        for (auto& v : e) v = deg(rng);
        c.add(std::move(e), random_coefficient(rng));
      }
      if (c.is_zero()) c.add(MultiIndex(l, 1), 1.0);
      f.components.push_back(std::move(c));
    }
    const Body sp = pullback_body(s, f);
    const SparsePoly q = pullback_poly(f, p);
    if (!is_member(q, sp, 3)) ++member_fail;
    const auto dq = s_degree(q, sp), dp = s_degree(p, s);
    if (!dq || !dp || *dq > *dp) ++degree_fail;
  }
  add(r, "pulled-back polynomials stay in degree 3", member_fail == 0, std::to_string(member_fail) + " of 50 compositions fail");
  add(r, "S-degree does not increase under pullback", degree_fail == 0, std::to_string(degree_fail) + " of 50 compositions fail");
}

/// The lens B_1(e_1) ∩ B_1(e_2): H_S vanishes on the axes and its
/// sublevel sets are not convex.
void lens_axes(SuiteResult& r, const CheckOptions& opt) {
  const Body s = lens_surrogate(128);
  add(r, "lens surrogate has 256 vertices", s.vertices().size() == 256 && extreme_points(s).size() == 256,
      std::to_string(s.vertices().size()) + " vertices");
  const Body s0 = slice_body(s, {0}), s1 = slice_body(s, {1});
  const bool slices_zero = s0.vertices() == std::vector<Point>{zero_point(1)} && s1.vertices() == std::vector<Point>{zero_point(1)};
  std::mt19937_64 rng(opt.seed);
  bool axes_zero = true;
  for (int t = 0; t < 200; ++t) {
    const Complex w = random_point(rng, 1, -3.0, 6.0)[0];
    axes_zero = axes_zero && hs_eval(s, {w, 0}) == 0.0 && hs_eval(s, {0, w}) == 0.0;
  }
  add(r, "H_S vanishes on both axes", slices_zero && axes_zero, "slice bodies are {0}");

  const double t = 1.0;
  double found = 0;
  for (double radius = 1.5; radius <= 1e6 && found == 0; radius *= 1.5) {
    const ComplexPoint z1{radius, 0}, z2{0, radius}, mid{radius / 2, radius / 2};
    if (hs_eval(s, z1) < t && hs_eval(s, z2) < t && hs_eval(s, mid) >= t) found = radius;
  }
  const ComplexPoint z2{0, found}, mid{found / 2, found / 2};
  add(r, "non-convex sublevel set {H_S < 1}", found > 0,
      "(R,0) and (0,R) with R = " + fmt(found) + " lie in it, midpoint has H_S = " + fmt(found > 0 ? hs_eval(s, mid) : 0.0));
  const double lp = found > 0 ? hs_log_plus(s, z2) : 0.0;
  add(r, "lens: H_S differs from phi_S(Log+) at the witness", found > 0 && hs_eval(s, z2) == 0.0 && lp > 0,
      "H_S = 0, phi_S(Log+ z) = " + fmt(lp));
  const Body sig = standard_simplex(2);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    auto z = random_point(rng, 2, -3.0, 3.0);
    if (i % 10 == 1) z[0] = 0;
    if (i % 10 == 2) z[1] = 0;
    worst = std::max(worst, std::abs(hs_eval(sig, z) - hs_log_plus(sig, z)));
  }
  add(r, "simplex: H_S = phi_S(Log+) at 1000 points", worst <= 1e-12, "max difference " + fmt(worst));
}

/// One variable: S = [0, 1], K the 64th roots of unity, P = 64.
void extremal_1d(SuiteResult& r, const CheckOptions& opt) {
  const Body s(1, {zero_point(1), make_point({1})});
  const auto k = torus_samples({64});
  const std::size_t phases = 64;
  const double c = std::cos(std::numbers::pi / static_cast<double>(phases));
  const auto at2 = phi_m(s, k, 3, {Complex(2, 0)}, phases);
  const double lo = std::cbrt(8 * c), hi = std::cbrt(8 / c);
  add(r, "Phi_3(2) within the phase band of 2", at2.solved() && at2.value >= lo && at2.value <= hi && std::abs(at2.value / 2 - 1) <= 0.002,
      "value " + fmt(at2.value) + " in [" + fmt(lo) + ", " + fmt(hi) + "]");
  const auto half = phi_m(s, k, 3, {Complex(0.5, 0)}, phases);
  add(r, "Phi_3(1/2) within 2% of 1", half.solved() && std::abs(half.value - 1) <= 0.02, "value " + fmt(half.value));
  std::mt19937_64 rng(opt.seed);
  std::size_t fails = 0;
  for (int i = 0; i < 10; ++i) {
    const auto z = random_point(rng, 1, std::log(0.5), std::log(3.0));
    const auto rep = fekete_check(s, k, {{1, 1}, {1, 2}, {2, 2}}, z, phases);
    if (!rep.all_hold) ++fails;
  }
  add(r, "Fekete inequality for (1,1), (1,2), (2,2)", fails == 0, std::to_string(fails) + " of 10 points fail");
}

}  // namespace checks

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> list{
      {"cone-integrals", 1, "cone integrals of z_1 on the quadrilateral", 5, checks::cone_integrals},
      {"mass", 2, "Monge-Ampere total mass", 5, checks::mass_identity},
      {"torus", 3, "convergence on the torus", 60, checks::torus_convergence},
      {"lower-sets", 4, "lower-set equivalences", 30, checks::lower_sets},
      {"gamma-hull", 5, "Gamma-hulls", 30, checks::gamma_hull_suite},
      {"surd-gap", 6, "segment with irrational slope", 5, checks::surd_gap},
      {"pullback", 7, "pullback bodies", 30, checks::pullback_support},
      {"lens", 8, "lens sublevel sets", 10, checks::lens_axes},
      {"extremal-1d", 9, "one-variable extremal LP", 30, checks::extremal_1d},
  };
  return list;
}

const SuiteInfo* find_suite(const std::string& name) {
  for (const auto& s : suites())
    if (s.name == name) return &s;
  return nullptr;
}

SuiteResult run_suite(const SuiteInfo& info, const CheckOptions& opt) {
  SuiteResult r;
  r.suite = info.name;
  r.title = info.title;
  r.budget = info.budget;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    info.body(r, opt);
  } catch (const std::exception& e) {
    checks::add(r, "no exception", false, e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  checks::add(r, "runtime", r.seconds < info.budget, checks::fmt(r.seconds) + " s (budget " + checks::fmt(info.budget) + " s)");
  return r;
}

std::string render(const SuiteResult& r) {
  std::ostringstream out;
  out << "suite " << r.suite << ": " << r.title << "\n";
  for (const auto& l : r.lines) {
    out << "  [" << (l.pass ? "PASS" : "FAIL") << "] " << l.name;
    if (!l.detail.empty()) out << ": " << l.detail;
    out << "\n";
  }
  for (const auto& t : r.table) out << "    " << t << "\n";
  out << (r.passed() ? "PASS" : "FAIL") << " " << r.suite << "\n";
  return out.str();
}

}  // namespace pluripot
