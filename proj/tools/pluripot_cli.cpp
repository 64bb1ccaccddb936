// Command-line front end. Exit codes: 0 success, 1 failed check,
// 2 malformed input, 3 internal failure.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pluripot/pluripot.hpp"

using namespace pluripot;

namespace {

struct Range {
  double lo = 0, hi = 0;
  std::size_t count = 1;

  double at(std::size_t i) const {
    return count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
};

Range parse_range(const std::string& text) {
  std::istringstream in(text);
  Range r;
  char c1 = 0, c2 = 0;
  if (!(in >> r.lo >> c1 >> r.hi >> c2 >> r.count) || c1 != ':' || c2 != ':' || r.count == 0 || !in.eof())
    throw ParseError("range \"" + text + "\" is not of the form lo:hi:count");
  return r;
}

std::vector<double> parse_numbers(const std::string& text) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError("\"" + text + "\" is not a comma-separated list of numbers");
    }
  }
  return out;
}

ComplexPoint parse_complex_point(const std::string& text, std::size_t n) {
  const auto v = parse_numbers(text);
  if (v.size() != 2 * n) throw ParseError("point \"" + text + "\" needs " + std::to_string(2 * n) + " numbers re_1,im_1,...");
  ComplexPoint z;
  for (std::size_t i = 0; i < n; ++i) z.emplace_back(v[2 * i], v[2 * i + 1]);
  return z;
}

std::vector<ComplexPoint> read_points_file(const std::string& path, std::size_t n) {
  const Json j = read_json_file(path);
  if (!j.is_array()) throw ParseError(path + ": expected an array of points [re_1, im_1, ...]");
  std::vector<ComplexPoint> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 * n) throw ParseError(path + ": point " + p.dump() + " needs " + std::to_string(2 * n) + " numbers");
    ComplexPoint z;
    for (std::size_t i = 0; i < n; ++i) z.emplace_back(p[2 * i].get<double>(), p[2 * i + 1].get<double>());
    out.push_back(std::move(z));
  }
  return out;
}

/// Tensor grid: every coordinate runs over re x im.
std::vector<ComplexPoint> tensor_grid(std::size_t n, const Range& re, const Range& im) {
  std::vector<Complex> axis;
  for (std::size_t i = 0; i < re.count; ++i)
    for (std::size_t k = 0; k < im.count; ++k) axis.emplace_back(re.at(i), im.at(k));
  std::vector<ComplexPoint> out;
  MultiIndex hi(n, static_cast<long>(axis.size()) - 1);
  for_each_in_box(MultiIndex(n, 0), hi, [&](const MultiIndex& idx) {
    ComplexPoint z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = axis[static_cast<std::size_t>(idx[i])];
    out.push_back(std::move(z));
  });
  return out;
}

MultiIndex parse_multi_index(const std::string& text, std::size_t n) {
  MultiIndex a;
  for (double v : parse_numbers(text)) {
    if (v < 0 || v != std::floor(v)) throw ParseError("multi-index \"" + text + "\" must list nonnegative integers");
    a.push_back(static_cast<long>(v));
  }
  if (a.size() != n) throw ParseError("multi-index \"" + text + "\" needs " + std::to_string(n) + " entries");
  return a;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ParseError("cannot write " + path);
    }
  }
  std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void emit(const std::string& path, const Json& j) { Output(path).get() << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pluripot: support functions, polynomial spaces and extremal functions of convex bodies"};
  app.require_subcommand(1);

  std::string body_path, out_path, samples_path, z_file, cone_path, map_path, norm = "l2", method = "closed", alpha_text,
                                                                               re_text = "-2:2:5", im_text = "0:0:1", points_path;
  std::vector<std::string> z_texts, torus_text;
  long m = 1;
  std::size_t phases = 64, workers = 1;
  double gamma_a = -1;
  std::vector<double> radii;
  std::uint64_t seed = CheckOptions{}.seed;
  std::string suite_name;

  auto body_opt = [&](CLI::App* sub) { sub->add_option("--body", body_path, "body JSON")->required()->check(CLI::ExistingFile); };
  auto out_opt = [&](CLI::App* sub) { sub->add_option("-o,--out", out_path, "output file (default stdout)"); };

  auto* hs = app.add_subcommand("hs-eval", "H_S on a grid or point list, as CSV");
  body_opt(hs);
  out_opt(hs);
  hs->add_option("--re", re_text, "real-part range lo:hi:count for every coordinate");
  hs->add_option("--im", im_text, "imaginary-part range lo:hi:count for every coordinate");
  hs->add_option("--points", points_path, "JSON array of points [re_1, im_1, ...] instead of a grid")->check(CLI::ExistingFile);
  hs->add_option("--workers", workers, "worker threads")->check(CLI::Range(1, 256));

  auto* lat = app.add_subcommand("lattice", "lattice points of mS");
  body_opt(lat);
  out_opt(lat);
  lat->add_option("-m", m, "degree")->required()->check(CLI::Range(1L, 100000L));

  auto* dm = app.add_subcommand("dm", "distance from mS to the excluded lattice points");
  body_opt(dm);
  out_opt(dm);
  dm->add_option("-m", m, "degree")->required()->check(CLI::Range(1L, 100000L));
  dm->add_option("--norm", norm, "l1 or l2")->check(CLI::IsMember({"l1", "l2"}));

  auto* phi = app.add_subcommand("phi", "LP extremal function Phi_m on a sample set, as CSV");
  body_opt(phi);
  out_opt(phi);
  phi->add_option("--samples", samples_path, "sample set JSON")->check(CLI::ExistingFile);
  phi->add_option("--torus", torus_text, "torus grid counts, e.g. --torus 16 8")->expected(1, -1);
  phi->add_option("-m", m, "degree")->required()->check(CLI::Range(1L, 1000L));
  phi->add_option("--phases", phases, "phase count P")->check(CLI::Range(8, 1 << 20));
  phi->add_option("--z", z_texts, "evaluation point re_1,im_1,...; repeatable");
  phi->add_option("--z-file", z_file, "JSON array of evaluation points")->check(CLI::ExistingFile);
  phi->add_option("--workers", workers, "worker threads")->check(CLI::Range(1, 256));

  auto* mass = app.add_subcommand("mass", "Monge-Ampere total mass (2 pi)^n n! vol(S)");
  body_opt(mass);
  out_opt(mass);

  auto* l2 = app.add_subcommand("l2", "squared weighted L2 norm of z^alpha");
  body_opt(l2);
  out_opt(l2);
  l2->add_option("--alpha", alpha_text, "exponent, comma-separated")->required();
  l2->add_option("-m", m, "degree")->required()->check(CLI::Range(1L, 100000L));
  l2->add_option("--method", method, "closed (planar closed form) or quad")->check(CLI::IsMember({"closed", "quad"}));

  auto* hull = app.add_subcommand("hull", "Gamma-hull of S");
  body_opt(hull);
  out_opt(hull);
  hull->add_option("--cone", cone_path, "cone JSON (or array of cones)")->check(CLI::ExistingFile);
  hull->add_option("--gamma-a", gamma_a, "use the circular cone Gamma_a for this a (planar bodies)");
  hull->add_option("-m", m, "degree for --gamma-a")->check(CLI::Range(1L, 100000L));

  auto* lower = app.add_subcommand("lower", "lower hull and lower-set test");
  body_opt(lower);
  out_opt(lower);

  auto* pb = app.add_subcommand("pullback", "pullback body S' of S under a polynomial map");
  body_opt(pb);
  out_opt(pb);
  pb->add_option("--map", map_path, "map JSON")->required()->check(CLI::ExistingFile);
  pb->add_option("--probe", radii, "radii (> 1) for the f*H_S - H_S' probe");

  auto* chk = app.add_subcommand("check", "run an acceptance suite (or all)");
  std::string suite_help = "suite name: all";
  for (const auto& s : suites()) suite_help += ", " + s.name;
  chk->add_option("suite", suite_name, suite_help)->required();
  chk->add_option("--seed", seed, "seed for random instances");
  chk->add_option("--workers", workers, "worker threads")->check(CLI::Range(1, 256));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (chk->parsed()) {
      const CheckOptions opt{seed, workers};
      std::vector<const SuiteInfo*> run;
      if (suite_name == "all") {
        for (const auto& s : suites()) run.push_back(&s);
      } else if (const auto* s = find_suite(suite_name)) {
        run.push_back(s);
      } else {
        throw ParseError("unknown suite \"" + suite_name + "\" (" + suite_help + ")");
      }
      bool ok = true;
      for (const auto* s : run) {
        const auto r = run_suite(*s, opt);
        std::cout << render(r) << std::flush;
        ok = ok && r.passed();
      }
      return ok ? 0 : 1;
    }

    const Body s = body_from_json(read_json_file(body_path));
    const std::size_t n = s.dim();

    if (hs->parsed()) {
      const auto pts = points_path.empty() ? tensor_grid(n, parse_range(re_text), parse_range(im_text)) : read_points_file(points_path, n);
      std::vector<double> vals(pts.size());
      parallel_for(pts.size(), workers, [&](std::size_t i) { vals[i] = hs_eval(s, pts[i]); });
      Output out(out_path);
      auto& os = out.get();
      for (std::size_t i = 0; i < n; ++i) os << "re_" << i + 1 << ",im_" << i + 1 << ",";
      os << "H_S\n";
      for (std::size_t k = 0; k < pts.size(); ++k) {
        for (const auto& c : pts[k]) os << format_double(c.real()) << "," << format_double(c.imag()) << ",";
        os << format_double(vals[k]) << "\n";
      }
    } else if (lat->parsed()) {
      const auto pts = lattice_points(s, m);
      Json j;
      j["m"] = m;
      j["count"] = pts.size();
      j["points"] = pts;
      emit(out_path, j);
    } else if (dm->parsed()) {
      const Norm nm = norm == "l1" ? Norm::L1 : Norm::L2;
      const auto g = gap_distance(s, m, nm);
      Json j;
      j["m"] = m;
      j["norm"] = to_string(nm);
      if (nm == Norm::L1) {
        std::vector<Point> verts;
        for (const auto& v : extreme_points(s)) verts.push_back(Rational(m) * v);
        j["distance"] = to_json(l1_distance(verts, to_point(g.nearest)));
      } else {
        j["distance"] = json_double(g.distance);
      }
      j["nearest"] = g.nearest;
      j["candidates"] = g.candidates;
      emit(out_path, j);
    } else if (phi->parsed()) {
      WeightedSampleSet k;
      if (!samples_path.empty()) {
        k = samples_from_json(read_json_file(samples_path));
      } else if (!torus_text.empty()) {
        std::vector<std::size_t> counts;
        for (const auto& t : torus_text) {
          const auto v = parse_numbers(t);
          if (v.size() != 1 || v[0] < 1 || v[0] != std::floor(v[0])) throw ParseError("torus count \"" + t + "\" must be a positive integer");
          counts.push_back(static_cast<std::size_t>(v[0]));
        }
        if (counts.size() != n) throw ParseError("--torus needs " + std::to_string(n) + " counts");
        k = torus_samples(counts);
      } else {
        throw ParseError("phi: give --samples or --torus");
      }
      std::vector<ComplexPoint> zs;
      for (const auto& t : z_texts) zs.push_back(parse_complex_point(t, n));
      if (!z_file.empty())
        for (auto& z : read_points_file(z_file, n)) zs.push_back(std::move(z));
      if (zs.empty()) throw ParseError("phi: give at least one --z or --z-file");
      std::vector<PhiResult> res(zs.size());
      parallel_for(zs.size(), workers, [&](std::size_t i) { res[i] = phi_m(s, k, m, zs[i], phases); });
      Output out(out_path);
      auto& os = out.get();
      for (std::size_t i = 0; i < n; ++i) os << "re_" << i + 1 << ",im_" << i + 1 << ",";
      os << "m,value,lower_bound,upper_bound,basis_size,status\n";
      for (std::size_t i = 0; i < zs.size(); ++i) {
        for (const auto& c : zs[i]) os << format_double(c.real()) << "," << format_double(c.imag()) << ",";
        os << m << "," << format_double(res[i].value) << "," << format_double(res[i].lower_bound) << ","
           << format_double(res[i].value) << "," << res[i].basis_size << "," << to_string(res[i].status) << "\n";
      }
    } else if (mass->parsed()) {
      emit(out_path, to_json(ma_total_mass(s)));
    } else if (l2->parsed()) {
      const auto alpha = parse_multi_index(alpha_text, n);
      emit(out_path, to_json(monomial_l2_norm(s, alpha, m, method == "closed" ? L2Method::ClosedForm2D : L2Method::Quadrature)));
    } else if (hull->parsed()) {
      if (gamma_a >= 0) {
        const auto t = gap_cone_hull(s, m, gamma_a);
        if (!t.hull) throw ParseError("hull: --gamma-a needs a planar body");
        Json j = to_json(*t.hull);
        j["d_m"] = json_double(t.dm);
        j["cos_half_angle"] = json_double(t.cone.cos_half);
        emit(out_path, j);
      } else if (!cone_path.empty()) {
        const Json cj = read_json_file(cone_path);
        std::vector<PolyCone> cones;
        if (cj.is_array())
          for (const auto& c : cj) cones.push_back(cone_from_json(c));
        else
          cones.push_back(cone_from_json(cj));
        emit(out_path, to_json(gamma_hull(s, cones)));
      } else {
        throw ParseError("hull: give --cone or --gamma-a");
      }
    } else if (lower->parsed()) {
      Json j;
      j["is_lower"] = is_lower_set(s);
      j["lower_hull"] = to_json(lower_hull(s));
      if (const auto w = lower_set_witness(s)) j["witness"] = to_json(*w);
      emit(out_path, j);
    } else if (pb->parsed()) {
      const PolyMap f = polymap_from_json(read_json_file(map_path));
      if (f.target_dim() != n) throw ParseError("pullback: map has " + std::to_string(f.target_dim()) + " components, body has dimension " + std::to_string(n));
      Json j = to_json(pullback_body(s, f));
      if (!radii.empty()) {
        const auto rep = pullback_exactness_probe(f, s, radii);
        Json rows = Json::array();
        for (const auto& r : rep.rows) rows.push_back({{"radius", json_double(r.radius)}, {"max_diff", json_double(r.max_diff)}, {"min_diff", json_double(r.min_diff)}});
        j["probe"] = {{"rows", rows}, {"slope", json_double(rep.slope)}, {"bounded_trend", rep.bounded_trend}, {"warnings", rep.warnings}};
      }
      emit(out_path, j);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\ninput:";
    for (int i = 1; i < argc; ++i) std::cerr << " " << argv[i];
    std::cerr << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
