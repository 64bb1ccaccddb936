#pragma once

// JSON and CSV formats. Rationals are written as exact "p/q" strings and
// floats with 12 significant digits, so output is byte-stable.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cone.hpp"
#include "extremal.hpp"
#include "massint.hpp"
#include "polyspace.hpp"
#include "polytope.hpp"
#include "pullback.hpp"
#include "rational.hpp"

namespace pluripot {

using Json = nlohmann::ordered_json;

/// Malformed input. The message names the offending field.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

/// x rounded to 12 significant digits; non-finite values become strings.
inline Json json_double(double x) {
  if (!std::isfinite(x)) return format_double(x);
  return std::stod(format_double(x));
}

namespace detail {

inline const Json& field(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object()) throw ParseError(what + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(what + ": missing field \"" + key + "\"");
  return *it;
}

inline std::size_t dim_field(const Json& j, const std::string& what) {
  const auto& d = field(j, "dim", what);
  if (!d.is_number_integer() || d.get<long long>() <= 0) throw ParseError(what + ": \"dim\" must be a positive integer");
  return d.get<std::size_t>();
}

inline double number_or_inf(const Json& v, const std::string& what) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "inf" || s == "+inf" || s == "Infinity") return std::numeric_limits<double>::infinity();
    if (s == "-inf" || s == "-Infinity") return -std::numeric_limits<double>::infinity();
  }
  throw ParseError(what + ": expected a number, got " + v.dump());
}

}  // namespace detail

inline Json to_json(const Rational& r) { return r.get_str(); }

inline Rational rational_from_json(const Json& v, const std::string& what = "rational") {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(what + ": " + e.what());
    }
  }
  throw ParseError(what + ": expected \"p/q\" or an integer, got " + v.dump());
}

inline Json to_json(const Point& p) {
  Json a = Json::array();
  for (const auto& c : p) a.push_back(to_json(c));
  return a;
}

inline Point point_from_json(const Json& v, std::size_t n, const std::string& what) {
  if (!v.is_array() || v.size() != n) throw ParseError(what + ": expected an array of " + std::to_string(n) + " entries, got " + v.dump());
  Point p;
  for (const auto& c : v) p.push_back(rational_from_json(c, what));
  return p;
}

inline std::vector<Point> points_from_json(const Json& v, std::size_t n, const std::string& what) {
  if (!v.is_array()) throw ParseError(what + ": expected an array");
  std::vector<Point> out;
  for (const auto& p : v) out.push_back(point_from_json(p, n, what));
  return out;
}

inline Json to_json(const Polytope& s) {
  Json j;
  j["dim"] = s.dim();
  Json v = Json::array();
  for (const auto& p : s.vertices()) v.push_back(to_json(p));
  j["vertices"] = std::move(v);
  return j;
}

inline Body body_from_json(const Json& j) {
  const std::size_t n = detail::dim_field(j, "body");
  auto verts = points_from_json(detail::field(j, "vertices", "body"), n, "body vertex");
  try {
    return Body(n, std::move(verts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

inline Polytope polytope_from_json(const Json& j) {
  const std::size_t n = detail::dim_field(j, "polytope");
  auto verts = points_from_json(detail::field(j, "vertices", "polytope"), n, "polytope vertex");
  try {
    return Polytope(n, std::move(verts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

inline Json to_json(const PolyCone& g) {
  Json j;
  j["dim"] = g.dim();
  Json gen = Json::array(), ineq = Json::array();
  for (const auto& p : g.generators()) gen.push_back(to_json(p));
  for (const auto& p : g.inequalities()) ineq.push_back(to_json(p));
  if (!g.generators().empty()) j["generators"] = std::move(gen);
  if (!g.inequalities().empty()) j["inequalities"] = std::move(ineq);
  return j;
}

inline PolyCone cone_from_json(const Json& j) {
  const std::size_t n = detail::dim_field(j, "cone");
  std::vector<Point> gen, ineq;
  if (j.contains("generators")) gen = points_from_json(j["generators"], n, "cone generator");
  if (j.contains("inequalities")) ineq = points_from_json(j["inequalities"], n, "cone inequality");
  try {
    return PolyCone(n, std::move(gen), std::move(ineq));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

inline Json to_json(const SparsePoly& p) {
  Json j;
  j["dim"] = p.dim();
  Json terms = Json::array();
  for (const auto& [a, c] : p.terms()) {
    Json t;
    t["alpha"] = a;
    t["re"] = c.real();
    t["im"] = c.imag();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

inline SparsePoly poly_from_json(const Json& j) {
  const std::size_t n = detail::dim_field(j, "polynomial");
  const auto& terms = detail::field(j, "terms", "polynomial");
  if (!terms.is_array()) throw ParseError("polynomial: \"terms\" must be an array");
  SparsePoly p(n);
  for (const auto& t : terms) {
    const auto& a = detail::field(t, "alpha", "polynomial term");
    if (!a.is_array() || a.size() != n) throw ParseError("polynomial term: \"alpha\" must have " + std::to_string(n) + " entries, got " + a.dump());
    MultiIndex alpha;
    for (const auto& v : a) {
      if (!v.is_number_integer()) throw ParseError("polynomial term: non-integer exponent in " + a.dump());
      alpha.push_back(v.get<long>());
    }
    const double re = t.contains("re") ? detail::number_or_inf(t["re"], "polynomial term re") : 0.0;
    const double im = t.contains("im") ? detail::number_or_inf(t["im"], "polynomial term im") : 0.0;
    if (!std::isfinite(re) || !std::isfinite(im)) throw ParseError("polynomial term: non-finite coefficient");
    try {
      p.add(std::move(alpha), Complex(re, im));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return p;
}

inline Json to_json(const PolyMap& f) {
  Json j;
  j["source_dim"] = f.source_dim;
  Json c = Json::array();
  for (const auto& p : f.components) c.push_back(to_json(p));
  j["components"] = std::move(c);
  return j;
}

inline PolyMap polymap_from_json(const Json& j) {
  const auto& l = detail::field(j, "source_dim", "map");
  if (!l.is_number_integer() || l.get<long long>() <= 0) throw ParseError("map: \"source_dim\" must be a positive integer");
  const auto& comps = detail::field(j, "components", "map");
  if (!comps.is_array()) throw ParseError("map: \"components\" must be an array");
  PolyMap f{l.get<std::size_t>(), {}};
  for (const auto& c : comps) f.components.push_back(poly_from_json(c));
  try {
    f.check();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return f;
}

/// Each point is the flat list [re_1, im_1, ..., re_n, im_n]; a weight may
/// be the string "inf".
inline Json to_json(const WeightedSampleSet& k) {
  Json j;
  Json pts = Json::array(), w = Json::array();
  for (const auto& p : k.points) {
    Json a = Json::array();
    for (const auto& c : p) {
      a.push_back(c.real());
      a.push_back(c.imag());
    }
    pts.push_back(std::move(a));
  }
  for (double q : k.weights) {
    if (std::isfinite(q))
      w.push_back(q);
    else
      w.push_back(format_double(q));
  }
  j["points"] = std::move(pts);
  j["weights"] = std::move(w);
  return j;
}

inline WeightedSampleSet samples_from_json(const Json& j) {
  const auto& pts = detail::field(j, "points", "sample set");
  if (!pts.is_array()) throw ParseError("sample set: \"points\" must be an array");
  WeightedSampleSet k;
  for (const auto& p : pts) {
    if (!p.is_array() || p.empty() || p.size() % 2) throw ParseError("sample set: point must be [re_1, im_1, ...], got " + p.dump());
    ComplexPoint z;
    for (std::size_t i = 0; i < p.size(); i += 2)
      z.emplace_back(detail::number_or_inf(p[i], "sample point"), detail::number_or_inf(p[i + 1], "sample point"));
    k.points.push_back(std::move(z));
  }
  if (j.contains("weights")) {
    const auto& w = j["weights"];
    if (!w.is_array()) throw ParseError("sample set: \"weights\" must be an array");
    for (const auto& q : w) k.weights.push_back(detail::number_or_inf(q, "sample weight"));
  } else {
    k.weights.assign(k.points.size(), 0.0);
  }
  try {
    k.check();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return k;
}

inline Json to_json(const MassReport& r) {
  Json j;
  j["dim"] = r.dim;
  j["volume"] = to_json(r.volume);
  j["factor"] = to_json(r.factor);
  j["formula"] = r.formula();
  j["value"] = json_double(r.value);
  j["exact"] = r.exact;
  return j;
}

inline Json to_json(const L2Result& r) {
  Json j;
  if (r.infinite)
    j["value"] = "infinite";
  else
    j["value"] = json_double(r.value);
  j["method"] = to_string(r.method);
  j["error_bound"] = json_double(r.error_bound);
  if (r.rational_factor) j["rational_factor"] = to_json(*r.rational_factor);
  Json terms = Json::array();
  for (const auto& t : r.terms) {
    Json c;
    c["vertex"] = to_json(t.vertex);
    c["ray1"] = to_json(t.ray1);
    c["ray2"] = to_json(t.ray2);
    c["value"] = to_json(t.value);
    terms.push_back(std::move(c));
  }
  if (!r.terms.empty()) j["terms"] = std::move(terms);
  Json p;
  p["gap"] = json_double(r.gap);
  p["box_half_width"] = json_double(r.box_half_width);
  p["tail_bound"] = json_double(r.tail_bound);
  p["evals"] = r.evals;
  p["converged"] = r.converged;
  j["parameters"] = std::move(p);
  return j;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace pluripot
