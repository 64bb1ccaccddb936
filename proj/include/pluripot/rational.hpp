#pragma once

// Exact rational scalars and points.
//
// Rational is GMP's mpq_class. Every arithmetic result is canonicalized by
// GMP, so values are always in lowest terms with a positive denominator.

#include <gmpxx.h>

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pluripot {

using Rational = mpq_class;
using Point = std::vector<Rational>;

/// num/den in lowest terms. (mpq_class's two-argument constructor does not
/// canonicalize.)
inline Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  if (den < 0) r = Rational(-num, -den);
  r.canonicalize();
  return r;
}

/// Parse "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.front() == ' ' || s.front() == '+')) s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  auto valid_int = [](std::string_view d) {
    if (!d.empty() && d.front() == '-') d.remove_prefix(1);
    if (d.empty()) return false;
    for (char c : d)
      if (c < '0' || c > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw std::invalid_argument("bad rational literal '" + s + "'");
    return Rational(mpz_class(s, 10));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-')
    throw std::invalid_argument("bad rational literal '" + s + "'");
  mpz_class d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational r(mpz_class(num, 10), d);
  r.canonicalize();
  return r;
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

/// Exact value of a finite double (every double is a dyadic rational).
inline Rational from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite double has no rational value");
  Rational r(x);
  r.canonicalize();
  return r;
}

inline Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline std::vector<double> to_double(std::span<const Rational> p) {
  std::vector<double> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i].get_d();
  return out;
}

inline Point from_double(std::span<const double> p) {
  Point out;
  out.reserve(p.size());
  for (double x : p) out.push_back(from_double(x));
  return out;
}

inline Point make_point(std::initializer_list<Rational> coords) { return Point(coords); }

inline Point zero_point(std::size_t n) { return Point(n, Rational(0)); }

inline Point operator-(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw std::invalid_argument("point difference: dimension mismatch");
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline Point operator+(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw std::invalid_argument("point sum: dimension mismatch");
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline Point operator*(const Rational& t, const Point& a) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = t * a[i];
  return out;
}

inline std::string to_string(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += to_string(p[i]);
  }
  return s + ")";
}

}  // namespace pluripot
