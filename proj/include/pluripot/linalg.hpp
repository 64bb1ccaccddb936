#pragma once

// Small dense linear algebra over an ordered field: row reduction, rank,
// null spaces and square solves. Exact for Rational; for double a fixed
// pivot threshold is used.

#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace pluripot {

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static bool is_negative(const Rational& x, const Rational& = 0) { return sgn(x) < 0; }
  static bool is_positive(const Rational& x, const Rational& = 0) { return sgn(x) > 0; }
  static Rational magnitude(const Rational& x) { return abs(x); }
  static constexpr bool exact = true;
};

template <>
struct ScalarTraits<double> {
  static constexpr double zero_tol = 1e-12;
  static bool is_zero(double x) { return std::abs(x) <= zero_tol; }
  static bool is_negative(double x, double tol = zero_tol) { return x < -tol; }
  static bool is_positive(double x, double tol = zero_tol) { return x > tol; }
  static double magnitude(double x) { return std::abs(x); }
  static constexpr bool exact = false;
};

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// In-place reduced row echelon form with pivots restricted to the first
/// ncols columns; any further columns are carried along. Returns the pivots.
template <class T>
std::vector<std::size_t> row_reduce(Matrix<T>& a, std::size_t ncols) {
  using Tr = ScalarTraits<T>;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
    std::size_t best = a.size();
    for (std::size_t r = row; r < a.size(); ++r) {
      if (Tr::is_zero(a[r][col])) continue;
      if (best == a.size() || (!Tr::exact && Tr::magnitude(a[r][col]) > Tr::magnitude(a[best][col])))
        best = r;
      if (Tr::exact) break;
    }
    if (best == a.size()) continue;
    std::swap(a[row], a[best]);
    const T inv = T(1) / a[row][col];
    for (std::size_t c = col; c < a[row].size(); ++c) a[row][c] *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || Tr::is_zero(a[r][col])) continue;
      const T f = a[r][col];
      for (std::size_t c = col; c < a[r].size(); ++c) a[r][c] -= f * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> a) {
  if (a.empty()) return 0;
  return row_reduce(a, a.front().size()).size();
}

/// Basis of {x : a x = 0}.
template <class T>
std::vector<std::vector<T>> nullspace(Matrix<T> a, std::size_t ncols) {
  std::vector<std::vector<T>> basis;
  if (a.empty()) {
    for (std::size_t j = 0; j < ncols; ++j) {
      std::vector<T> e(ncols, T(0));
      e[j] = T(1);
      basis.push_back(std::move(e));
    }
    return basis;
  }
  const auto pivots = row_reduce(a, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(ncols, T(0));
    v[free] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solve a x = b for square a; nullopt when singular.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, const std::vector<T>& b) {
  const std::size_t n = b.size();
  Matrix<T> aug(n, std::vector<T>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n] = b[i];
  }
  const auto pivots = row_reduce(aug, n);
  if (pivots.size() < n) return std::nullopt;
  std::vector<T> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

template <class T>
T determinant(Matrix<T> a) {
  using Tr = ScalarTraits<T>;
  const std::size_t n = a.size();
  T det = T(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t r = col; r < n; ++r) {
      if (Tr::is_zero(a[r][col])) continue;
      if (piv == n || (!Tr::exact && Tr::magnitude(a[r][col]) > Tr::magnitude(a[piv][col]))) piv = r;
      if (Tr::exact) break;
    }
    if (piv == n) return T(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (Tr::is_zero(a[r][col])) continue;
      const T f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

/// Dimension of the affine hull of a nonempty point list.
inline std::size_t affine_dimension(const std::vector<Point>& pts) {
  if (pts.size() <= 1) return 0;
  Matrix<Rational> diffs;
  diffs.reserve(pts.size() - 1);
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
  return rank(std::move(diffs));
}

/// Scale a nonzero rational vector so that its entries are coprime integers.
/// The sign is preserved.
inline Point primitive(const Point& v) {
  mpz_class l = 1;
  for (const auto& x : v)
    if (sgn(x) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(v.size());
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_class k = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), k.get_mpz_t());
    ints.push_back(std::move(k));
  }
  Point out(v.size());
  if (g == 0) return out;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(ints[i] / g);
  return out;
}

}  // namespace pluripot
