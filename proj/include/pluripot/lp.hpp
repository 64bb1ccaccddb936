#pragma once

// Dense two-phase tableau simplex.
//
// The solver is templated on the scalar: with Rational it is exact and uses
// Bland's rule on degenerate stalls so it always terminates; with double it
// uses Dantzig pricing, a Harris-style ratio test and the same Bland
// fallback.

#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace pluripot {

enum class Sense { LessEqual, GreaterEqual, Equal };

enum class LPStatus { Optimal, Infeasible, Unbounded, IterationLimit };

inline const char* to_string(LPStatus s) {
  switch (s) {
    case LPStatus::Optimal: return "optimal";
    case LPStatus::Infeasible: return "infeasible";
    case LPStatus::Unbounded: return "unbounded";
    case LPStatus::IterationLimit: return "iteration-limit";
  }
  return "unknown";
}

/// Bounds on one variable. A missing lower bound means -inf, a missing upper
/// bound +inf. The default is x >= 0.
template <class T>
struct VariableBound {
  std::optional<T> lower = T(0);
  std::optional<T> upper;

  static VariableBound free() { return {std::nullopt, std::nullopt}; }
};

template <class T>
struct LPProblem {
  std::vector<T> objective;  // maximized unless `minimize`
  Matrix<T> rows;
  std::vector<Sense> senses;
  std::vector<T> rhs;
  std::vector<VariableBound<T>> bounds;  // empty: every variable is >= 0
  bool minimize = false;

  std::size_t num_vars() const { return objective.size(); }

  void add_row(std::vector<T> row, Sense s, T b) {
    rows.push_back(std::move(row));
    senses.push_back(s);
    rhs.push_back(std::move(b));
  }

  void validate() const {
    const std::size_t n = objective.size();
    if (rows.size() != senses.size() || rows.size() != rhs.size())
      throw std::invalid_argument("LPProblem: rows, senses and rhs differ in length");
    for (const auto& r : rows)
      if (r.size() != n) throw std::invalid_argument("LPProblem: row length differs from objective");
    if (!bounds.empty() && bounds.size() != n)
      throw std::invalid_argument("LPProblem: bounds length differs from objective");
    if constexpr (!ScalarTraits<T>::exact) {
      auto finite = [](double v) { return std::isfinite(v); };
      for (const auto& v : objective)
        if (!finite(v)) throw std::invalid_argument("LPProblem: non-finite objective entry");
      for (const auto& r : rows)
        for (const auto& v : r)
          if (!finite(v)) throw std::invalid_argument("LPProblem: non-finite constraint entry");
      for (const auto& v : rhs)
        if (!finite(v)) throw std::invalid_argument("LPProblem: non-finite right-hand side");
    }
  }
};

template <class T>
struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  T value = T(0);
  std::vector<T> x;      // primal solution in the caller's variables
  std::vector<T> duals;  // one multiplier per constraint row (value = rhs . duals under default bounds)
  std::size_t iterations = 0;

  bool optimal() const { return status == LPStatus::Optimal; }
};

struct LPOptions {
  std::size_t max_iterations = 200000;
  std::size_t degenerate_streak_for_bland = 50;
  double cost_tol = 1e-9;   // ignored for exact scalars
  double pivot_tol = 1e-9;  // ignored for exact scalars
};

namespace detail {

template <class T>
class Tableau {
 public:
  Tableau(Matrix<T> a, std::vector<T> b, std::vector<Sense> senses, const LPOptions& opt)
      : opt_(opt), m_(a.size()) {
    const std::size_t ns = a.empty() ? 0 : a.front().size();
    structural_ = ns;
    flipped_.assign(m_, false);
    for (std::size_t i = 0; i < m_; ++i) {
      if (b[i] < 0) {
        for (auto& v : a[i]) v = -v;
        b[i] = -b[i];
        flipped_[i] = true;
        if (senses[i] == Sense::LessEqual)
          senses[i] = Sense::GreaterEqual;
        else if (senses[i] == Sense::GreaterEqual)
          senses[i] = Sense::LessEqual;
      }
    }
    std::size_t slacks = 0, arts = 0;
    for (auto s : senses) {
      if (s != Sense::Equal) ++slacks;
      if (s != Sense::LessEqual) ++arts;
    }
    first_art_ = ns + slacks;
    ncols_ = ns + slacks + arts;
    t_.assign(m_, std::vector<T>(ncols_ + 1, T(0)));
    basis_.assign(m_, 0);
    identity_col_.assign(m_, 0);
    std::size_t sc = ns, ac = first_art_;
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < ns; ++j) t_[i][j] = a[i][j];
      t_[i][ncols_] = b[i];
      switch (senses[i]) {
        case Sense::LessEqual:
          t_[i][sc] = T(1);
          basis_[i] = identity_col_[i] = sc++;
          break;
        case Sense::GreaterEqual:
          t_[i][sc++] = T(-1);
          t_[i][ac] = T(1);
          basis_[i] = identity_col_[i] = ac++;
          break;
        case Sense::Equal:
          t_[i][ac] = T(1);
          basis_[i] = identity_col_[i] = ac++;
          break;
      }
    }
  }

  /// Returns the final status; phase-2 reduced costs stay in d_.
  LPStatus solve(const std::vector<T>& cost, std::size_t& iterations) {
    if (first_art_ < ncols_) {
      std::vector<T> c1(ncols_, T(0));
      for (std::size_t j = first_art_; j < ncols_; ++j) c1[j] = T(-1);
      const LPStatus s1 = run(c1, /*allow_art=*/true, iterations);
      if (s1 == LPStatus::IterationLimit) return s1;
      if (is_neg(d_[ncols_], feas_tol())) return LPStatus::Infeasible;
      drive_out_artificials();
    }
    std::vector<T> c2(ncols_, T(0));
    for (std::size_t j = 0; j < structural_; ++j) c2[j] = cost[j];
    return run(c2, /*allow_art=*/false, iterations);
  }

  std::vector<T> primal() const {
    std::vector<T> x(structural_, T(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < structural_) x[basis_[i]] = clamp_nonneg(t_[i][ncols_]);
    return x;
  }

  T objective_value() const { return d_[ncols_]; }

  std::vector<T> row_duals() const {
    std::vector<T> y(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      y[i] = d_[identity_col_[i]];
      if (flipped_[i]) y[i] = -y[i];
    }
    return y;
  }

 private:
  static constexpr bool kExact = ScalarTraits<T>::exact;

  T feas_tol() const {
    if constexpr (kExact) return T(0);
    else return T(1e-7);
  }
  bool is_neg(const T& v, const T& tol) const {
    if constexpr (kExact) return sgn(v) < 0;
    else return v < -tol;
  }
  bool is_pos(const T& v, const T& tol) const {
    if constexpr (kExact) return sgn(v) > 0;
    else return v > tol;
  }
  static T clamp_nonneg(const T& v) {
    if constexpr (kExact) return v;
    else return v < 0 ? T(0) : v;
  }
  T cost_tol() const {
    if constexpr (kExact) return T(0);
    else return T(opt_.cost_tol);
  }
  T pivot_tol() const {
    if constexpr (kExact) return T(0);
    else return T(opt_.pivot_tol);
  }

  void price(const std::vector<T>& c) {
    d_.assign(ncols_ + 1, T(0));
    for (std::size_t j = 0; j <= ncols_; ++j) {
      T s = T(0);
      for (std::size_t i = 0; i < m_; ++i) {
        const T& cb = c[basis_[i]];
        if (ScalarTraits<T>::is_zero(cb)) continue;
        s += cb * t_[i][j];
      }
      d_[j] = (j < ncols_) ? T(s - c[j]) : s;
    }
  }

  void pivot(std::size_t r, std::size_t e) {
    const T inv = T(1) / t_[r][e];
    auto& prow = t_[r];
    std::vector<std::size_t> nz;
    nz.reserve(ncols_ + 1);
    for (std::size_t j = 0; j <= ncols_; ++j) {
      if constexpr (kExact) {
        if (sgn(prow[j]) == 0) continue;
      } else {
        if (prow[j] == 0.0) continue;
      }
      prow[j] *= inv;
      nz.push_back(j);
    }
    prow[e] = T(1);
    auto eliminate = [&](std::vector<T>& row) {
      if (ScalarTraits<T>::is_zero(row[e])) return;
      const T f = row[e];
      for (std::size_t j : nz) row[j] -= f * prow[j];
      row[e] = T(0);
    };
    for (std::size_t i = 0; i < m_; ++i)
      if (i != r) eliminate(t_[i]);
    eliminate(d_);
    basis_[r] = e;
  }

  LPStatus run(const std::vector<T>& c, bool allow_art, std::size_t& iterations) {
    price(c);
    std::size_t streak = 0;
    bool bland = false;
    const T ctol = cost_tol(), ptol = pivot_tol();
    const std::size_t limit = allow_art || first_art_ == ncols_ ? ncols_ : first_art_;
    while (true) {
      if (iterations >= opt_.max_iterations) return LPStatus::IterationLimit;
      std::size_t e = ncols_;
      if (bland) {
        for (std::size_t j = 0; j < limit; ++j)
          if (is_neg(d_[j], ctol)) {
            e = j;
            break;
          }
      } else {
        T best = -ctol;
        for (std::size_t j = 0; j < limit; ++j)
          if (d_[j] < best) {
            best = d_[j];
            e = j;
          }
      }
      if (e == ncols_) return LPStatus::Optimal;

      std::size_t r = m_;
      if constexpr (kExact) {
        T best_ratio;
        for (std::size_t i = 0; i < m_; ++i) {
          if (sgn(t_[i][e]) <= 0) continue;
          T ratio = t_[i][ncols_] / t_[i][e];
          if (r == m_ || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[r])) {
            best_ratio = ratio;
            r = i;
          }
        }
      } else {
        double bound = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m_; ++i)
          if (t_[i][e] > ptol) bound = std::min(bound, (clamp_nonneg(t_[i][ncols_]) + 1e-9) / t_[i][e]);
        double best_piv = 0;
        for (std::size_t i = 0; i < m_; ++i) {
          if (t_[i][e] <= ptol) continue;
          const double ratio = clamp_nonneg(t_[i][ncols_]) / t_[i][e];
          if (ratio > bound) continue;
          const bool better = bland ? (r == m_ || basis_[i] < basis_[r]) : (t_[i][e] > best_piv);
          if (better) {
            best_piv = t_[i][e];
            r = i;
          }
        }
      }
      if (r == m_) return LPStatus::Unbounded;

      const bool degenerate = !is_pos(t_[r][ncols_], ptol);
      pivot(r, e);
      ++iterations;
      if (degenerate) {
        if (++streak >= opt_.degenerate_streak_for_bland) bland = true;
      } else {
        streak = 0;
        bland = false;
      }
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < first_art_) continue;
      std::size_t best = first_art_;
      for (std::size_t j = 0; j < first_art_; ++j) {
        if (ScalarTraits<T>::is_zero(t_[i][j])) continue;
        if constexpr (kExact) {
          best = j;
          break;
        } else {
          if (std::abs(t_[i][j]) > opt_.pivot_tol &&
              (best == first_art_ || std::abs(t_[i][j]) > std::abs(t_[i][best])))
            best = j;
        }
      }
      if (best < first_art_) pivot(i, best);
    }
  }

  LPOptions opt_;
  std::size_t m_ = 0, structural_ = 0, ncols_ = 0, first_art_ = 0;
  Matrix<T> t_;
  std::vector<T> d_;
  std::vector<std::size_t> basis_, identity_col_;
  std::vector<bool> flipped_;
};

}  // namespace detail

/// Solve an LP. Infeasible and unbounded problems are reported through the
/// status, never thrown; malformed problems throw std::invalid_argument.
template <class T>
LPResult<T> lp_solve(const LPProblem<T>& prob, const LPOptions& opt = {}) {
  prob.validate();
  const std::size_t n = prob.num_vars();

  // Map caller variables onto nonnegative structural columns.
  enum class Kind { Shift, Reflect, Split };
  struct Map {
    Kind kind;
    std::size_t col;
    T offset;
  };
  std::vector<Map> maps;
  maps.reserve(n);
  std::size_t ns = 0;
  std::vector<std::pair<std::size_t, T>> upper_rows;
  for (std::size_t j = 0; j < n; ++j) {
    const VariableBound<T> b = prob.bounds.empty() ? VariableBound<T>{} : prob.bounds[j];
    if (b.lower) {
      if (b.upper && *b.upper < *b.lower) {
        LPResult<T> res;
        res.status = LPStatus::Infeasible;
        return res;
      }
      maps.push_back({Kind::Shift, ns, *b.lower});
      if (b.upper) upper_rows.emplace_back(ns, T(*b.upper - *b.lower));
      ++ns;
    } else if (b.upper) {
      maps.push_back({Kind::Reflect, ns++, *b.upper});
    } else {
      maps.push_back({Kind::Split, ns, T(0)});
      ns += 2;
    }
  }

  Matrix<T> a;
  std::vector<T> rhs;
  std::vector<Sense> senses;
  a.reserve(prob.rows.size() + upper_rows.size());
  for (std::size_t i = 0; i < prob.rows.size(); ++i) {
    std::vector<T> row(ns, T(0));
    T b = prob.rhs[i];
    for (std::size_t j = 0; j < n; ++j) {
      const T& v = prob.rows[i][j];
      if (ScalarTraits<T>::is_zero(v) && ScalarTraits<T>::exact) continue;
      const Map& mp = maps[j];
      switch (mp.kind) {
        case Kind::Shift:
          row[mp.col] += v;
          b -= v * mp.offset;
          break;
        case Kind::Reflect:
          row[mp.col] -= v;
          b -= v * mp.offset;
          break;
        case Kind::Split:
          row[mp.col] += v;
          row[mp.col + 1] -= v;
          break;
      }
    }
    a.push_back(std::move(row));
    rhs.push_back(std::move(b));
    senses.push_back(prob.senses[i]);
  }
  for (const auto& [col, ub] : upper_rows) {
    std::vector<T> row(ns, T(0));
    row[col] = T(1);
    a.push_back(std::move(row));
    rhs.push_back(ub);
    senses.push_back(Sense::LessEqual);
  }

  std::vector<T> cost(ns, T(0));
  T constant = T(0);
  const T sign = prob.minimize ? T(-1) : T(1);
  for (std::size_t j = 0; j < n; ++j) {
    const T c = sign * prob.objective[j];
    const Map& mp = maps[j];
    switch (mp.kind) {
      case Kind::Shift:
        cost[mp.col] += c;
        constant += c * mp.offset;
        break;
      case Kind::Reflect:
        cost[mp.col] -= c;
        constant += c * mp.offset;
        break;
      case Kind::Split:
        cost[mp.col] += c;
        cost[mp.col + 1] -= c;
        break;
    }
  }

  LPResult<T> res;
  if (a.empty()) {
    // No constraints: optimal at the bounds iff no improving direction.
    for (std::size_t j = 0; j < ns; ++j)
      if (ScalarTraits<T>::is_positive(cost[j])) {
        res.status = LPStatus::Unbounded;
        return res;
      }
    res.status = LPStatus::Optimal;
    res.value = sign * constant;
    res.x.resize(n);
    for (std::size_t j = 0; j < n; ++j) res.x[j] = maps[j].offset;
    return res;
  }

  detail::Tableau<T> tab(std::move(a), std::move(rhs), std::move(senses), opt);
  res.status = tab.solve(cost, res.iterations);
  if (res.status != LPStatus::Optimal) return res;

  const auto xs = tab.primal();
  res.x.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Map& mp = maps[j];
    switch (mp.kind) {
      case Kind::Shift: res.x[j] = mp.offset + xs[mp.col]; break;
      case Kind::Reflect: res.x[j] = mp.offset - xs[mp.col]; break;
      case Kind::Split: res.x[j] = xs[mp.col] - xs[mp.col + 1]; break;
    }
  }
  res.value = sign * (tab.objective_value() + constant);
  auto y = tab.row_duals();
  y.resize(prob.rows.size());
  for (auto& v : y) v = sign * v;
  res.duals = std::move(y);
  return res;
}

}  // namespace pluripot
