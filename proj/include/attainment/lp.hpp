// attainment-lab - attainment diagnostics for second-order cone programs
// Copyright 2026 attainment-lab contributors
// Licensed under Apache 2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "attainment/linalg.hpp"

namespace attainment {

enum class Sense { Ge, Le, Eq };

struct LpRow {
  Vec a;
  double rhs = 0.0;
  Sense sense = Sense::Ge;
};

// min <c, x> over free variables subject to the rows.  Variables are split
// internally (x = x+ - x-), rows get slack/surplus columns, and a two-phase
// dense simplex runs on the result.
struct LinearProgram {
  Vec c;
  std::vector<LpRow> rows;
};

enum class LpStatus { Optimal, Unbounded, Infeasible };

inline const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Unbounded: return "unbounded";
    case LpStatus::Infeasible: return "infeasible";
  }
  return "unknown";
}

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  std::optional<Vec> x_star;
  std::optional<double> value;
  // Unbounded: a unit feasible direction with <c, ray> < 0.
  std::optional<Vec> ray;
  // Infeasible: row multipliers y with sum_i y_i a_i = 0, y_i >= 0 on >= rows,
  // y_i <= 0 on <= rows, free on = rows, and sum_i y_i rhs_i > 0.
  std::optional<Vec> farkas;
};

namespace lp_detail {

constexpr double kPivotTol = 1e-11;
constexpr double kReducedCostTol = 1e-9;

struct Tableau {
  std::size_t m = 0;       // rows
  std::size_t nvars = 0;   // original variables
  std::size_t nslack = 0;  // slack/surplus columns
  std::size_t ncols = 0;   // structural + slack + artificial
  std::vector<double> t;   // m x (ncols + 1), last column is rhs
  std::vector<int> basis;  // per row, the basic column
  std::vector<double> row_sign;  // +/-1 applied to make rhs nonnegative

  double& at(std::size_t i, std::size_t j) { return t[i * (ncols + 1) + j]; }
  double at(std::size_t i, std::size_t j) const { return t[i * (ncols + 1) + j]; }
  std::size_t rhs_col() const { return ncols; }
  std::size_t art_begin() const { return 2 * nvars + nslack; }

  void pivot(std::size_t pr, std::size_t pc) {
    const double p = at(pr, pc);
    for (std::size_t j = 0; j <= ncols; ++j) at(pr, j) /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == pr) continue;
      const double f = at(i, pc);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= ncols; ++j) at(i, j) -= f * at(pr, j);
    }
    basis[pr] = static_cast<int>(pc);
  }
};

inline Tableau build_tableau(const LinearProgram& lp) {
  Tableau tb;
  tb.m = lp.rows.size();
  tb.nvars = lp.c.size();
  for (const auto& r : lp.rows)
    if (r.sense != Sense::Eq) ++tb.nslack;
  tb.ncols = 2 * tb.nvars + tb.nslack + tb.m;
  tb.t.assign(tb.m * (tb.ncols + 1), 0.0);
  tb.basis.assign(tb.m, -1);
  tb.row_sign.assign(tb.m, 1.0);

  std::size_t slack = 2 * tb.nvars;
  for (std::size_t i = 0; i < tb.m; ++i) {
    const LpRow& row = lp.rows[i];
    if (row.a.size() != tb.nvars)
      throw DimensionError("lp_solve: row dimension mismatch");
    require_finite(row.a, "lp_solve");
    if (!std::isfinite(row.rhs)) throw NumericalError("lp_solve: non-finite rhs");
    for (std::size_t j = 0; j < tb.nvars; ++j) {
      tb.at(i, j) = row.a[j];
      tb.at(i, tb.nvars + j) = -row.a[j];
    }
    if (row.sense == Sense::Ge) tb.at(i, slack++) = -1.0;
    else if (row.sense == Sense::Le) tb.at(i, slack++) = 1.0;
    tb.at(i, tb.rhs_col()) = row.rhs;
    if (tb.at(i, tb.rhs_col()) < 0.0) {
      tb.row_sign[i] = -1.0;
      for (std::size_t j = 0; j <= tb.ncols; ++j) tb.at(i, j) = -tb.at(i, j);
    }
    // artificial basis
    tb.at(i, tb.art_begin() + i) = 1.0;
    tb.basis[i] = static_cast<int>(tb.art_begin() + i);
  }
  return tb;
}

enum class StepResult { Optimal, Unbounded, Pivoted };

// One priced simplex step.  Dantzig entering rule with lowest-index
// tie-breaks; callers switch use_bland on after a stall threshold to
// guarantee termination on degenerate problems.
inline StepResult simplex_step(Tableau& tb, const std::vector<double>& cost,
                               bool allow_artificial, bool use_bland,
                               std::size_t* entering_out) {
  std::vector<double> y(tb.m, 0.0);
  for (std::size_t i = 0; i < tb.m; ++i) y[i] = cost[tb.basis[i]];

  int enter = -1;
  double best = -kReducedCostTol;
  for (std::size_t j = 0; j < tb.ncols; ++j) {
    if (!allow_artificial && j >= tb.art_begin()) break;
    bool is_basic = false;
    for (std::size_t i = 0; i < tb.m; ++i)
      if (tb.basis[i] == static_cast<int>(j)) { is_basic = true; break; }
    if (is_basic) continue;
    double rc = cost[j];
    for (std::size_t i = 0; i < tb.m; ++i) rc -= y[i] * tb.at(i, j);
    if (use_bland) {
      if (rc < -kReducedCostTol) { enter = static_cast<int>(j); break; }
    } else if (rc < best) {
      best = rc;
      enter = static_cast<int>(j);
    }
  }
  if (enter < 0) return StepResult::Optimal;
  if (entering_out) *entering_out = static_cast<std::size_t>(enter);

  int leave = -1;
  double best_ratio = std::numeric_limits<double>::infinity();
  double col_max = 0.0;
  for (std::size_t i = 0; i < tb.m; ++i) {
    const double e = tb.at(i, static_cast<std::size_t>(enter));
    col_max = std::max(col_max, e);
    if (e > kPivotTol) {
      const double ratio = tb.at(i, tb.rhs_col()) / e;
      if (ratio < best_ratio - 1e-12 ||
          (std::abs(ratio - best_ratio) <= 1e-12 &&
           (leave < 0 || tb.basis[i] < tb.basis[leave]))) {
        best_ratio = ratio;
        leave = static_cast<int>(i);
      }
    }
  }
  if (leave < 0) {
    if (col_max > kPivotTol * 1e-2)
      throw NumericalError("lp_solve: pivot breakdown, largest column entry " +
                           std::to_string(col_max) + " below pivot tolerance");
    return StepResult::Unbounded;
  }
  tb.pivot(static_cast<std::size_t>(leave), static_cast<std::size_t>(enter));
  return StepResult::Pivoted;
}

struct PhaseOutcome {
  StepResult result = StepResult::Optimal;
  std::size_t entering = 0;
};

inline PhaseOutcome run_phase(Tableau& tb, const std::vector<double>& cost,
                              bool allow_artificial) {
  const std::size_t stall_threshold = 50 * std::max<std::size_t>(tb.m, 1);
  const std::size_t cap = 10000 + 200 * tb.m;
  for (std::size_t it = 0; it < cap; ++it) {
    std::size_t entering = 0;
    const StepResult sr =
        simplex_step(tb, cost, allow_artificial, it >= stall_threshold, &entering);
    if (sr == StepResult::Optimal) return {StepResult::Optimal, 0};
    if (sr == StepResult::Unbounded) return {StepResult::Unbounded, entering};
  }
  throw NumericalError("lp_solve: iteration cap exceeded");
}

}  // namespace lp_detail

/// Two-phase dense simplex with exact status reporting and certificates.
inline LpOutcome lp_solve(const LinearProgram& lp) {
  using namespace lp_detail;
  if (lp.c.empty()) throw DimensionError("lp_solve: empty objective");
  require_finite(lp.c, "lp_solve");

  Tableau tb = build_tableau(lp);
  const std::size_t m = tb.m;
  const std::size_t n = tb.nvars;

  // Phase 1: minimize the sum of artificials.
  std::vector<double> cost1(tb.ncols, 0.0);
  for (std::size_t i = 0; i < m; ++i) cost1[tb.art_begin() + i] = 1.0;
  run_phase(tb, cost1, true);

  double ph1 = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    if (tb.basis[i] >= static_cast<int>(tb.art_begin()))
      ph1 += tb.at(i, tb.rhs_col());

  LpOutcome out;
  if (ph1 > 1e-9) {
    // Farkas multipliers from the artificial columns (they hold B^{-1}).
    Vec y(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      double yi = 0.0;
      for (std::size_t r = 0; r < m; ++r)
        if (tb.basis[r] >= static_cast<int>(tb.art_begin()))
          yi += tb.at(r, tb.art_begin() + i);
      y[i] = tb.row_sign[i] * yi;
    }
    out.status = LpStatus::Infeasible;
    out.farkas = std::move(y);
    return out;
  }

  // Drive leftover artificials out of the basis where possible.
  for (std::size_t i = 0; i < m; ++i) {
    if (tb.basis[i] < static_cast<int>(tb.art_begin())) continue;
    for (std::size_t j = 0; j < tb.art_begin(); ++j) {
      if (std::abs(tb.at(i, j)) > 1e-9) {
        tb.pivot(i, j);
        break;
      }
    }
  }

  // Phase 2 on the original costs.
  std::vector<double> cost2(tb.ncols, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    cost2[j] = lp.c[j];
    cost2[n + j] = -lp.c[j];
  }
  const PhaseOutcome ph2 = run_phase(tb, cost2, false);

  if (ph2.result == StepResult::Unbounded) {
    Vec d(tb.ncols, 0.0);
    d[ph2.entering] = 1.0;
    for (std::size_t i = 0; i < m; ++i)
      if (tb.basis[i] < static_cast<int>(tb.ncols))
        d[tb.basis[i]] = std::max(0.0, -tb.at(i, ph2.entering));
    Vec ray(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) ray[j] = d[j] - d[n + j];
    const double len = norm(ray);
    if (len > 0.0) ray = scale(1.0 / len, ray);
    out.status = LpStatus::Unbounded;
    out.ray = std::move(ray);
    return out;
  }

  Vec xs(tb.ncols, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    if (tb.basis[i] >= 0) xs[tb.basis[i]] = tb.at(i, tb.rhs_col());
  Vec x(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) x[j] = xs[j] - xs[n + j];
  out.status = LpStatus::Optimal;
  out.value = dot(lp.c, x);
  out.x_star = std::move(x);
  return out;
}

/// Independently re-checks the claims of an outcome against the program data.
inline bool lp_verify(const LinearProgram& lp, const LpOutcome& out,
                      double tol = 1e-9) {
  const auto row_residual = [&](const LpRow& row, const Vec& v) {
    return dot(row.a, v) - row.rhs;
  };
  switch (out.status) {
    case LpStatus::Optimal: {
      if (!out.x_star || !out.value) return false;
      for (const auto& row : lp.rows) {
        const double r = row_residual(row, *out.x_star);
        const double scale_tol = tol * std::max(1.0, std::abs(row.rhs));
        if (row.sense == Sense::Ge && r < -scale_tol) return false;
        if (row.sense == Sense::Le && r > scale_tol) return false;
        if (row.sense == Sense::Eq && std::abs(r) > scale_tol) return false;
      }
      return std::abs(*out.value - dot(lp.c, *out.x_star)) <=
             tol * std::max(1.0, std::abs(*out.value));
    }
    case LpStatus::Unbounded: {
      if (!out.ray) return false;
      const Vec& ray = *out.ray;
      if (norm(ray) <= tol) return false;
      for (const auto& row : lp.rows) {
        const double r = dot(row.a, ray);
        if (row.sense == Sense::Ge && r < -tol) return false;
        if (row.sense == Sense::Le && r > tol) return false;
        if (row.sense == Sense::Eq && std::abs(r) > tol) return false;
      }
      return dot(lp.c, ray) < -tol;
    }
    case LpStatus::Infeasible: {
      if (!out.farkas) return false;
      const Vec& y = *out.farkas;
      if (y.size() != lp.rows.size()) return false;
      double ymax = 0.0;
      for (double v : y) ymax = std::max(ymax, std::abs(v));
      if (ymax <= 0.0) return false;
      Vec combo(lp.c.size(), 0.0);
      double rhs_combo = 0.0;
      for (std::size_t i = 0; i < lp.rows.size(); ++i) {
        const auto& row = lp.rows[i];
        if (row.sense == Sense::Ge && y[i] < -tol * ymax) return false;
        if (row.sense == Sense::Le && y[i] > tol * ymax) return false;
        for (std::size_t j = 0; j < combo.size(); ++j) combo[j] += y[i] * row.a[j];
        rhs_combo += y[i] * row.rhs;
      }
      for (double v : combo)
        if (std::abs(v) > tol * ymax * 10.0) return false;
      return rhs_combo > tol * ymax;
    }
  }
  return false;
}

}  // namespace attainment
