// attainment-lab - attainment diagnostics for second-order cone programs
// Copyright 2026 attainment-lab contributors
// Licensed under Apache 2.0

#pragma once

#include <cmath>
#include <cstddef>
#include <optional>

#include "attainment/canonical.hpp"
#include "attainment/conic_problem.hpp"

namespace attainment {

// max <objective, y> subject to adjoint*y = rhs and y in cone.
// The second-order cone is self-dual, so the cone is copied from the primal.
struct DualProblem {
  Vec objective;        // the primal b
  Mat adjoint;          // A^T, mapping R^m -> R^n
  Vec rhs;              // the primal c
  SecondOrderCone cone; // same cone as the primal constraint

  friend bool operator==(const DualProblem&, const DualProblem&) = default;
};

inline DualProblem dual_build(const ConicProblem& problem) {
  return DualProblem{problem.constraint.b, transpose(problem.constraint.A),
                     problem.c, problem.constraint.cone};
}

enum class DualStatus { Infeasible, Unique, Interval };

struct DualSolution {
  DualStatus status = DualStatus::Infeasible;
  std::optional<Vec> point;     // the maximizing feasible point
  std::optional<double> value;  // <objective, point>
  // For Interval: the free first coordinate ranges over [y1_lo, y1_hi].
  double y1_lo = 0.0;
  double y1_hi = 0.0;

  friend bool operator==(const DualSolution&, const DualSolution&) = default;
};

/// Closed-form solve of the dual of a canonical instance.
///
/// For the canonical operator the equality A^T y = c pins every coordinate of
/// y except the first: y_m = c_1 and y_j = c_j for j = 2..n (m = n+1).  The
/// remaining last-dominant cone condition c_1 >= sqrt(y_1^2 + c_2^2 + ... +
/// c_n^2) is a one-variable feasibility test with discriminant
/// disc = c_1^2 - (c_2^2 + ... + c_n^2):
///   disc < 0 (or c_1 < 0) -> infeasible;
///   disc = 0              -> the unique point with y_1 = 0;
///   disc > 0              -> y_1 in [-sqrt(disc), sqrt(disc)]; the dual
///                            objective -rho*y_1 is maximized at the left end.
inline DualSolution dual_solve_canonical(const DualProblem& dual,
                                         double tol = 1e-12) {
  const Mat A = transpose(dual.adjoint);
  if (!is_canonical_operator(A) || dual.cone.dominant != Dominant::Last)
    throw UnsupportedError("dual_solve_canonical: non-canonical dual");
  const std::size_t n = A.cols;
  const std::size_t m = n + 1;
  for (std::size_t i = 1; i < m; ++i) {
    if (dual.objective[i] != 0.0)
      throw UnsupportedError("dual_solve_canonical: non-canonical dual objective");
  }
  const double rho = -dual.objective[0];

  const Vec& c = dual.rhs;
  const double c1 = c[0];
  double pinned_sq = 0.0;
  for (std::size_t j = 1; j < n; ++j) pinned_sq += c[j] * c[j];

  DualSolution sol;
  const double disc = c1 * c1 - pinned_sq;
  if (c1 < 0.0 || disc < -tol) {
    sol.status = DualStatus::Infeasible;
    return sol;
  }

  const double span = disc > 0.0 ? std::sqrt(disc) : 0.0;
  Vec y(m, 0.0);
  for (std::size_t j = 1; j < n; ++j) y[j] = c[j];
  y[m - 1] = c1;

  if (disc <= tol) {
    sol.status = DualStatus::Unique;
    y[0] = 0.0;
  } else {
    sol.status = DualStatus::Interval;
    sol.y1_lo = -span;
    sol.y1_hi = span;
    // <b, y> = -rho * y_1, maximized at the smallest feasible y_1.
    y[0] = rho > 0.0 ? -span : 0.0;
  }
  const double value = -rho * y[0];
  sol.value = value == 0.0 ? 0.0 : value;  // avoid negative zero in reports
  sol.point = std::move(y);
  return sol;
}

}  // namespace attainment
