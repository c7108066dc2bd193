// attainment-lab - attainment diagnostics for second-order cone programs
// Copyright 2026 attainment-lab contributors
// Licensed under Apache 2.0

#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "attainment/conic_problem.hpp"
#include "attainment/hyperboloid.hpp"
#include "attainment/robust.hpp"

namespace attainment {

// A conic problem together with the closed-form description of its feasible
// set.  Every built-in instance reduces to a hyperboloid set
// { x : x_1 >= sqrt(rho^2 + ||x_tail||^2) }, which is what makes exact
// recession-cone and copositivity analysis possible downstream.
//
// objective_offset is reporting-only: solvers minimize <c, x> and reports add
// the offset to the displayed value.
struct CanonicalInstance {
  ConicProblem problem;
  HyperboloidSet feasible_set;
  double objective_offset = 0.0;
  // A hyperboloid set has a curved boundary whenever rho > 0; for rho = 0 it
  // is the cone itself, which is polyhedral only in the plane (n = 2).
  bool polyhedral = false;

  friend bool operator==(const CanonicalInstance&, const CanonicalInstance&) = default;
};

/// The canonical linear operator sending x to (0, x_2, ..., x_n, x_1).
inline Mat canonical_operator(std::size_t n) {
  Mat A(n + 1, n);
  for (std::size_t j = 1; j < n; ++j) A.at(j, j) = 1.0;
  A.at(n, 0) = 1.0;
  return A;
}

inline bool is_canonical_operator(const Mat& A) {
  if (A.rows != A.cols + 1 || A.cols < 2) return false;
  const Mat want = canonical_operator(A.cols);
  return A == want;
}

/// Instance min <c, x> s.t. x_1 >= sqrt(rho^2 + ||x_tail||^2), encoded as the
/// conic constraint (rho, x_2, ..., x_n, x_1) in Q^{n+1} (last-dominant).
inline CanonicalInstance make_hyperboloid_instance(std::size_t n, double rho,
                                                   Vec c, double offset = 0.0) {
  if (n < 2) throw DimensionError("make_hyperboloid_instance: n must be >= 2");
  require_dim(c, n, "make_hyperboloid_instance");
  Vec b(n + 1, 0.0);
  b[0] = -rho;
  auto constraint = make_affine_conic(canonical_operator(n), std::move(b),
                                      make_soc(n + 1, Dominant::Last));
  CanonicalInstance inst;
  inst.problem = make_conic_problem(std::move(c), std::move(constraint));
  inst.feasible_set = make_hyperboloid(n, rho);
  inst.objective_offset = offset;
  inst.polyhedral = (rho == 0.0 && n == 2);
  return inst;
}

/// The counterexample family: min sum(x) s.t. x_1 >= sqrt(1 + ||x_tail||^2).
inline CanonicalInstance build_canonical(std::size_t n) {
  if (n < 2) throw DimensionError("build_canonical: n must be >= 2");
  return make_hyperboloid_instance(n, 1.0, ones(n), 0.0);
}

inline bool instance_feasible_at(const CanonicalInstance& inst, const Vec& x,
                                 double tol = 0.0) {
  return problem_feasible_at(x, inst.problem, tol);
}

// ---------------------------------------------------------------------------
// The four-step modeling story: how tightening and shifting one uncertain
// linear constraint under disk uncertainty leads from an empty feasible set
// to the non-attainment instance.  Verdicts are computed from the data, never
// hard-coded; regression tests compare them with the expected outcomes.
// ---------------------------------------------------------------------------

enum class StoryVerdict { Infeasible, Singleton, FeasibleNontrivial };

struct StoryStep {
  std::string label;
  std::variant<RobustConstraint, CanonicalInstance> subject;
  // When set, the robust constraint applies to (y - variable_shift); the
  // witness below is reported in y coordinates.
  std::optional<Vec> variable_shift;
  StoryVerdict verdict = StoryVerdict::Infeasible;
  std::optional<Vec> witness;
};

/// Classifies the feasible set of a robust constraint by probing the
/// worst-case function on a symmetric grid (the grid contains the exact
/// origin) and on a ring around the grid argmin.
inline StoryVerdict classify_robust_feasible_set(const RobustConstraint& rc,
                                                 Vec* witness_out,
                                                 double tol = 1e-9) {
  const std::size_t n = rc.uncertainty.a0.size();
  if (n != 2)
    throw UnsupportedError("classify_robust_feasible_set: only n = 2 probing");
  double best = std::numeric_limits<double>::infinity();
  Vec argmin(n, 0.0);
  const int half = 40;
  for (int i = -half; i <= half; ++i) {
    for (int j = -half; j <= half; ++j) {
      const Vec x{i * 0.1, j * 0.1};
      const double v = worst_case_value(rc, x);
      if (v < best) {
        best = v;
        argmin = x;
      }
    }
  }
  if (best > rc.rhs + tol) return StoryVerdict::Infeasible;
  if (best >= rc.rhs - tol) {
    bool isolated = true;
    for (int k = 0; k < 16; ++k) {
      const double ang = 2.0 * std::numbers::pi * k / 16.0;
      const Vec x{argmin[0] + 0.5 * std::cos(ang), argmin[1] + 0.5 * std::sin(ang)};
      if (worst_case_value(rc, x) <= rc.rhs + tol) {
        isolated = false;
        break;
      }
    }
    if (isolated) {
      if (witness_out) *witness_out = argmin;
      return StoryVerdict::Singleton;
    }
  }
  if (witness_out) *witness_out = argmin;
  return StoryVerdict::FeasibleNontrivial;
}

/// Reproduces the four-step narrative that motivates the counterexample:
///   (i)   disk-uncertain <a, x> <= -1: worst case ||x|| <= -1, empty;
///   (ii)  rhs relaxed to 0: worst case ||x|| <= 0, the singleton {0};
///   (iii) shifted variable y = x + e1 with the rhs uncertain too: the
///         singleton {(1, 0)};
///   (iv)  the constraint required to hold with worst-case slack 1: the
///         hyperboloid instance with objective offset 1.
inline std::vector<StoryStep> build_robust_story() {
  std::vector<StoryStep> steps;
  const auto disk = make_ellipsoid(zeros(2), Mat(2, 2, {1, 0, 0, 1}), 1.0);

  {
    StoryStep s;
    s.label = "uncertain <a,x> <= -1 over the unit disk";
    RobustConstraint rc{disk, -1.0};
    Vec w;
    s.verdict = classify_robust_feasible_set(rc, &w);
    if (s.verdict != StoryVerdict::Infeasible) s.witness = w;
    s.subject = std::move(rc);
    steps.push_back(std::move(s));
  }
  {
    StoryStep s;
    s.label = "rhs relaxed to 0";
    RobustConstraint rc{disk, 0.0};
    Vec w;
    s.verdict = classify_robust_feasible_set(rc, &w);
    s.witness = w;
    s.subject = std::move(rc);
    steps.push_back(std::move(s));
  }
  {
    StoryStep s;
    s.label = "shifted variable y = x + e1, uncertain rhs";
    // In z = y - e1 the constraint is again worst-case ||z|| <= 0.
    RobustConstraint rc{disk, 0.0};
    Vec w;
    s.verdict = classify_robust_feasible_set(rc, &w);
    s.variable_shift = Vec{1.0, 0.0};
    if (s.verdict == StoryVerdict::Singleton || s.verdict == StoryVerdict::FeasibleNontrivial)
      s.witness = add(w, *s.variable_shift);
    s.subject = std::move(rc);
    steps.push_back(std::move(s));
  }
  {
    StoryStep s;
    s.label = "worst-case slack 1: y_1 - 1 >= sqrt(1 + y_2^2), objective carries +1";
    CanonicalInstance inst = make_hyperboloid_instance(2, 1.0, ones(2), 1.0);
    // Computed verdict: at least two distinct feasible points.
    const Vec p0{1.0, 0.0};
    const Vec p1{2.0, 0.0};
    const bool multi = instance_feasible_at(inst, p0, 0.0) &&
                       instance_feasible_at(inst, p1, 0.0);
    s.verdict = multi ? StoryVerdict::FeasibleNontrivial : StoryVerdict::Infeasible;
    s.witness = p0;
    s.subject = std::move(inst);
    steps.push_back(std::move(s));
  }
  return steps;
}

}  // namespace attainment
