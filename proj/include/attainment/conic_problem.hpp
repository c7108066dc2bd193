// attainment-lab - attainment diagnostics for second-order cone programs
// Copyright 2026 attainment-lab contributors
// Licensed under Apache 2.0

#pragma once

#include "attainment/cones.hpp"
#include "attainment/linalg.hpp"

namespace attainment {

// Constraint A*x - b in cone, with cone living in R^m (m = rows of A).
struct AffineConicConstraint {
  Mat A;
  Vec b;
  SecondOrderCone cone;

  friend bool operator==(const AffineConicConstraint&,
                         const AffineConicConstraint&) = default;
};

inline AffineConicConstraint make_affine_conic(Mat A, Vec b, SecondOrderCone cone) {
  if (A.rows != b.size() || A.rows != cone.dim)
    throw DimensionError("make_affine_conic: A rows, b, and cone dim must agree");
  require_finite(b, "make_affine_conic");
  require_finite(A.data, "make_affine_conic");
  return AffineConicConstraint{std::move(A), std::move(b), cone};
}

// min <c, x> subject to A*x - b in cone.
struct ConicProblem {
  Vec c;
  AffineConicConstraint constraint;

  friend bool operator==(const ConicProblem&, const ConicProblem&) = default;
};

inline ConicProblem make_conic_problem(Vec c, AffineConicConstraint constraint) {
  if (c.size() != constraint.A.cols)
    throw DimensionError("make_conic_problem: c dim must equal A column count");
  require_finite(c, "make_conic_problem");
  return ConicProblem{std::move(c), std::move(constraint)};
}

/// A*x - b, the vector whose cone membership decides feasibility.
inline Vec constraint_slack(const Vec& x, const ConicProblem& problem) {
  return sub(matvec(problem.constraint.A, x), problem.constraint.b);
}

inline bool problem_feasible_at(const Vec& x, const ConicProblem& problem,
                                double tol = 0.0) {
  return soc_contains(constraint_slack(x, problem), problem.constraint.cone, tol);
}

}  // namespace attainment
