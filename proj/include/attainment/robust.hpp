// attainment-lab - attainment diagnostics for second-order cone programs
// Copyright 2026 attainment-lab contributors
// Licensed under Apache 2.0

#pragma once

#include <cmath>
#include <cstddef>

#include "attainment/conic_problem.hpp"
#include "attainment/linalg.hpp"

namespace attainment {

// Ellipsoid { a = a0 + P*u : ||u|| <= rho } with P an n x k matrix.
// P need not be square or invertible.
struct EllipsoidalUncertainty {
  Vec a0;
  Mat P;
  double rho = 1.0;

  friend bool operator==(const EllipsoidalUncertainty&,
                         const EllipsoidalUncertainty&) = default;
};

inline EllipsoidalUncertainty make_ellipsoid(Vec a0, Mat P, double rho) {
  if (a0.size() != P.rows)
    throw DimensionError("make_ellipsoid: a0 dim must equal P row count");
  if (!(rho > 0.0) || !std::isfinite(rho))
    throw NumericalError("make_ellipsoid: rho must be finite and > 0");
  require_finite(a0, "make_ellipsoid");
  require_finite(P.data, "make_ellipsoid");
  return EllipsoidalUncertainty{std::move(a0), std::move(P), rho};
}

// <a, x> <= rhs for every a in the uncertainty set.
struct RobustConstraint {
  EllipsoidalUncertainty uncertainty;
  double rhs = 0.0;

  friend bool operator==(const RobustConstraint&, const RobustConstraint&) = default;
};

/// sup over the ellipsoid of <a, x>, which equals <a0, x> + rho*||P^T x||.
/// The supremum is attained at u = rho * v/||v|| with v = P^T x (any u on the
/// sphere when v = 0, in which case the value is exactly <a0, x>).
inline double worst_case_value(const RobustConstraint& rc, const Vec& x) {
  require_dim(x, rc.uncertainty.a0.size(), "worst_case_value");
  const Vec ptx = matvec(transpose(rc.uncertainty.P), x);
  return dot(rc.uncertainty.a0, x) + rc.uncertainty.rho * norm(ptx);
}

inline bool robust_feasible_at(const RobustConstraint& rc, const Vec& x,
                               double tol = 0.0) {
  return worst_case_value(rc, x) <= rc.rhs + tol;
}

/// Exact conic reformulation: the robust constraint holds at x iff
///   (rhs - <a0, x>, rho * P^T x)  lies in Q^{k+1} (first-dominant).
/// Returned as an affine-conic constraint in x.
inline AffineConicConstraint robust_to_soc(const RobustConstraint& rc) {
  const std::size_t n = rc.uncertainty.a0.size();
  const std::size_t k = rc.uncertainty.P.cols;
  Mat A(k + 1, n);
  for (std::size_t j = 0; j < n; ++j) A.at(0, j) = -rc.uncertainty.a0[j];
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j)
      A.at(i + 1, j) = rc.uncertainty.rho * rc.uncertainty.P.at(j, i);
  Vec b(k + 1, 0.0);
  b[0] = -rc.rhs;
  return make_affine_conic(std::move(A), std::move(b),
                           make_soc(k + 1, Dominant::First));
}

}  // namespace attainment
