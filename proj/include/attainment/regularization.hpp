// attainment-lab - attainment diagnostics for second-order cone programs
// Copyright 2026 attainment-lab contributors
// Licensed under Apache 2.0

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "attainment/canonical.hpp"
#include "attainment/hyperboloid.hpp"

namespace attainment {

struct RegularizedSolve {
  double epsilon = 0.0;
  Vec x_star;
  double objective_value = 0.0;   // <c, x_star>, offset excluded
  double regularized_value = 0.0; // <c, x_star> + eps/2 * ||x_star||^2
  double kkt_residual = 0.0;
  int iterations = 0;

  friend bool operator==(const RegularizedSolve&, const RegularizedSolve&) = default;
};

/// Minimizes <c, x> + (eps/2) ||x||^2 over a hyperboloid instance.
///
/// With c_1 > 0 the constraint is active at the optimum and by radial
/// symmetry the tail is x_tail = -t * c_bar/||c_bar|| on the boundary
/// x_1 = w(t) = sqrt(rho^2 + t^2).  That reduces the solve to the strictly
/// convex one-dimensional problem
///   F(t) = c_1 w(t) - s t + (eps/2)(rho^2 + 2 t^2),      s = ||c_bar||,
/// whose stationarity F'(t) = c_1 t/w(t) - s + 2 eps t = 0 is solved by
/// Newton with a bisection safeguard.
///
/// The result is cross-checked against an independent route: the regularized
/// objective equals (eps/2) ||x + c/eps||^2 up to a constant, so projected
/// descent with step 1/eps lands on hyperboloid_project(-c/eps).  A
/// disagreement beyond 1e-4 raises InternalConsistencyError.
inline RegularizedSolve solve_regularized(const CanonicalInstance& instance,
                                          double epsilon, double tol = 1e-12) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon))
    throw UnsupportedError("solve_regularized: epsilon must be finite and > 0");
  if (!is_canonical_operator(instance.problem.constraint.A))
    throw UnsupportedError("solve_regularized: non-canonical instance");
  const Vec& c = instance.problem.c;
  const std::size_t n = instance.feasible_set.n;
  const double rho = instance.feasible_set.rho;
  const double c1 = c[0];
  if (!(c1 > 0.0))
    throw UnsupportedError("solve_regularized: requires c_1 > 0");

  double s2 = 0.0;
  for (std::size_t i = 1; i < n; ++i) s2 += c[i] * c[i];
  const double s = std::sqrt(s2);

  const auto grad = [&](double t) {
    const double w = std::sqrt(rho * rho + t * t);
    const double ratio = (w > 0.0) ? t / w : 1.0;
    return c1 * ratio - s + 2.0 * epsilon * t;
  };
  const auto grad2 = [&](double t) {
    const double w = std::sqrt(rho * rho + t * t);
    const double curv = (w > 0.0) ? c1 * rho * rho / (w * w * w) : 0.0;
    return curv + 2.0 * epsilon;
  };

  int iterations = 0;
  double t = 0.0;
  if (s > 0.0) {
    // grad(0) = -s < 0; expand until the bracket closes, then bisect + Newton.
    double lo = 0.0, hi = 1.0;
    while (grad(hi) <= 0.0) {
      hi *= 2.0;
      if (++iterations > 400)
        throw NumericalError("solve_regularized: failed to bracket stationary point");
    }
    for (int i = 0; i < 80; ++i) {
      ++iterations;
      const double mid = 0.5 * (lo + hi);
      (grad(mid) <= 0.0 ? lo : hi) = mid;
    }
    t = 0.5 * (lo + hi);
    for (int i = 0; i < 60 && std::abs(grad(t)) > tol; ++i) {
      ++iterations;
      const double step = grad(t) / grad2(t);
      double next = t - step;
      if (next < lo || next > hi) next = 0.5 * (lo + hi);
      (grad(next) <= 0.0 ? lo : hi) = next;
      t = next;
    }
  }

  RegularizedSolve out;
  out.epsilon = epsilon;
  out.iterations = iterations;
  out.kkt_residual = (s > 0.0) ? std::abs(grad(t)) : 0.0;
  out.x_star.assign(n, 0.0);
  out.x_star[0] = std::sqrt(rho * rho + t * t);
  if (s > 0.0)
    for (std::size_t i = 1; i < n; ++i) out.x_star[i] = -t * c[i] / s;
  out.objective_value = dot(c, out.x_star);
  out.regularized_value = out.objective_value + 0.5 * epsilon * squared_norm(out.x_star);

  // Independent route: projection of the unconstrained minimizer.
  const Vec fallback = hyperboloid_project(scale(-1.0 / epsilon, c),
                                           instance.feasible_set, 1e-14);
  const double gap = norm(sub(fallback, out.x_star));
  const double scale_ref = std::max(1.0, norm(out.x_star));
  if (gap > 1e-4 * scale_ref)
    throw InternalConsistencyError(
        "solve_regularized: reduction and projected-descent fallback disagree by " +
        std::to_string(gap));
  return out;
}

struct PathEntry {
  long long k = 0;  // epsilon = 1/k
  RegularizedSolve solve;

  friend bool operator==(const PathEntry&, const PathEntry&) = default;
};

struct RegularizationPath {
  std::vector<PathEntry> entries;

  friend bool operator==(const RegularizationPath&, const RegularizationPath&) = default;
};

/// One regularized solve per k in the schedule, with epsilon = 1/k.
inline RegularizationPath regularization_path(const CanonicalInstance& instance,
                                              const std::vector<long long>& k_schedule,
                                              double tol = 1e-12) {
  RegularizationPath path;
  long long prev = 0;
  for (long long k : k_schedule) {
    if (k <= prev)
      throw UnsupportedError("regularization_path: schedule must be strictly increasing");
    prev = k;
    PathEntry e;
    e.k = k;
    e.solve = solve_regularized(instance, 1.0 / static_cast<double>(k), tol);
    path.entries.push_back(std::move(e));
  }
  return path;
}

/// The default schedule k = 2^0, 2^1, ..., 2^max_exp.
inline std::vector<long long> doubling_schedule(int max_exp) {
  std::vector<long long> ks;
  for (int e = 0; e <= max_exp; ++e) ks.push_back(1LL << e);
  return ks;
}

}  // namespace attainment
