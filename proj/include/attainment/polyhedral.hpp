// attainment-lab - attainment diagnostics for second-order cone programs
// Copyright 2026 attainment-lab contributors
// Licensed under Apache 2.0

#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "attainment/canonical.hpp"
#include "attainment/lp.hpp"
#include "attainment/sequence.hpp"

namespace attainment {

enum class ApproxKind { Outer, Inner };

// <row, x> >= rhs
struct LinearInequality {
  Vec row;
  double rhs = 0.0;
};

struct PolyhedralApprox {
  ApproxKind kind = ApproxKind::Outer;
  std::vector<LinearInequality> inequalities;
  // Generator form, populated for Inner: conv(vertices) + cone(rays).
  std::vector<Vec> vertices;
  std::vector<Vec> rays;
};

/// Supporting half-spaces of the hyperboloid set.  For every unit u = (u0, u_bar),
/// Cauchy-Schwarz gives x_1 >= sqrt(rho^2 + ||x_tail||^2) >= rho*u0 + <u_bar, x_tail>
/// on the feasible set, so each direction yields one valid outer row.
inline PolyhedralApprox poly_outer(const CanonicalInstance& instance,
                                   const std::vector<Vec>& directions) {
  const std::size_t n = instance.feasible_set.n;
  const double rho = instance.feasible_set.rho;
  PolyhedralApprox approx;
  approx.kind = ApproxKind::Outer;
  for (const Vec& u : directions) {
    require_dim(u, n, "poly_outer");
    if (std::abs(norm(u) - 1.0) > 1e-12)
      throw UnsupportedError("poly_outer: directions must be unit vectors");
    LinearInequality ineq;
    ineq.row.assign(n, 0.0);
    ineq.row[0] = 1.0;
    for (std::size_t i = 1; i < n; ++i) ineq.row[i] = -u[i];
    ineq.rhs = rho * u[0];
    approx.inequalities.push_back(std::move(ineq));
  }
  return approx;
}

/// Uniform angle grid on [-pi/4, pi/4] for the planar case; each angle theta
/// expands into the pair x_1 >= +-(rho*cos(theta) + x_2 sin(theta)).
inline std::vector<double> theta_grid(std::size_t count, bool include_endpoints) {
  if (count == 0) throw UnsupportedError("theta_grid: count must be >= 1");
  const double quarter = std::numbers::pi / 4.0;
  std::vector<double> thetas;
  if (include_endpoints) {
    if (count == 1) {
      thetas.push_back(0.0);
    } else {
      for (std::size_t i = 0; i < count; ++i)
        thetas.push_back(-quarter + 2.0 * quarter * static_cast<double>(i) /
                                        static_cast<double>(count - 1));
    }
  } else {
    for (std::size_t i = 0; i < count; ++i)
      thetas.push_back(-quarter + 2.0 * quarter *
                                      (static_cast<double>(i) + 0.5) /
                                      static_cast<double>(count));
  }
  return thetas;
}

inline PolyhedralApprox poly_outer_theta(const CanonicalInstance& instance,
                                         std::size_t theta_count,
                                         bool include_endpoints) {
  if (instance.feasible_set.n != 2)
    throw UnsupportedError("poly_outer_theta: angle grids are planar only");
  std::vector<Vec> dirs;
  for (double th : theta_grid(theta_count, include_endpoints)) {
    dirs.push_back(Vec{std::cos(th), std::sin(th)});
    dirs.push_back(Vec{-std::cos(th), -std::sin(th)});
  }
  return poly_outer(instance, dirs);
}

/// Inner approximation of the planar instance: the convex hull of the
/// boundary points (sqrt(1+k^2), +-k), k = 0..K, extended along the extreme
/// recession rays (1, +-1).  Every generated point is feasible, so any LP
/// optimum over this polyhedron is a feasible, suboptimal point of the
/// instance.
inline PolyhedralApprox poly_inner(const CanonicalInstance& instance, int K) {
  if (instance.feasible_set.n != 2)
    throw UnsupportedError("poly_inner: planar instances only");
  if (instance.feasible_set.rho != 1.0)
    throw UnsupportedError("poly_inner: requires the rho = 1 instance");
  if (K < 0) throw UnsupportedError("poly_inner: K must be >= 0");

  PolyhedralApprox approx;
  approx.kind = ApproxKind::Inner;

  const auto boundary = [](double k) { return std::sqrt(1.0 + k * k); };
  approx.vertices.push_back(Vec{1.0, 0.0});
  for (int k = 1; k <= K; ++k) {
    approx.vertices.push_back(Vec{boundary(k), -static_cast<double>(k)});
    approx.vertices.push_back(Vec{boundary(k), static_cast<double>(k)});
  }
  approx.rays.push_back(Vec{1.0, 1.0});
  approx.rays.push_back(Vec{1.0, -1.0});

  // Facets: chords between consecutive boundary points (in mirrored pairs),
  // plus the two unbounded edges along the rays.
  for (int k = 0; k < K; ++k) {
    const double w0 = boundary(k), w1 = boundary(k + 1);
    const double slope = w1 - w0;  // chord slope over one unit of |x_2|
    const double rhs = w0 - slope * k;
    approx.inequalities.push_back(LinearInequality{Vec{1.0, -slope}, rhs});
    approx.inequalities.push_back(LinearInequality{Vec{1.0, slope}, rhs});
  }
  const double edge_rhs = boundary(K) - static_cast<double>(K);
  approx.inequalities.push_back(LinearInequality{Vec{1.0, -1.0}, edge_rhs});
  approx.inequalities.push_back(LinearInequality{Vec{1.0, 1.0}, edge_rhs});
  return approx;
}

/// min <c, x> over the approximating polyhedron, as input for lp_solve.
inline LinearProgram approx_lp(const PolyhedralApprox& approx, const Vec& c) {
  LinearProgram lp;
  lp.c = c;
  for (const auto& ineq : approx.inequalities)
    lp.rows.push_back(LpRow{ineq.row, ineq.rhs, Sense::Ge});
  return lp;
}

}  // namespace attainment
