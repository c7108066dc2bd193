// attainment-lab - attainment diagnostics for second-order cone programs
// Copyright 2026 attainment-lab contributors
// Licensed under Apache 2.0

#pragma once

#include <cmath>
#include <cstddef>
#include <string>

#include "attainment/linalg.hpp"

namespace attainment {

// Closed convex set { x in R^n : x_1 >= sqrt(rho^2 + x_2^2 + ... + x_n^2) }.
// For rho = 0 it degenerates to the first-dominant second-order cone.
struct HyperboloidSet {
  std::size_t n = 2;
  double rho = 1.0;

  friend bool operator==(const HyperboloidSet&, const HyperboloidSet&) = default;
};

inline HyperboloidSet make_hyperboloid(std::size_t n, double rho) {
  if (n < 2) throw DimensionError("make_hyperboloid: n must be >= 2");
  if (!(rho >= 0.0) || !std::isfinite(rho))
    throw NumericalError("make_hyperboloid: rho must be finite and >= 0");
  return HyperboloidSet{n, rho};
}

inline double hyperboloid_tail_norm(const Vec& x) {
  double s = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) s += x[i] * x[i];
  return std::sqrt(s);
}

/// x_1 >= sqrt(rho^2 + ||tail||^2) - tol.
inline bool hyperboloid_contains(const Vec& x, const HyperboloidSet& set,
                                 double tol = 0.0) {
  require_dim(x, set.n, "hyperboloid_contains");
  double s = set.rho * set.rho;
  for (std::size_t i = 1; i < x.size(); ++i) s += x[i] * x[i];
  return x[0] >= std::sqrt(s) - tol;
}

/// Euclidean projection onto the set.
///
/// By radial symmetry the projection of z keeps the tail direction of z and
/// lies on the boundary (unless z is already inside), so the problem reduces
/// to one variable t = ||tail||: minimize (w(t)-z_1)^2 + (t-r)^2 with
/// w(t) = sqrt(rho^2+t^2) and r = ||z_tail||.  The stationarity condition
///   psi(t) = t*(1 - z_1/w(t)) + (t - r) = 0
/// is solved by bisection with bracket expansion, then polished by Newton.
inline Vec hyperboloid_project(const Vec& z, const HyperboloidSet& set,
                               double tol = 1e-12) {
  require_dim(z, set.n, "hyperboloid_project");
  require_finite(z, "hyperboloid_project");
  if (hyperboloid_contains(z, set, 0.0)) return z;

  const double rho = set.rho;
  const double z1 = z[0];
  const double r = hyperboloid_tail_norm(z);
  if (r == 0.0) {
    // Tail-free point below the apex projects onto the apex.
    Vec p(z.size(), 0.0);
    p[0] = rho;
    return p;
  }

  const auto psi = [&](double t) {
    const double w = std::sqrt(rho * rho + t * t);
    const double ratio = (w > 0.0) ? t / w : 1.0;
    return t - z1 * ratio + (t - r);
  };
  const auto dpsi = [&](double t) {
    const double w = std::sqrt(rho * rho + t * t);
    return 2.0 - ((w > 0.0) ? z1 * rho * rho / (w * w * w) : 0.0);
  };

  // psi(0) = -r < 0; expand until the bracket closes.
  double lo = 0.0, hi = std::max(r, 1.0);
  int expand = 0;
  while (psi(hi) <= 0.0) {
    hi *= 2.0;
    if (++expand > 200) {
      throw NumericalError("hyperboloid_project: failed to bracket root, psi(" +
                           std::to_string(hi) + ") <= 0");
    }
  }
  for (int i = 0; i < 200 && hi - lo > tol * std::max(1.0, hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    (psi(mid) <= 0.0 ? lo : hi) = mid;
  }
  double t = 0.5 * (lo + hi);
  for (int i = 0; i < 8; ++i) {
    const double g = psi(t), dg = dpsi(t);
    if (dg <= 0.0) break;
    const double next = t - g / dg;
    if (!(next >= lo && next <= hi)) break;
    t = next;
  }

  Vec p(z.size());
  p[0] = std::sqrt(rho * rho + t * t);
  for (std::size_t i = 1; i < z.size(); ++i) p[i] = t * z[i] / r;
  return p;
}

}  // namespace attainment
