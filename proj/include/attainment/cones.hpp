// attainment-lab - attainment diagnostics for second-order cone programs
// Copyright 2026 attainment-lab contributors
// Licensed under Apache 2.0

#pragma once

#include <cmath>
#include <cstddef>

#include "attainment/linalg.hpp"

namespace attainment {

// Which coordinate of a cone vector dominates the norm of the others.
// Both conventions appear in the canonical instances, so the cone type
// carries the convention explicitly instead of relying on a fixed layout.
enum class Dominant { First, Last };

// Second-order (Lorentz) cone { y : y_dom >= ||y_rest|| } in R^dim.
struct SecondOrderCone {
  std::size_t dim = 2;
  Dominant dominant = Dominant::First;

  friend bool operator==(const SecondOrderCone&, const SecondOrderCone&) = default;
};

inline SecondOrderCone make_soc(std::size_t dim, Dominant dominant) {
  if (dim < 2) throw DimensionError("make_soc: dim must be >= 2");
  return SecondOrderCone{dim, dominant};
}

inline std::size_t dominant_index(const SecondOrderCone& cone) {
  return cone.dominant == Dominant::First ? 0 : cone.dim - 1;
}

inline double rest_norm(const Vec& y, const SecondOrderCone& cone) {
  const std::size_t d = dominant_index(cone);
  double s = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (i != d) s += y[i] * y[i];
  return std::sqrt(s);
}

/// Membership test: dominant coordinate >= ||rest|| - tol.
inline bool soc_contains(const Vec& y, const SecondOrderCone& cone, double tol = 0.0) {
  require_dim(y, cone.dim, "soc_contains");
  return y[dominant_index(cone)] >= rest_norm(y, cone) - tol;
}

/// Strict membership: dominant coordinate > ||rest|| + margin.
inline bool soc_interior_contains(const Vec& y, const SecondOrderCone& cone,
                                  double margin = 0.0) {
  require_dim(y, cone.dim, "soc_interior_contains");
  return y[dominant_index(cone)] > rest_norm(y, cone) + margin;
}

/// Euclidean projection onto the cone (closed form).
///
/// With y = (t, u) in the first-dominant layout and r = ||u||:
///   t >= r   -> y itself,
///   t <= -r  -> 0 (y is in the polar cone),
///   otherwise the boundary point ((t+r)/2, (t+r)/(2r) * u).
inline Vec soc_project(const Vec& y, const SecondOrderCone& cone) {
  require_dim(y, cone.dim, "soc_project");
  const std::size_t d = dominant_index(cone);
  const double t = y[d];
  const double r = rest_norm(y, cone);
  if (t >= r) return y;
  Vec z(y.size(), 0.0);
  if (t <= -r) return z;
  const double alpha = 0.5 * (t + r);
  for (std::size_t i = 0; i < y.size(); ++i)
    if (i != d) z[i] = alpha * y[i] / r;
  z[d] = alpha;
  return z;
}

}  // namespace attainment
