// attainment-lab - attainment diagnostics for second-order cone programs
// Copyright 2026 attainment-lab contributors
// Licensed under Apache 2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

#include "attainment/recession.hpp"

namespace attainment {

// Exact minimum of <c, h> over the unit-sphere slice of an embedded
// second-order cone, with the direction achieving it.
struct CopositivityCertificate {
  double min_value = 0.0;
  Vec argmin_direction;
  bool strict = false;      // min_value > tol
  bool copositive = false;  // min_value >= -tol

  friend bool operator==(const CopositivityCertificate&,
                         const CopositivityCertificate&) = default;
};

/// min <c, h> over { h in cone, ||h|| = 1 } by closed-form reduction.
///
/// Write c = (c_1, c_bar) and s = ||c_bar||.  Any unit cone member is
/// h = (cos a, sin a * d) with a in [0, pi/4] and d a unit tail direction;
/// for fixed a the tail minimizer is d = -c_bar/s (any d when s = 0), so the
/// problem reduces to g(a) = c_1 cos a - s sin a on [0, pi/4].  The minimum
/// is at an endpoint or at the interior critical point tan a = s/(-c_1),
/// which exists only for c_1 < 0.
inline CopositivityCertificate copositivity_certificate(const Vec& c,
                                                        const RecessionCone& cone,
                                                        double tol = 1e-9) {
  const auto* embedded = std::get_if<EmbeddedSocCone>(&cone.rep);
  if (!embedded)
    throw UnsupportedError(
        "copositivity_certificate: only embedded second-order recession cones "
        "are supported");
  require_dim(c, embedded->dim, "copositivity_certificate");
  require_finite(c, "copositivity_certificate");

  const std::size_t n = embedded->dim;
  const double c1 = c[0];
  double s2 = 0.0;
  for (std::size_t i = 1; i < n; ++i) s2 += c[i] * c[i];
  const double s = std::sqrt(s2);

  const auto g = [&](double a) { return c1 * std::cos(a) - s * std::sin(a); };
  const double quarter = std::numbers::pi / 4.0;

  double best_a = 0.0;
  double best = g(0.0);
  if (g(quarter) < best) {
    best = g(quarter);
    best_a = quarter;
  }
  if (c1 < 0.0 && s > 0.0) {
    const double crit = std::atan(s / (-c1));
    if (crit > 0.0 && crit < quarter && g(crit) < best) {
      best = g(crit);
      best_a = crit;
    }
  }

  CopositivityCertificate cert;
  cert.min_value = best;
  cert.argmin_direction.assign(n, 0.0);
  cert.argmin_direction[0] = std::cos(best_a);
  const double tail = std::sin(best_a);
  if (s > 0.0) {
    for (std::size_t i = 1; i < n; ++i)
      cert.argmin_direction[i] = -tail * c[i] / s;
  } else {
    cert.argmin_direction[1] = tail;
  }
  cert.strict = cert.min_value > tol;
  cert.copositive = cert.min_value >= -tol;
  return cert;
}

}  // namespace attainment
