// attainment-lab - attainment diagnostics for second-order cone programs
// Copyright 2026 attainment-lab contributors
// Licensed under Apache 2.0

#pragma once

#include <cmath>

#include "attainment/linalg.hpp"

namespace attainment {

struct SequencePoint {
  long long k = 0;
  Vec x;           // (sqrt(1+k^2), -k)
  double f = 0.0;  // objective, reported in the rationalized form
  double f_naive = 0.0;

  friend bool operator==(const SequencePoint&, const SequencePoint&) = default;
};

/// The boundary sequence x(k) = (sqrt(1+k^2), -k) whose objective values
/// sqrt(1+k^2) - k tend to 0 without ever reaching it.
///
/// The reported value uses the rationalized form 1/(sqrt(1+k^2) + k), which
/// avoids the cancellation of the direct difference at large k; the direct
/// form is kept alongside for cross-checking.
inline SequencePoint minimizing_sequence(long long k) {
  if (k < 0) throw DimensionError("minimizing_sequence: k must be >= 0");
  SequencePoint p;
  p.k = k;
  const double kd = static_cast<double>(k);
  const double w = std::sqrt(1.0 + kd * kd);
  p.x = {w, kd == 0.0 ? 0.0 : -kd};
  p.f = 1.0 / (w + kd);
  p.f_naive = w - kd;
  return p;
}

/// Unit direction of x(k); converges to (1/sqrt(2), -1/sqrt(2)).
inline Vec sequence_direction(long long k) {
  const SequencePoint p = minimizing_sequence(k);
  return scale(1.0 / norm(p.x), p.x);
}

}  // namespace attainment
