// attainment-lab - attainment diagnostics for second-order cone programs
// Copyright 2026 attainment-lab contributors
// Licensed under Apache 2.0
//
// Shared test fixtures: seeded randomness and brute-force oracles that stay
// independent of the library's solution paths.

#pragma once

#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "attainment/attainment.hpp"

namespace testsupport {

using attainment::LinearProgram;
using attainment::LpStatus;
using attainment::Vec;

inline std::uint64_t seed_from_env() {
  if (const char* s = std::getenv("ATTAINMENT_LAB_SEED"))
    return std::strtoull(s, nullptr, 10);
  return 0xA77A1AB5u;  // fixed default seed
}

struct Rng {
  std::mt19937_64 gen{seed_from_env()};

  double uniform(double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(gen);
  }
  long long integer(long long a, long long b) {
    return std::uniform_int_distribution<long long>(a, b)(gen);
  }
  double gauss() { return std::normal_distribution<double>(0.0, 1.0)(gen); }

  Vec vec(std::size_t n, double a, double b) {
    Vec v(n);
    for (auto& t : v) t = uniform(a, b);
    return v;
  }

  // Entries on the exact grid {-q, ..., q}/4; keeps oracle linear algebra
  // well-conditioned.
  Vec quarter_vec(std::size_t n, int q) {
    Vec v(n);
    for (auto& t : v) t = static_cast<double>(integer(-q, q)) / 4.0;
    return v;
  }

  Vec unit_vec(std::size_t n) {
    Vec v(n);
    double len = 0.0;
    while (len < 1e-8) {
      for (auto& t : v) t = gauss();
      len = attainment::norm(v);
    }
    return attainment::scale(1.0 / len, v);
  }

  // Unit vector in { h : h_1 >= ||tail|| } (first-dominant embedded cone).
  Vec cone_member(std::size_t n) {
    const double alpha = uniform(0.0, std::numbers::pi / 4.0);
    Vec h(n, 0.0);
    h[0] = std::cos(alpha);
    const Vec tail = unit_vec(n - 1);
    for (std::size_t i = 1; i < n; ++i) h[i] = std::sin(alpha) * tail[i - 1];
    return h;
  }

  // Random member of { x : x_1 >= sqrt(rho^2 + ||tail||^2) }.
  Vec hyperboloid_member(std::size_t n, double rho, double spread) {
    Vec x(n, 0.0);
    double tail_sq = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
      x[i] = uniform(-spread, spread);
      tail_sq += x[i] * x[i];
    }
    x[0] = std::sqrt(rho * rho + tail_sq) + uniform(0.0, spread);
    return x;
  }
};

// ---------------------------------------------------------------------------
// One-dimensional golden-section minimizer (for oracle solves).
// ---------------------------------------------------------------------------

inline double golden_section(const std::function<double(double)>& f, double a,
                             double b, int iters = 200) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iters && (b - a) > 1e-15 * std::max(1.0, std::abs(b)); ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

// Golden-section oracle for the regularized solve on a hyperboloid instance:
// minimizes F(t) = c_1 sqrt(rho^2+t^2) - ||c_bar|| t + (eps/2)(rho^2 + 2 t^2)
// over t >= 0 on an expanded bracket.  Returns the boundary point.
inline Vec regularized_oracle(const attainment::CanonicalInstance& inst,
                              double eps) {
  const Vec& c = inst.problem.c;
  const double rho = inst.feasible_set.rho;
  double s2 = 0.0;
  for (std::size_t i = 1; i < c.size(); ++i) s2 += c[i] * c[i];
  const double s = std::sqrt(s2);
  const auto F = [&](double t) {
    return c[0] * std::sqrt(rho * rho + t * t) - s * t +
           0.5 * eps * (rho * rho + 2.0 * t * t);
  };
  double hi = 1.0;
  while (F(hi * 2.0) < F(hi)) hi *= 2.0;
  const double t = golden_section(F, 0.0, 2.0 * hi, 400);
  Vec x(c.size(), 0.0);
  x[0] = std::sqrt(rho * rho + t * t);
  if (s > 0.0)
    for (std::size_t i = 1; i < c.size(); ++i) x[i] = -t * c[i] / s;
  return x;
}

// ---------------------------------------------------------------------------
// Brute-force LP oracle: enumerate all basic points from row intersections.
// Assumes the feasible region, if nonempty, is bounded with at least one
// vertex (callers include box rows), so the optimum is the best vertex.
// ---------------------------------------------------------------------------

inline bool solve_square(std::vector<Vec> m, Vec rhs, Vec& x) {
  const std::size_t d = rhs.size();
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < d; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    if (std::abs(m[piv][col]) < 1e-9) return false;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col) continue;
      const double f = m[r][col] / m[col][col];
      for (std::size_t cc = col; cc < d; ++cc) m[r][cc] -= f * m[col][cc];
      rhs[r] -= f * rhs[col];
    }
  }
  x.assign(d, 0.0);
  for (std::size_t i = 0; i < d; ++i) x[i] = rhs[i] / m[i][i];
  return true;
}

struct OracleLpResult {
  LpStatus status = LpStatus::Infeasible;
  double value = 0.0;
};

inline OracleLpResult lp_vertex_oracle(const LinearProgram& lp,
                                       double feas_tol = 1e-7) {
  const std::size_t d = lp.c.size();
  const std::size_t m = lp.rows.size();
  OracleLpResult res;
  res.value = std::numeric_limits<double>::infinity();

  std::vector<std::size_t> idx(d, 0);
  const std::function<void(std::size_t, std::size_t)> combos = [&](std::size_t pos,
                                                                   std::size_t start) {
    if (pos == d) {
      std::vector<Vec> rows;
      Vec rhs;
      for (std::size_t i : idx) {
        rows.push_back(lp.rows[i].a);
        rhs.push_back(lp.rows[i].rhs);
      }
      Vec x;
      if (!solve_square(rows, rhs, x)) return;
      for (const auto& row : lp.rows) {
        const double r = attainment::dot(row.a, x) - row.rhs;
        if (row.sense == attainment::Sense::Ge && r < -feas_tol) return;
        if (row.sense == attainment::Sense::Le && r > feas_tol) return;
        if (row.sense == attainment::Sense::Eq && std::abs(r) > feas_tol) return;
      }
      const double v = attainment::dot(lp.c, x);
      if (v < res.value) {
        res.value = v;
        res.status = LpStatus::Optimal;
      }
      return;
    }
    for (std::size_t i = start; i < m; ++i) {
      idx[pos] = i;
      combos(pos + 1, i + 1);
    }
  };
  combos(0, 0);
  return res;
}

// Oracle over a generator representation: min <c, v> over vertices, unless a
// ray strictly descends.
inline OracleLpResult generator_oracle(const attainment::PolyhedralApprox& approx,
                                       const Vec& c) {
  OracleLpResult res;
  for (const auto& r : approx.rays) {
    if (attainment::dot(c, r) < -1e-12) {
      res.status = LpStatus::Unbounded;
      return res;
    }
  }
  res.value = std::numeric_limits<double>::infinity();
  for (const auto& v : approx.vertices) {
    res.value = std::min(res.value, attainment::dot(c, v));
    res.status = LpStatus::Optimal;
  }
  return res;
}

}  // namespace testsupport
