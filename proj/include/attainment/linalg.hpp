// attainment-lab - attainment diagnostics for second-order cone programs
// Copyright 2026 attainment-lab contributors
// Licensed under Apache 2.0

#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "attainment/errors.hpp"

namespace attainment {

// All problem data in this library is tiny and dense; a plain vector of
// doubles and a row-major matrix are all we need.
using Vec = std::vector<double>;

inline void require_dim(const Vec& v, std::size_t n, const char* where) {
  if (v.size() != n) {
    throw DimensionError(std::string(where) + ": expected dimension " +
                         std::to_string(n) + ", got " + std::to_string(v.size()));
  }
}

inline void require_finite(const Vec& v, const char* where) {
  for (double t : v) {
    if (!std::isfinite(t)) {
      throw NumericalError(std::string(where) + ": non-finite entry");
    }
  }
}

inline double dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("dot: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double squared_norm(const Vec& a) { return dot(a, a); }

inline double norm(const Vec& a) { return std::sqrt(squared_norm(a)); }

inline Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("add: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("sub: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec scale(double s, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

inline Vec zeros(std::size_t n) { return Vec(n, 0.0); }

inline Vec ones(std::size_t n) { return Vec(n, 1.0); }

inline Vec unit(std::size_t n, std::size_t i) {
  Vec r(n, 0.0);
  r[i] = 1.0;
  return r;
}

// Dense row-major matrix.
struct Mat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;  // rows*cols entries

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
  Mat(std::size_t r, std::size_t c, std::vector<double> d)
      : rows(r), cols(c), data(std::move(d)) {
    if (data.size() != rows * cols) throw DimensionError("Mat: bad data size");
  }

  double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
  }
};

inline Vec matvec(const Mat& m, const Vec& x) {
  require_dim(x, m.cols, "matvec");
  Vec y(m.rows, 0.0);
  for (std::size_t i = 0; i < m.rows; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < m.cols; ++j) s += m.at(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

inline Mat transpose(const Mat& m) {
  Mat t(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

}  // namespace attainment
