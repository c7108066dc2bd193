// attainment-lab - attainment diagnostics for second-order cone programs
// Copyright 2026 attainment-lab contributors
// Licensed under Apache 2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "attainment/linalg.hpp"

namespace attainment {

// One fully-resolved CLI invocation.  Serialized into every JSON report for
// provenance.
struct RunConfig {
  std::string command;
  std::size_t n = 2;
  double tol = 1e-9;
  long long k_max = 20;
  std::size_t theta_count = 16;
  bool include_endpoints = true;
  std::optional<Vec> objective;  // defaults to all-ones at build time
  std::string output_dir = ".";
  std::vector<std::string> formats = {"json", "csv", "svg"};

  bool wants(const std::string& fmt) const {
    for (const auto& f : formats)
      if (f == fmt) return true;
    return false;
  }

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

inline void validate(const RunConfig& cfg) {
  if (!(cfg.tol > 0.0)) throw UnsupportedError("config: tol must be > 0");
  if (cfg.k_max < 1) throw UnsupportedError("config: k-max must be >= 1");
  if (cfg.theta_count < 1) throw UnsupportedError("config: theta-count must be >= 1");
  if (cfg.n < 2) throw UnsupportedError("config: n must be >= 2");
  for (const auto& f : cfg.formats)
    if (f != "json" && f != "csv" && f != "svg")
      throw UnsupportedError("config: unknown format '" + f + "'");
  if (cfg.objective && cfg.objective->size() != cfg.n)
    throw UnsupportedError("config: objective length must equal n");
}

}  // namespace attainment
