// attainment-lab - attainment diagnostics for second-order cone programs
// Copyright 2026 attainment-lab contributors
// Licensed under Apache 2.0

#pragma once

#include <string>
#include <vector>

#include "attainment/diagnosis.hpp"
#include "attainment/lp.hpp"
#include "attainment/regularization.hpp"
#include "attainment/sequence.hpp"

namespace attainment {

// All numeric CSV fields use 17 significant digits so the files round-trip
// doubles exactly.

inline constexpr const char* kSequenceCsvHeader = "k,x1,x2,f,dir_err";
inline constexpr const char* kRegPathCsvHeader = "k,epsilon,f,x_norm,kkt";
inline constexpr const char* kPolyCsvHeader = "kind,param,status,value";

inline std::string render_sequence_csv(long long k_max) {
  const Vec limit{1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0)};
  std::string out = std::string(kSequenceCsvHeader) + "\n";
  for (long long k = 0; k <= k_max; ++k) {
    const SequencePoint p = minimizing_sequence(k);
    const double dir_err = norm(sub(sequence_direction(k), limit));
    out += std::to_string(k) + "," + format_g17(p.x[0]) + "," + format_g17(p.x[1]) +
           "," + format_g17(p.f) + "," + format_g17(dir_err) + "\n";
  }
  return out;
}

inline std::string render_regpath_csv(const RegularizationPath& path) {
  std::string out = std::string(kRegPathCsvHeader) + "\n";
  for (const auto& e : path.entries) {
    out += std::to_string(e.k) + "," + format_g17(e.solve.epsilon) + "," +
           format_g17(e.solve.objective_value) + "," + format_g17(norm(e.solve.x_star)) +
           "," + format_g17(e.solve.kkt_residual) + "\n";
  }
  return out;
}

struct PolyCsvRow {
  std::string kind;   // "inner" | "outer"
  long long param;    // K for inner, theta count for outer
  LpStatus status;
  std::optional<double> value;
};

inline std::string render_poly_csv(const std::vector<PolyCsvRow>& rows) {
  std::string out = std::string(kPolyCsvHeader) + "\n";
  for (const auto& r : rows) {
    out += r.kind + "," + std::to_string(r.param) + "," + to_string(r.status) + ",";
    if (r.value) out += format_g17(*r.value);
    out += "\n";
  }
  return out;
}

}  // namespace attainment
