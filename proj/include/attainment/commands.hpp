// attainment-lab - attainment diagnostics for second-order cone programs
// Copyright 2026 attainment-lab contributors
// Licensed under Apache 2.0

#pragma once

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "attainment/config.hpp"
#include "attainment/csv.hpp"
#include "attainment/diagnosis.hpp"
#include "attainment/polyhedral.hpp"
#include "attainment/serialize.hpp"
#include "attainment/svg.hpp"

namespace attainment {

// Exit-code contract: 0 solvable/success, 2 usage, 3 non-solvable
// classification, 4 numerical failure.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNonSolvable = 3;
inline constexpr int kExitNumerical = 4;

struct OutputFile {
  std::string name;
  std::string content;
};

// All computation happens before any file is touched; a failing solve never
// leaves partial outputs behind.
inline void write_outputs(const std::string& dir, const std::vector<OutputFile>& files) {
  namespace fs = std::filesystem;
  if (!dir.empty() && dir != ".") fs::create_directories(dir);
  for (const auto& f : files) {
    const fs::path path = fs::path(dir) / f.name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw NumericalError("cannot open output file " + path.string());
    out << f.content;
  }
}

inline Vec config_objective(const RunConfig& cfg) {
  return cfg.objective ? *cfg.objective : ones(cfg.n);
}

inline std::vector<long long> config_schedule(const RunConfig& cfg) {
  const int max_exp = static_cast<int>(std::min<long long>(cfg.k_max, 62));
  return doubling_schedule(max_exp);
}

inline int cmd_analyze(const RunConfig& cfg) {
  const Vec c = config_objective(cfg);
  const CanonicalInstance instance = make_hyperboloid_instance(cfg.n, 1.0, c, 0.0);

  std::optional<RegularizationPath> path;
  if (c[0] > 0.0)
    path = regularization_path(instance, config_schedule(cfg), 1e-12);

  const DiagnosisReport report = classify(instance, path, cfg.tol);

  std::vector<OutputFile> files;
  if (cfg.wants("json"))
    files.push_back({"analysis.json", render_analysis_json(report, cfg)});
  write_outputs(cfg.output_dir, files);

  std::cout << "classification: " << to_string(report.classification) << "\n";
  for (const auto& d : report.paper_discrepancies)
    std::cout << "discrepancy [" << d.section << "] " << d.id << "\n";
  return report.classification == Classification::SolvableCertain ? kExitSuccess
                                                                  : kExitNonSolvable;
}

inline int cmd_sequence(const RunConfig& cfg) {
  if (cfg.n != 2) {
    std::cerr << "sequence: requires --n 2\n";
    return kExitUsage;
  }
  std::vector<OutputFile> files;
  if (cfg.wants("csv"))
    files.push_back({"sequence.csv", render_sequence_csv(cfg.k_max)});
  write_outputs(cfg.output_dir, files);
  std::cout << "sequence: " << (cfg.k_max + 1) << " points\n";
  return kExitSuccess;
}

inline int cmd_regpath(const RunConfig& cfg) {
  const Vec c = config_objective(cfg);
  if (!(c[0] > 0.0)) {
    std::cerr << "regpath: requires an objective with positive first entry\n";
    return kExitUsage;
  }
  const CanonicalInstance instance = make_hyperboloid_instance(cfg.n, 1.0, c, 0.0);
  const RegularizationPath path =
      regularization_path(instance, config_schedule(cfg), 1e-12);

  std::vector<OutputFile> files;
  if (cfg.wants("csv")) files.push_back({"regpath.csv", render_regpath_csv(path)});
  if (cfg.wants("svg")) files.push_back({"figure2.svg", render_figure2(path)});
  write_outputs(cfg.output_dir, files);

  std::cout << "regpath: final objective value "
            << format_g17(path.entries.back().solve.objective_value) << "\n";
  return kExitSuccess;
}

inline int cmd_poly(const RunConfig& cfg) {
  if (cfg.n != 2) {
    std::cerr << "poly: requires --n 2\n";
    return kExitUsage;
  }
  const Vec c = config_objective(cfg);
  const CanonicalInstance instance = make_hyperboloid_instance(cfg.n, 1.0, c, 0.0);

  std::vector<PolyCsvRow> rows;
  const long long inner_max = std::min<long long>(cfg.k_max, 64);
  for (long long K = 0; K <= inner_max; ++K) {
    const PolyhedralApprox approx = poly_inner(instance, static_cast<int>(K));
    const LpOutcome out = lp_solve(approx_lp(approx, c));
    if (!lp_verify(approx_lp(approx, c), out))
      throw NumericalError("poly: inner LP outcome failed verification");
    rows.push_back({"inner", K, out.status, out.value});
  }

  std::vector<long long> counts = {3};
  for (long long m = 4; m < static_cast<long long>(cfg.theta_count); m *= 2)
    counts.push_back(m);
  if (cfg.theta_count >= 4) counts.push_back(static_cast<long long>(cfg.theta_count));
  bool outer_unbounded = false;
  for (long long m : counts) {
    const PolyhedralApprox approx =
        poly_outer_theta(instance, static_cast<std::size_t>(m), cfg.include_endpoints);
    const LpOutcome out = lp_solve(approx_lp(approx, c));
    if (!lp_verify(approx_lp(approx, c), out))
      throw NumericalError("poly: outer LP outcome failed verification");
    if (out.status == LpStatus::Unbounded) outer_unbounded = true;
    rows.push_back({"outer", m, out.status, out.value});
  }

  std::vector<OutputFile> files;
  if (cfg.wants("csv")) files.push_back({"poly.csv", render_poly_csv(rows)});
  write_outputs(cfg.output_dir, files);
  std::cout << "poly: " << rows.size() << " rows\n";
  if (outer_unbounded)
    std::cout << "note: outer relaxations are unbounded for this objective; "
                 "every finite angle grid leaves a descent recession direction "
                 "(certificate rays verified)\n";
  return kExitSuccess;
}

inline int cmd_figure1(const RunConfig& cfg) {
  if (cfg.n != 2) {
    std::cerr << "figure1: requires --n 2\n";
    return kExitUsage;
  }
  std::vector<OutputFile> files;
  if (cfg.wants("svg")) files.push_back({"figure1.svg", render_figure1(cfg.k_max)});
  write_outputs(cfg.output_dir, files);
  std::cout << "figure1: written\n";
  return kExitSuccess;
}

inline int run_command(const RunConfig& cfg) {
  try {
    validate(cfg);
    if (cfg.command == "analyze") return cmd_analyze(cfg);
    if (cfg.command == "sequence") return cmd_sequence(cfg);
    if (cfg.command == "regpath") return cmd_regpath(cfg);
    if (cfg.command == "poly") return cmd_poly(cfg);
    if (cfg.command == "figure1") return cmd_figure1(cfg);
    std::cerr << "unknown command '" << cfg.command << "'\n";
    return kExitUsage;
  } catch (const UnsupportedError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DimensionError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InternalConsistencyError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace attainment
