// attainment-lab - attainment diagnostics for second-order cone programs
// Copyright 2026 attainment-lab contributors
// Licensed under Apache 2.0

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "attainment/attainment.hpp"
#include "attainment/version.hpp"

namespace {

// "--objective 1,0.5" -> {1.0, 0.5}
attainment::Vec parse_csv_floats(const std::string& text) {
  attainment::Vec values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    const double v = std::stod(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("trailing characters");
    values.push_back(v);
  }
  if (values.empty()) throw std::invalid_argument("empty list");
  return values;
}

void add_common_options(CLI::App* cmd, attainment::RunConfig& cfg,
                        std::string& objective_text, std::string& formats_text) {
  cmd->add_option("--n", cfg.n, "dimension of the instance (>= 2)");
  cmd->add_option("--tol", cfg.tol, "classification tolerance (> 0)");
  cmd->add_option("--k-max", cfg.k_max,
                  "sequence length / largest schedule exponent / inner depth");
  cmd->add_option("--theta-count", cfg.theta_count, "size of the outer angle grid");
  cmd->add_option("--include-endpoints", cfg.include_endpoints,
                  "include the grid endpoints at +-pi/4");
  cmd->add_option("--objective", objective_text,
                  "comma-separated objective coefficients (default: all ones)");
  cmd->add_option("--out", cfg.output_dir, "output directory");
  cmd->add_option("--formats", formats_text,
                  "comma-separated subset of json,csv,svg");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"attainment diagnostics for second-order cone programs"};
  app.set_version_flag("--version", attainment::kVersion);
  app.require_subcommand(1);

  attainment::RunConfig cfg;
  std::string objective_text;
  std::string formats_text;

  for (const char* name : {"analyze", "sequence", "regpath", "poly", "figure1"}) {
    CLI::App* cmd = app.add_subcommand(name);
    add_common_options(cmd, cfg, objective_text, formats_text);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return attainment::kExitUsage;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  try {
    if (!objective_text.empty()) cfg.objective = parse_csv_floats(objective_text);
    if (!formats_text.empty()) {
      cfg.formats.clear();
      std::stringstream ss(formats_text);
      std::string item;
      while (std::getline(ss, item, ',')) cfg.formats.push_back(item);
    }
  } catch (const std::exception& e) {
    std::cerr << "usage error: bad option value (" << e.what() << ")\n";
    return attainment::kExitUsage;
  }

  return attainment::run_command(cfg);
}
