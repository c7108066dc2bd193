// attainment-lab - attainment diagnostics for second-order cone programs
// Copyright 2026 attainment-lab contributors
// Licensed under Apache 2.0

#pragma once

#include <algorithm>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "attainment/copositivity.hpp"
#include "attainment/dual.hpp"
#include "attainment/recession.hpp"
#include "attainment/regularization.hpp"

namespace attainment {

struct FeasibilityProbe {
  bool feasible = false;
  std::optional<Vec> witness;

  friend bool operator==(const FeasibilityProbe&, const FeasibilityProbe&) = default;
};

struct SlaterProbe {
  bool holds = false;
  std::optional<Vec> witness;
  std::optional<double> margin;  // dominant slack coordinate minus ||rest||

  friend bool operator==(const SlaterProbe&, const SlaterProbe&) = default;
};

/// Searches for a point mapped strictly inside the cone by testing
/// x = (rho + t, 0, ..., 0) for t = 1, 2, 4, ...; reports the first strict
/// witness and its margin.
inline SlaterProbe slater_probe(const CanonicalInstance& instance) {
  SlaterProbe probe;
  const std::size_t n = instance.feasible_set.n;
  const double rho = instance.feasible_set.rho;
  const auto& cone = instance.problem.constraint.cone;
  for (int e = 0; e <= 40; ++e) {
    Vec x(n, 0.0);
    x[0] = rho + static_cast<double>(1LL << e);
    const Vec slack = constraint_slack(x, instance.problem);
    const double margin = slack[dominant_index(cone)] - rest_norm(slack, cone);
    if (margin > 0.0) {
      probe.holds = true;
      probe.witness = std::move(x);
      probe.margin = margin;
      return probe;
    }
  }
  return probe;
}

enum class Classification { Infeasible, Unbounded, SolvableCertain, AttainmentSuspect };

inline const char* to_string(Classification c) {
  switch (c) {
    case Classification::Infeasible: return "infeasible";
    case Classification::Unbounded: return "unbounded";
    case Classification::SolvableCertain: return "solvable_certain";
    case Classification::AttainmentSuspect: return "attainment_suspect";
  }
  return "unknown";
}

enum class EvidenceStrength { None, Weak, Strong };

inline const char* to_string(EvidenceStrength s) {
  switch (s) {
    case EvidenceStrength::None: return "none";
    case EvidenceStrength::Weak: return "weak";
    case EvidenceStrength::Strong: return "strong";
  }
  return "unknown";
}

// Summary of a regularization path used as non-attainment evidence: values
// sliding toward the infimum while the minimizers run off to infinity.
struct RegularizationEvidence {
  std::size_t entries = 0;
  bool values_decreasing = false;  // strictly, along the path
  bool norms_increasing = false;   // non-decreasing, along the path
  double first_value = 0.0;
  double final_value = 0.0;
  double first_norm = 0.0;
  double max_norm = 0.0;
  EvidenceStrength strength = EvidenceStrength::None;

  friend bool operator==(const RegularizationEvidence&,
                         const RegularizationEvidence&) = default;
};

inline RegularizationEvidence summarize_evidence(const RegularizationPath& path) {
  RegularizationEvidence ev;
  ev.entries = path.entries.size();
  if (path.entries.empty()) return ev;
  ev.values_decreasing = true;
  ev.norms_increasing = true;
  ev.first_value = path.entries.front().solve.objective_value;
  ev.final_value = path.entries.back().solve.objective_value;
  ev.first_norm = norm(path.entries.front().solve.x_star);
  ev.max_norm = ev.first_norm;
  for (std::size_t i = 1; i < path.entries.size(); ++i) {
    const auto& prev = path.entries[i - 1].solve;
    const auto& cur = path.entries[i].solve;
    if (!(cur.objective_value < prev.objective_value)) ev.values_decreasing = false;
    if (norm(cur.x_star) < norm(prev.x_star) - 1e-12) ev.norms_increasing = false;
    ev.max_norm = std::max(ev.max_norm, norm(cur.x_star));
  }
  const bool values_collapse = ev.final_value <= 0.1 * std::abs(ev.first_value);
  const bool norms_diverge = ev.max_norm >= 10.0 * std::max(ev.first_norm, 1e-300);
  if (ev.values_decreasing && ev.norms_increasing && values_collapse && norms_diverge)
    ev.strength = EvidenceStrength::Strong;
  else if (ev.values_decreasing && (values_collapse || norms_diverge))
    ev.strength = EvidenceStrength::Weak;
  else
    ev.strength = EvidenceStrength::None;
  return ev;
}

struct DualSummary {
  std::string status;           // "infeasible" | "unique" | "interval"
  std::optional<Vec> point;
  std::optional<double> value;

  friend bool operator==(const DualSummary&, const DualSummary&) = default;
};

// A computed result that contradicts the published analysis of this family.
// `section` anchors the contradicted claim in that analysis.
struct Discrepancy {
  std::string id;
  std::string section;
  std::string detail;

  friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

struct DiagnosisReport {
  std::size_t n = 2;
  Vec objective;
  double rho = 1.0;
  double objective_offset = 0.0;
  bool polyhedral = false;
  double tol = 1e-9;
  FeasibilityProbe feasible;
  SlaterProbe slater;
  CopositivityCertificate copositivity;
  Classification classification = Classification::AttainmentSuspect;
  std::optional<RegularizationEvidence> evidence;
  std::optional<DualSummary> dual_summary;
  std::vector<Discrepancy> paper_discrepancies;

  friend bool operator==(const DiagnosisReport&, const DiagnosisReport&) = default;
};

inline std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

/// Decision table over the feasibility probe and copositivity certificate:
///   infeasible                          -> Infeasible
///   cert.min < -tol                     -> Unbounded
///   cert.min >  tol                     -> SolvableCertain (coercive)
///   |cert.min| <= tol, polyhedral set   -> SolvableCertain
///   |cert.min| <= tol, curved set       -> AttainmentSuspect, with the
///                                          regularization path attached as
///                                          evidence when provided.
inline DiagnosisReport classify(const CanonicalInstance& instance,
                                const std::optional<RegularizationPath>& reg_evidence,
                                double tol = 1e-9) {
  DiagnosisReport report;
  report.n = instance.feasible_set.n;
  report.objective = instance.problem.c;
  report.rho = instance.feasible_set.rho;
  report.objective_offset = instance.objective_offset;
  report.polyhedral = instance.polyhedral;
  report.tol = tol;

  Vec probe_point(report.n, 0.0);
  probe_point[0] = report.rho + 1.0;
  report.feasible.feasible = instance_feasible_at(instance, probe_point, 0.0);
  if (report.feasible.feasible) report.feasible.witness = probe_point;

  report.slater = slater_probe(instance);
  report.copositivity =
      copositivity_certificate(instance.problem.c, recession_cone(instance), tol);

  const DualSolution dual = dual_solve_canonical(dual_build(instance.problem));
  DualSummary ds;
  switch (dual.status) {
    case DualStatus::Infeasible: ds.status = "infeasible"; break;
    case DualStatus::Unique: ds.status = "unique"; break;
    case DualStatus::Interval: ds.status = "interval"; break;
  }
  ds.point = dual.point;
  ds.value = dual.value;
  report.dual_summary = std::move(ds);

  if (reg_evidence) report.evidence = summarize_evidence(*reg_evidence);

  const double m = report.copositivity.min_value;
  if (!report.feasible.feasible) {
    report.classification = Classification::Infeasible;
  } else if (m < -tol) {
    report.classification = Classification::Unbounded;
  } else if (m > tol) {
    report.classification = Classification::SolvableCertain;
  } else if (report.polyhedral) {
    report.classification = Classification::SolvableCertain;
  } else {
    report.classification = Classification::AttainmentSuspect;
  }

  // Computed facts that contradict the published analysis of this family.
  if (instance.problem.c == ones(report.n) && report.n >= 3 && m < -tol) {
    report.paper_discrepancies.push_back(Discrepancy{
        "copositivity_certificate_negative", "3.1",
        "the all-ones objective is claimed copositive on the recession cone for "
        "every dimension, but the exact certificate is " + format_g17(m) +
        " < 0 at direction h = (" + format_g17(report.copositivity.argmin_direction[0]) +
        ", ...), so the problem is unbounded"});
  }
  if (report.rho > 0.0 && report.slater.holds) {
    report.paper_discrepancies.push_back(Discrepancy{
        "strict_interior_point_found", "4.3",
        "claim: no point maps strictly inside the cone; computed: witness with "
        "margin " + format_g17(*report.slater.margin)});
  }
  return report;
}

}  // namespace attainment
