// attainment-lab - attainment diagnostics for second-order cone programs
// Copyright 2026 attainment-lab contributors
// Licensed under Apache 2.0

#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "attainment/config.hpp"
#include "attainment/diagnosis.hpp"
#include "attainment/version.hpp"

namespace attainment {

using Json = nlohmann::json;

inline Json to_json(const RunConfig& cfg) {
  Json j;
  j["command"] = cfg.command;
  j["n"] = cfg.n;
  j["tol"] = cfg.tol;
  j["k_max"] = cfg.k_max;
  j["theta_count"] = cfg.theta_count;
  j["include_endpoints"] = cfg.include_endpoints;
  j["objective"] = cfg.objective ? Json(*cfg.objective) : Json(nullptr);
  j["output_dir"] = cfg.output_dir;
  j["formats"] = cfg.formats;
  return j;
}

inline RunConfig run_config_from_json(const Json& j) {
  RunConfig cfg;
  cfg.command = j.at("command").get<std::string>();
  cfg.n = j.at("n").get<std::size_t>();
  cfg.tol = j.at("tol").get<double>();
  cfg.k_max = j.at("k_max").get<long long>();
  cfg.theta_count = j.at("theta_count").get<std::size_t>();
  cfg.include_endpoints = j.at("include_endpoints").get<bool>();
  if (!j.at("objective").is_null()) cfg.objective = j.at("objective").get<Vec>();
  cfg.output_dir = j.at("output_dir").get<std::string>();
  cfg.formats = j.at("formats").get<std::vector<std::string>>();
  return cfg;
}

inline Json to_json(const DiagnosisReport& r) {
  Json j;
  j["n"] = r.n;
  j["objective"] = r.objective;
  j["rho"] = r.rho;
  j["objective_offset"] = r.objective_offset;
  j["polyhedral"] = r.polyhedral;
  j["tol"] = r.tol;

  Json feas;
  feas["holds"] = r.feasible.feasible;
  feas["witness"] = r.feasible.witness ? Json(*r.feasible.witness) : Json(nullptr);
  j["feasible"] = std::move(feas);

  Json slater;
  slater["holds"] = r.slater.holds;
  slater["witness"] = r.slater.witness ? Json(*r.slater.witness) : Json(nullptr);
  slater["margin"] = r.slater.margin ? Json(*r.slater.margin) : Json(nullptr);
  j["slater"] = std::move(slater);

  Json cop;
  cop["min_value"] = r.copositivity.min_value;
  cop["argmin_direction"] = r.copositivity.argmin_direction;
  cop["strict"] = r.copositivity.strict;
  cop["copositive"] = r.copositivity.copositive;
  j["copositivity"] = std::move(cop);

  j["classification"] = to_string(r.classification);

  if (r.evidence) {
    Json ev;
    ev["entries"] = r.evidence->entries;
    ev["values_decreasing"] = r.evidence->values_decreasing;
    ev["norms_increasing"] = r.evidence->norms_increasing;
    ev["first_value"] = r.evidence->first_value;
    ev["final_value"] = r.evidence->final_value;
    ev["first_norm"] = r.evidence->first_norm;
    ev["max_norm"] = r.evidence->max_norm;
    ev["strength"] = to_string(r.evidence->strength);
    j["evidence"] = std::move(ev);
  } else {
    j["evidence"] = nullptr;
  }

  if (r.dual_summary) {
    Json ds;
    ds["status"] = r.dual_summary->status;
    ds["point"] = r.dual_summary->point ? Json(*r.dual_summary->point) : Json(nullptr);
    ds["value"] = r.dual_summary->value ? Json(*r.dual_summary->value) : Json(nullptr);
    j["dual_summary"] = std::move(ds);
  } else {
    j["dual_summary"] = nullptr;
  }

  Json discrepancies = Json::array();
  for (const auto& d : r.paper_discrepancies) {
    Json dj;
    dj["id"] = d.id;
    dj["section"] = d.section;
    dj["detail"] = d.detail;
    discrepancies.push_back(std::move(dj));
  }
  j["paper_discrepancies"] = std::move(discrepancies);
  return j;
}

inline Classification classification_from_string(const std::string& s) {
  if (s == "infeasible") return Classification::Infeasible;
  if (s == "unbounded") return Classification::Unbounded;
  if (s == "solvable_certain") return Classification::SolvableCertain;
  if (s == "attainment_suspect") return Classification::AttainmentSuspect;
  throw UnsupportedError("unknown classification '" + s + "'");
}

inline EvidenceStrength evidence_strength_from_string(const std::string& s) {
  if (s == "none") return EvidenceStrength::None;
  if (s == "weak") return EvidenceStrength::Weak;
  if (s == "strong") return EvidenceStrength::Strong;
  throw UnsupportedError("unknown evidence strength '" + s + "'");
}

inline DiagnosisReport report_from_json(const Json& j) {
  DiagnosisReport r;
  r.n = j.at("n").get<std::size_t>();
  r.objective = j.at("objective").get<Vec>();
  r.rho = j.at("rho").get<double>();
  r.objective_offset = j.at("objective_offset").get<double>();
  r.polyhedral = j.at("polyhedral").get<bool>();
  r.tol = j.at("tol").get<double>();

  const Json& feas = j.at("feasible");
  r.feasible.feasible = feas.at("holds").get<bool>();
  if (!feas.at("witness").is_null()) r.feasible.witness = feas.at("witness").get<Vec>();

  const Json& slater = j.at("slater");
  r.slater.holds = slater.at("holds").get<bool>();
  if (!slater.at("witness").is_null()) r.slater.witness = slater.at("witness").get<Vec>();
  if (!slater.at("margin").is_null()) r.slater.margin = slater.at("margin").get<double>();

  const Json& cop = j.at("copositivity");
  r.copositivity.min_value = cop.at("min_value").get<double>();
  r.copositivity.argmin_direction = cop.at("argmin_direction").get<Vec>();
  r.copositivity.strict = cop.at("strict").get<bool>();
  r.copositivity.copositive = cop.at("copositive").get<bool>();

  r.classification = classification_from_string(j.at("classification").get<std::string>());

  if (!j.at("evidence").is_null()) {
    const Json& ev = j.at("evidence");
    RegularizationEvidence e;
    e.entries = ev.at("entries").get<std::size_t>();
    e.values_decreasing = ev.at("values_decreasing").get<bool>();
    e.norms_increasing = ev.at("norms_increasing").get<bool>();
    e.first_value = ev.at("first_value").get<double>();
    e.final_value = ev.at("final_value").get<double>();
    e.first_norm = ev.at("first_norm").get<double>();
    e.max_norm = ev.at("max_norm").get<double>();
    e.strength = evidence_strength_from_string(ev.at("strength").get<std::string>());
    r.evidence = e;
  }

  if (!j.at("dual_summary").is_null()) {
    const Json& ds = j.at("dual_summary");
    DualSummary d;
    d.status = ds.at("status").get<std::string>();
    if (!ds.at("point").is_null()) d.point = ds.at("point").get<Vec>();
    if (!ds.at("value").is_null()) d.value = ds.at("value").get<double>();
    r.dual_summary = std::move(d);
  }

  for (const Json& dj : j.at("paper_discrepancies")) {
    r.paper_discrepancies.push_back(Discrepancy{dj.at("id").get<std::string>(),
                                                dj.at("section").get<std::string>(),
                                                dj.at("detail").get<std::string>()});
  }
  return r;
}

/// The full analysis document: tool version, invocation, report.
inline std::string render_analysis_json(const DiagnosisReport& report,
                                        const RunConfig& cfg) {
  Json j;
  j["tool_version"] = kVersion;
  j["config"] = to_json(cfg);
  j["report"] = to_json(report);
  return j.dump(2) + "\n";
}

struct AnalysisDocument {
  std::string tool_version;
  RunConfig config;
  DiagnosisReport report;
};

inline AnalysisDocument parse_analysis_json(const std::string& text) {
  const Json j = Json::parse(text);
  AnalysisDocument doc;
  doc.tool_version = j.at("tool_version").get<std::string>();
  doc.config = run_config_from_json(j.at("config"));
  doc.report = report_from_json(j.at("report"));
  return doc;
}

}  // namespace attainment
