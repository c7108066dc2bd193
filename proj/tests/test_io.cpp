// attainment-lab - attainment diagnostics for second-order cone programs
// Copyright 2026 attainment-lab contributors
// Licensed under Apache 2.0

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "support.hpp"

using namespace attainment;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size()))
    ++count;
  return count;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string f;
  while (std::getline(ss, f, ',')) fields.push_back(f);
  return fields;
}

std::string attribute_of(const std::string& element, const std::string& name) {
  const std::string key = name + "=\"";
  const auto pos = element.find(key);
  REQUIRE(pos != std::string::npos);
  const auto end = element.find('"', pos + key.size());
  return element.substr(pos + key.size(), end - pos - key.size());
}

}  // namespace

TEST_CASE("17-digit formatting round-trips doubles") {
  for (double v : {std::numbers::pi, std::sqrt(2.0) - 1.0, 1.0 / 3.0, 5e-7, -123.456}) {
    CHECK(std::stod(format_g17(v)) == v);
  }
}

TEST_CASE("analysis JSON round-trips") {
  const auto inst = build_canonical(2);
  const auto path = regularization_path(inst, doubling_schedule(12), 1e-12);
  const auto report = classify(inst, path, 1e-9);

  RunConfig cfg;
  cfg.command = "analyze";
  cfg.n = 2;
  cfg.k_max = 12;
  cfg.output_dir = "out";
  cfg.objective = Vec{1, 1};

  const std::string text = render_analysis_json(report, cfg);
  const auto doc = parse_analysis_json(text);
  CHECK(doc.tool_version == kVersion);
  CHECK(doc.config == cfg);
  CHECK(doc.report == report);

  // Serialization is stable byte-for-byte.
  CHECK(render_analysis_json(doc.report, doc.config) == text);
}

TEST_CASE("sequence CSV schema") {
  const std::string csv = render_sequence_csv(1);
  const auto lines = split_lines(csv);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "k,x1,x2,f,dir_err");

  const auto row0 = split_csv(lines[1]);
  REQUIRE(row0.size() == 5);
  CHECK(std::stod(row0[1]) == 1.0);
  CHECK(std::stod(row0[3]) == 1.0);

  const auto row1 = split_csv(lines[2]);
  CHECK(std::stod(row1[1]) == std::sqrt(2.0));
  CHECK(std::stod(row1[2]) == -1.0);
  CHECK(std::stod(row1[3]) == minimizing_sequence(1).f);
}

TEST_CASE("regularization path CSV schema") {
  const auto inst = build_canonical(2);
  const auto path = regularization_path(inst, doubling_schedule(8), 1e-12);
  const auto lines = split_lines(render_regpath_csv(path));
  REQUIRE(lines.size() == 10);
  CHECK(lines[0] == "k,epsilon,f,x_norm,kkt");
  double prev = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = split_csv(lines[i]);
    REQUIRE(f.size() == 5);
    const double value = std::stod(f[2]);
    CHECK(value < prev);
    prev = value;
    CHECK(std::stod(f[1]) == 1.0 / std::stod(f[0]));
  }
}

TEST_CASE("poly CSV schema") {
  std::vector<PolyCsvRow> rows;
  rows.push_back({"inner", 0, LpStatus::Optimal, 1.0});
  rows.push_back({"outer", 8, LpStatus::Unbounded, std::nullopt});
  const auto lines = split_lines(render_poly_csv(rows));
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "kind,param,status,value");
  CHECK(lines[1] == "inner,0,optimal,1");
  CHECK(lines[2] == "outer,8,unbounded,");
}

TEST_CASE("figure1 structure") {
  const std::string svg = render_figure1(3);

  CHECK(count_occurrences(svg, "<polyline") == 1);
  CHECK(count_occurrences(svg, "viewBox=") == 1);

  // Boundary sampled densely: the single polyline carries >= 256 points.
  const auto poly_pos = svg.find("<polyline");
  const auto points = attribute_of(svg.substr(poly_pos, svg.find("/>", poly_pos) - poly_pos),
                                   "points");
  CHECK(count_occurrences(points, ",") >= 256);

  // The k = 1 sequence point is rendered at its data coordinates.
  const auto c_pos = svg.find("data-k=\"1\"");
  REQUIRE(c_pos != std::string::npos);
  const auto el_start = svg.rfind("<circle", c_pos);
  const auto el = svg.substr(el_start, svg.find("/>", el_start) - el_start);
  CHECK(attribute_of(el, "data-x1") == format_g17(std::sqrt(2.0)));
  CHECK(attribute_of(el, "data-x2") == format_g17(-1.0));

  CHECK(count_occurrences(svg, "<circle") == 4);  // k = 0..3
  CHECK(count_occurrences(svg, "class=\"ray\"") == 1);

  // Deterministic output.
  CHECK(render_figure1(3) == svg);
}

TEST_CASE("figure2 structure and validation") {
  const auto inst = build_canonical(2);
  const auto path = regularization_path(inst, doubling_schedule(6), 1e-12);
  const std::string svg = render_figure2(path);
  CHECK(count_occurrences(svg, "<polyline") == 1);
  CHECK(count_occurrences(svg, "<circle") == path.entries.size());
  CHECK(svg.find("data-x=\"1\"") != std::string::npos);
  CHECK(render_figure2(path) == svg);

  FigureSpec empty;
  CHECK_THROWS_AS(render_figure(empty), UnsupportedError);

  FigureSpec bad_log;
  bad_log.log_y = true;
  bad_log.series.push_back(Series{"s", {{1.0, -1.0}}});
  CHECK_THROWS_AS(render_figure(bad_log), NumericalError);

  FigureSpec nonfinite;
  nonfinite.series.push_back(
      Series{"s", {{std::numeric_limits<double>::quiet_NaN(), 1.0}}});
  CHECK_THROWS_AS(render_figure(nonfinite), NumericalError);
}
