// attainment-lab - attainment diagnostics for second-order cone programs
// Copyright 2026 attainment-lab contributors
// Licensed under Apache 2.0

#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "attainment/diagnosis.hpp"
#include "attainment/sequence.hpp"

namespace attainment {

// Hand-emitted SVG: no plotting dependency, and the figures regression-test
// as plain text.

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

struct FigureSpec {
  std::vector<Series> series;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
};

namespace svg_detail {

inline constexpr double kWidth = 640.0;
inline constexpr double kHeight = 480.0;
inline constexpr double kPad = 48.0;

inline std::string px(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace svg_detail

inline void validate_figure(const FigureSpec& spec) {
  if (spec.series.empty())
    throw UnsupportedError("figure: at least one series required");
  for (const auto& s : spec.series) {
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y))
        throw NumericalError("figure: non-finite point");
      if ((spec.log_x && x <= 0.0) || (spec.log_y && y <= 0.0))
        throw NumericalError("figure: log axis requires positive values");
    }
  }
}

/// Generic scatter-with-line chart; used for the regularization-path figure.
inline std::string render_figure(const FigureSpec& spec) {
  using namespace svg_detail;
  validate_figure(spec);

  const auto tx = [&](double v) { return spec.log_x ? std::log10(v) : v; };
  const auto ty = [&](double v) { return spec.log_y ? std::log10(v) : v; };

  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool first = true;
  for (const auto& s : spec.series) {
    for (const auto& [x, y] : s.points) {
      const double u = tx(x), v = ty(y);
      if (first) {
        xmin = xmax = u;
        ymin = ymax = v;
        first = false;
      } else {
        xmin = std::min(xmin, u);
        xmax = std::max(xmax, u);
        ymin = std::min(ymin, v);
        ymax = std::max(ymax, v);
      }
    }
  }
  if (first) throw UnsupportedError("figure: no points");
  if (xmax - xmin <= 0.0) xmax = xmin + 1.0;
  if (ymax - ymin <= 0.0) ymax = ymin + 1.0;

  const auto mapx = [&](double v) {
    return kPad + (tx(v) - xmin) / (xmax - xmin) * (kWidth - 2 * kPad);
  };
  const auto mapy = [&](double v) {
    return kHeight - kPad - (ty(v) - ymin) / (ymax - ymin) * (kHeight - 2 * kPad);
  };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 640 480\">\n";
  out += "  <rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"white\"/>\n";
  out += "  <line x1=\"" + px(kPad) + "\" y1=\"" + px(kHeight - kPad) + "\" x2=\"" +
         px(kWidth - kPad) + "\" y2=\"" + px(kHeight - kPad) +
         "\" stroke=\"black\"/>\n";
  out += "  <line x1=\"" + px(kPad) + "\" y1=\"" + px(kPad) + "\" x2=\"" + px(kPad) +
         "\" y2=\"" + px(kHeight - kPad) + "\" stroke=\"black\"/>\n";
  out += "  <text x=\"" + px(kWidth / 2) + "\" y=\"" + px(kHeight - 10.0) +
         "\" text-anchor=\"middle\" font-size=\"14\">" + spec.x_label + "</text>\n";
  out += "  <text x=\"14\" y=\"" + px(kHeight / 2) +
         "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 14 " +
         px(kHeight / 2) + ")\">" + spec.y_label + "</text>\n";

  for (const auto& s : spec.series) {
    out += "  <polyline fill=\"none\" stroke=\"firebrick\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      if (i) out += " ";
      out += px(mapx(s.points[i].first)) + "," + px(mapy(s.points[i].second));
    }
    out += "\"/>\n";
    for (const auto& [x, y] : s.points) {
      out += "  <circle cx=\"" + px(mapx(x)) + "\" cy=\"" + px(mapy(y)) +
             "\" r=\"3\" fill=\"firebrick\" data-x=\"" + format_g17(x) +
             "\" data-y=\"" + format_g17(y) + "\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

/// The feasible-set picture: gray region above the boundary curve
/// x_1 = sqrt(1 + x_2^2), the minimizing-sequence points on the boundary, and
/// the limiting recession ray through (1/sqrt(2), -1/sqrt(2)).  Exactly one
/// polyline element (the boundary); deterministic output for a fixed k_max.
inline std::string render_figure1(long long k_max, std::size_t boundary_samples = 512) {
  using namespace svg_detail;
  if (boundary_samples < 256) boundary_samples = 256;
  const double L = static_cast<double>(k_max) + 1.0;
  const double x1_max = std::sqrt(1.0 + L * L);

  const auto mapx = [&](double x2) {
    return kPad + (x2 + L) / (2.0 * L) * (kWidth - 2 * kPad);
  };
  const auto mapy = [&](double x1) {
    return kHeight - kPad - x1 / x1_max * (kHeight - 2 * kPad);
  };
  const auto boundary = [](double x2) { return std::sqrt(1.0 + x2 * x2); };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 640 480\">\n";
  out += "  <rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"white\"/>\n";

  // Feasible region: the area above the boundary, closed along the top edge.
  std::string region = "  <polygon fill=\"lightgray\" stroke=\"none\" points=\"";
  std::string curve;
  for (std::size_t i = 0; i < boundary_samples; ++i) {
    const double x2 = -L + 2.0 * L * static_cast<double>(i) /
                               static_cast<double>(boundary_samples - 1);
    const double x1 = boundary(x2);
    if (i) curve += " ";
    curve += px(mapx(x2)) + "," + px(mapy(x1));
  }
  region += curve + " " + px(mapx(L)) + "," + px(mapy(x1_max)) + " " + px(mapx(-L)) +
            "," + px(mapy(x1_max)) + "\"/>\n";
  out += region;

  out += "  <polyline class=\"boundary\" fill=\"none\" stroke=\"black\" "
         "stroke-width=\"1.5\" points=\"" + curve + "\"/>\n";

  // Limiting recession ray from the origin through (1/sqrt(2), -1/sqrt(2)).
  out += "  <line class=\"ray\" stroke=\"steelblue\" stroke-width=\"1.5\" x1=\"" +
         px(mapx(0.0)) + "\" y1=\"" + px(mapy(0.0)) + "\" x2=\"" + px(mapx(-L)) +
         "\" y2=\"" + px(mapy(L)) + "\"/>\n";

  for (long long k = 0; k <= k_max; ++k) {
    const SequencePoint p = minimizing_sequence(k);
    out += "  <circle class=\"seq\" r=\"4\" fill=\"firebrick\" cx=\"" +
           px(mapx(p.x[1])) + "\" cy=\"" + px(mapy(p.x[0])) + "\" data-k=\"" +
           std::to_string(k) + "\" data-x1=\"" + format_g17(p.x[0]) +
           "\" data-x2=\"" + format_g17(p.x[1]) + "\"/>\n";
  }

  out += "  <text x=\"" + px(kWidth / 2) + "\" y=\"" + px(kHeight - 10.0) +
         "\" text-anchor=\"middle\" font-size=\"14\">x2</text>\n";
  out += "  <text x=\"14\" y=\"" + px(kHeight / 2) +
         "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 14 " +
         px(kHeight / 2) + ")\">x1</text>\n";
  out += "</svg>\n";
  return out;
}

/// Figure for the regularization path: original objective value at the
/// regularized solution against k, on log-log axes.
inline std::string render_figure2(const RegularizationPath& path) {
  FigureSpec spec;
  Series s;
  s.label = "objective value";
  for (const auto& e : path.entries)
    s.points.emplace_back(static_cast<double>(e.k), e.solve.objective_value);
  spec.series.push_back(std::move(s));
  spec.x_label = "k (epsilon = 1/k)";
  spec.y_label = "objective value at regularized solution";
  spec.log_x = true;
  spec.log_y = true;
  return render_figure(spec);
}

}  // namespace attainment
