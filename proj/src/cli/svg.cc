// Copyright 2026 The dpcover Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/svg.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>


namespace dpcover::cli {
namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

struct Axis {
  double lo = 0.0;
  double hi = 1.0;
  bool log = false;

  double map(double v) const {
    const double t = log ? (std::log10(v) - lo) / (hi - lo) : (v - lo) / (hi - lo);
    return t;
  }
  bool usable(double v) const {
    return std::isfinite(v) && (!log || v > 0.0);
  }
};

Axis fit_axis(const std::vector<double>& values, bool log) {
  Axis axis;
  axis.log = log;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (double v : values) {
    if (!axis.usable(v)) continue;
    const double t = log ? std::log10(v) : v;
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  if (!std::isfinite(lo)) {
    lo = 0.0;
    hi = 1.0;
  }
  if (hi - lo <= 0.0) {
    const double pad = lo == 0.0 ? 1.0 : std::abs(lo) * 0.1;
    lo -= pad;
    hi += pad;
  } else if (!log) {
    const double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;
  }
  axis.lo = lo;
  axis.hi = hi;
  return axis;
}

std::vector<double> ticks(const Axis& axis) {
  std::vector<double> out;
  if (axis.log) {
    for (double e = std::ceil(axis.lo); e <= std::floor(axis.hi); e += 1.0) {
      out.push_back(std::pow(10.0, e));
    }
    if (out.size() < 2) {
      out = {std::pow(10.0, axis.lo), std::pow(10.0, axis.hi)};
    }
    return out;
  }
  const double span = axis.hi - axis.lo;
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    step = m * mag;
    if (step >= raw) break;
  }
  for (double v = std::ceil(axis.lo / step) * step; v <= axis.hi + 1e-12 * span;
       v += step) {
    out.push_back(std::abs(v) < 1e-12 * span ? 0.0 : v);
  }
  return out;
}

}  // namespace

SvgPlot::SvgPlot(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)),
      x_label_(std::move(x_label)),
      y_label_(std::move(y_label)) {}

SvgPlot& SvgPlot::log_x(bool on) {
  log_x_ = on;
  return *this;
}

SvgPlot& SvgPlot::log_y(bool on) {
  log_y_ = on;
  return *this;
}

SvgPlot& SvgPlot::add(SvgSeries series) {
  series_.push_back(std::move(series));
  return *this;
}

SvgPlot& SvgPlot::add_cell(SvgCell cell) {
  cells_.push_back(std::move(cell));
  return *this;
}

std::string SvgPlot::render(int width, int height) const {
  const double left = 80, right = 170, top = 40, bottom = 60;
  const double pw = width - left - right;
  const double ph = height - top - bottom;

  std::vector<double> xs, ys;
  for (const auto& s : series_) {
    xs.insert(xs.end(), s.x.begin(), s.x.end());
    ys.insert(ys.end(), s.y.begin(), s.y.end());
  }
  for (const auto& c : cells_) {
    xs.push_back(c.x0);
    xs.push_back(c.x1);
    ys.push_back(c.y0);
    ys.push_back(c.y1);
  }
  const Axis ax = fit_axis(xs, log_x_);
  const Axis ay = fit_axis(ys, log_y_);
  auto px = [&](double v) { return left + ax.map(v) * pw; };
  auto py = [&](double v) { return top + (1.0 - ay.map(v)) * ph; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<clipPath id=\"plot\"><rect x=\"" << num(left) << "\" y=\"" << num(top)
      << "\" width=\"" << num(pw) << "\" height=\"" << num(ph) << "\"/></clipPath>\n";

  for (const auto& c : cells_) {
    const double x0 = px(c.x0), x1 = px(c.x1), y0 = py(c.y0), y1 = py(c.y1);
    svg << "<rect clip-path=\"url(#plot)\" x=\"" << num(std::min(x0, x1))
        << "\" y=\"" << num(std::min(y0, y1)) << "\" width=\""
        << num(std::abs(x1 - x0)) << "\" height=\"" << num(std::abs(y1 - y0))
        << "\" fill=\"" << c.color << "\"/>\n";
  }

  svg << "<rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\""
      << num(pw) << "\" height=\"" << num(ph)
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (double t : ticks(ax)) {
    const double x = px(t);
    svg << "<line x1=\"" << num(x) << "\" y1=\"" << num(top + ph) << "\" x2=\""
        << num(x) << "\" y2=\"" << num(top + ph + 5) << "\" stroke=\"black\"/>"
        << "<text x=\"" << num(x) << "\" y=\"" << num(top + ph + 18)
        << "\" text-anchor=\"middle\">" << tick_label(t) << "</text>\n";
  }
  for (double t : ticks(ay)) {
    const double y = py(t);
    svg << "<line x1=\"" << num(left - 5) << "\" y1=\"" << num(y) << "\" x2=\""
        << num(left) << "\" y2=\"" << num(y) << "\" stroke=\"black\"/>"
        << "<text x=\"" << num(left - 8) << "\" y=\"" << num(y + 4)
        << "\" text-anchor=\"end\">" << tick_label(t) << "</text>\n";
  }
  svg << "<text x=\"" << num(left + pw / 2) << "\" y=\"" << num(top - 14)
      << "\" text-anchor=\"middle\" font-size=\"14\">" << escape(title_)
      << "</text>\n";
  svg << "<text x=\"" << num(left + pw / 2) << "\" y=\"" << num(height - 16)
      << "\" text-anchor=\"middle\">" << escape(x_label_) << "</text>\n";
  svg << "<text transform=\"translate(18," << num(top + ph / 2)
      << ") rotate(-90)\" text-anchor=\"middle\">" << escape(y_label_)
      << "</text>\n";

  std::size_t legend_row = 0;
  for (const auto& s : series_) {
    if (s.line) {
      svg << "<polyline clip-path=\"url(#plot)\" fill=\"none\" stroke=\""
          << s.color << "\" stroke-width=\"1.5\""
          << (s.dashed ? " stroke-dasharray=\"5,4\"" : "") << " points=\"";
      for (std::size_t k = 0; k < s.x.size() && k < s.y.size(); ++k) {
        if (!ax.usable(s.x[k]) || !ay.usable(s.y[k])) continue;
        svg << num(px(s.x[k])) << ',' << num(py(s.y[k])) << ' ';
      }
      svg << "\"/>\n";
    }
    if (s.marker_radius > 0.0) {
      for (std::size_t k = 0; k < s.x.size() && k < s.y.size(); ++k) {
        if (!ax.usable(s.x[k]) || !ay.usable(s.y[k])) continue;
        const std::string& fill =
            k < s.point_colors.size() ? s.point_colors[k] : s.color;
        svg << "<circle clip-path=\"url(#plot)\" cx=\"" << num(px(s.x[k]))
            << "\" cy=\"" << num(py(s.y[k])) << "\" r=\"" << num(s.marker_radius)
            << "\" fill=\"" << fill << "\" fill-opacity=\"0.8\"/>\n";
      }
    }
    if (!s.label.empty()) {
      const double ly = top + 10 + 16 * static_cast<double>(legend_row++);
      svg << "<rect x=\"" << num(left + pw + 12) << "\" y=\"" << num(ly - 8)
          << "\" width=\"10\" height=\"10\" fill=\"" << s.color << "\"/>"
          << "<text x=\"" << num(left + pw + 28) << "\" y=\"" << num(ly + 1)
          << "\">" << escape(s.label) << "</text>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string palette_color(std::size_t k) {
  static const char* const kColors[] = {"#1f77b4", "#ff7f0e", "#2ca02c",
                                        "#d62728", "#9467bd", "#8c564b",
                                        "#e377c2", "#7f7f7f", "#bcbd22",
                                        "#17becf"};
  return kColors[k % (sizeof(kColors) / sizeof(kColors[0]))];
}

std::string ramp_color(double t) {
  if (!std::isfinite(t)) t = 0.0;
  t = std::clamp(t, 0.0, 1.0);
  // Piecewise-linear through five viridis anchors.
  static const double kAnchors[5][3] = {{68, 1, 84},
                                        {59, 82, 139},
                                        {33, 145, 140},
                                        {94, 201, 98},
                                        {253, 231, 37}};
  const double pos = t * 4.0;
  const int k = std::min(3, static_cast<int>(pos));
  const double f = pos - k;
  char buf[8];
  int rgb[3];
  for (int c = 0; c < 3; ++c) {
    rgb[c] = static_cast<int>(
        std::lround(kAnchors[k][c] + f * (kAnchors[k + 1][c] - kAnchors[k][c])));
  }
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", rgb[0], rgb[1], rgb[2]);
  return buf;
}

}  // namespace dpcover::cli
