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

#ifndef DPCOVER_CLI_SVG_H_
#define DPCOVER_CLI_SVG_H_

#include <string>
#include <vector>

namespace dpcover::cli {

struct SvgSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f77b4";
  bool line = true;
  double marker_radius = 0.0;  // 0: no markers
  bool dashed = false;
  // Per-point marker colors; overrides `color` for markers when non-empty.
  std::vector<std::string> point_colors;
};

// Filled rectangle in data coordinates.
struct SvgCell {
  double x0, y0, x1, y1;
  std::string color;
};

// Small static chart renderer: axes with ticks, lines, markers and cells.
class SvgPlot {
 public:
  SvgPlot(std::string title, std::string x_label, std::string y_label);

  SvgPlot& log_x(bool on = true);
  SvgPlot& log_y(bool on = true);
  SvgPlot& add(SvgSeries series);
  SvgPlot& add_cell(SvgCell cell);

  std::string render(int width = 720, int height = 480) const;

 private:
  std::string title_, x_label_, y_label_;
  bool log_x_ = false;
  bool log_y_ = false;
  std::vector<SvgSeries> series_;
  std::vector<SvgCell> cells_;
};

// Categorical palette.
std::string palette_color(std::size_t k);

// Perceptual ramp from dark blue (t = 0) to yellow (t = 1).
std::string ramp_color(double t);

}  // namespace dpcover::cli

#endif  // DPCOVER_CLI_SVG_H_
