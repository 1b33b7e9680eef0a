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

#ifndef DPCOVER_CLI_CONFIG_H_
#define DPCOVER_CLI_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dpcover/types.h"
#include "json.hpp"

namespace dpcover::cli {

// Everything a subcommand needs. Written to <out>/config.json (without the
// output directory) after resolving defaults and the seed, so that
// `dpcover --config <out>/config.json --out <dir>` repeats the run.
struct RunConfig {
  std::string command;

  // Data.
  std::string data_path;
  std::vector<std::string> features;
  std::string label;
  std::string positive_label;
  std::optional<std::size_t> rows;

  // Training.
  double lambda = 1.0;
  double tol = 1e-10;

  std::optional<std::uint64_t> seed;

  // Privacy level: one epsilon, an explicit list, or a log grid.
  std::optional<double> epsilon;
  std::vector<double> eps_list;
  std::optional<double> eps_min;
  std::optional<double> eps_max;
  int points_per_decade = 8;

  std::optional<Index> samples;
  std::vector<Index> ranks;
  std::vector<Index> neighbors;       // explicit neighbor rows
  std::optional<Index> neighbor_count;

  bool validate = false;  // neighbors: also retrain every neighbor
  double bound = 0.05;    // validate: max allowed relative deviation

  std::string model_point = "center";  // profile: center | sample | x,y,...
  bool heatmap = false;
  Index heatmap_resolution = 64;

  double tau = 0.05;
  int persistence = 2;
  Index collapse_count = 12;

  bool svg = false;

  // Not echoed.
  std::string out;
};

nlohmann::ordered_json to_json(const RunConfig& config);
RunConfig config_from_json(const nlohmann::json& j);

RunConfig load_config(const std::string& path);

}  // namespace dpcover::cli

#endif  // DPCOVER_CLI_CONFIG_H_
