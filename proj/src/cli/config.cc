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

#include "cli/config.h"

#include <fstream>

#include "dpcover/error.h"

namespace dpcover::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

template <typename T>
void put_optional(ordered_json& j, const char* key, const std::optional<T>& v) {
  if (v) {
    j[key] = *v;
  } else {
    j[key] = nullptr;
  }
}

template <typename T>
void get_optional(const json& j, const char* key, std::optional<T>& v) {
  if (!j.contains(key) || j.at(key).is_null()) {
    v.reset();
  } else {
    v = j.at(key).get<T>();
  }
}

template <typename T>
void get_value(const json& j, const char* key, T& v) {
  if (j.contains(key) && !j.at(key).is_null()) v = j.at(key).get<T>();
}

}  // namespace

ordered_json to_json(const RunConfig& c) {
  ordered_json j;
  j["command"] = c.command;
  j["data"] = c.data_path;
  j["features"] = c.features;
  j["label"] = c.label;
  j["positive_label"] = c.positive_label;
  put_optional(j, "rows", c.rows);
  j["lambda"] = c.lambda;
  j["tol"] = c.tol;
  put_optional(j, "seed", c.seed);
  put_optional(j, "epsilon", c.epsilon);
  j["eps_list"] = c.eps_list;
  put_optional(j, "eps_min", c.eps_min);
  put_optional(j, "eps_max", c.eps_max);
  j["points_per_decade"] = c.points_per_decade;
  put_optional(j, "samples", c.samples);
  j["ranks"] = c.ranks;
  j["neighbors"] = c.neighbors;
  put_optional(j, "neighbor_count", c.neighbor_count);
  j["validate"] = c.validate;
  j["bound"] = c.bound;
  j["model_point"] = c.model_point;
  j["heatmap"] = c.heatmap;
  j["heatmap_resolution"] = c.heatmap_resolution;
  j["tau"] = c.tau;
  j["persistence"] = c.persistence;
  j["collapse_count"] = c.collapse_count;
  j["svg"] = c.svg;
  return j;
}

RunConfig config_from_json(const json& j) {
  RunConfig c;
  try {
    c.command = j.at("command").get<std::string>();
    get_value(j, "data", c.data_path);
    get_value(j, "features", c.features);
    get_value(j, "label", c.label);
    get_value(j, "positive_label", c.positive_label);
    get_optional(j, "rows", c.rows);
    get_value(j, "lambda", c.lambda);
    get_value(j, "tol", c.tol);
    get_optional(j, "seed", c.seed);
    get_optional(j, "epsilon", c.epsilon);
    get_value(j, "eps_list", c.eps_list);
    get_optional(j, "eps_min", c.eps_min);
    get_optional(j, "eps_max", c.eps_max);
    get_value(j, "points_per_decade", c.points_per_decade);
    get_optional(j, "samples", c.samples);
    get_value(j, "ranks", c.ranks);
    get_value(j, "neighbors", c.neighbors);
    get_optional(j, "neighbor_count", c.neighbor_count);
    get_value(j, "validate", c.validate);
    get_value(j, "bound", c.bound);
    get_value(j, "model_point", c.model_point);
    get_value(j, "heatmap", c.heatmap);
    get_value(j, "heatmap_resolution", c.heatmap_resolution);
    get_value(j, "tau", c.tau);
    get_value(j, "persistence", c.persistence);
    get_value(j, "collapse_count", c.collapse_count);
    get_value(j, "svg", c.svg);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kConfiguration,
                std::string("malformed run configuration: ") + e.what());
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kConfiguration, "cannot open config '" + path + "'");
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kConfiguration,
                "cannot parse config '" + path + "': " + e.what());
  }
  return config_from_json(j);
}

}  // namespace dpcover::cli
