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

#include "cli/cli.h"

#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli/commands.h"
#include "dpcover/error.h"

#ifndef DPCOVER_VERSION
#define DPCOVER_VERSION "unknown"
#endif

namespace dpcover::cli {

namespace {

// Values bound to CLI11; optional fields are copied only when given.
struct Flags {
  RunConfig config;
  std::string config_path;
  std::size_t rows = 0;
  std::uint64_t seed = 0;
  double epsilon = 0.0;
  double eps_min = 0.0;
  double eps_max = 0.0;
  Index samples = 0;
  Index neighbor_count = 0;
};

// The same flag may be registered on several subcommands.
using Options = std::vector<CLI::Option*>;

struct Bound {
  Options rows, seed, epsilon, eps_min, eps_max, samples, neighbor_count;
};

bool given(const Options& options) {
  for (const CLI::Option* o : options) {
    if (o->count() > 0) return true;
  }
  return false;
}

void add_epsilon(CLI::App* sub, Flags& f, Bound& b) {
  b.epsilon.push_back(sub->add_option("--epsilon", f.epsilon, "privacy level"));
}

void add_grid(CLI::App* sub, Flags& f, Bound& b) {
  b.eps_min.push_back(sub->add_option("--eps-min", f.eps_min,
                                      "smallest epsilon of the log grid"));
  b.eps_max.push_back(sub->add_option("--eps-max", f.eps_max,
                                      "largest epsilon of the log grid"));
  sub->add_option("--points-per-decade", f.config.points_per_decade,
                  "log-grid density")
      ->capture_default_str();
  sub->add_option("--eps-list", f.config.eps_list, "explicit epsilon grid")
      ->delimiter(',');
}

void add_samples(CLI::App* sub, Flags& f, Bound& b) {
  b.samples.push_back(
      sub->add_option("--samples", f.samples, "samples per mechanism"));
}

void add_neighbor_choice(CLI::App* sub, Flags& f, Bound& b) {
  sub->add_option("--neighbors", f.config.neighbors, "neighbor rows to include")
      ->delimiter(',');
  b.neighbor_count.push_back(sub->add_option("--neighbor-count", f.neighbor_count,
                                     "include the first N neighbors"));
}

void copy_optionals(const Flags& f, const Bound& b, RunConfig& c) {
  if (given(b.rows)) c.rows = f.rows;
  if (given(b.seed)) c.seed = f.seed;
  if (given(b.epsilon)) c.epsilon = f.epsilon;
  if (given(b.eps_min)) c.eps_min = f.eps_min;
  if (given(b.eps_max)) c.eps_max = f.eps_max;
  if (given(b.samples)) c.samples = f.samples;
  if (given(b.neighbor_count)) {
    c.neighbor_count = f.neighbor_count;
  }
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kConfiguration:
    case ErrorKind::kIndex:
      return kExitUsage;
    case ErrorKind::kData:
      return kExitData;
    case ErrorKind::kNumerical:
      return kExitNumerical;
    case ErrorKind::kValidation:
      return kExitValidation;
  }
  return kExitFailure;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coverage and privacy-loss analysis of output-perturbed "
               "logistic regression",
               "dpcover"};
  app.set_version_flag("--version", DPCOVER_VERSION);
  app.require_subcommand(0, 1);

  Flags f;
  Bound b;
  RunConfig& c = f.config;

  app.add_option("--config", f.config_path,
                 "rerun the command recorded in a config.json echo");
  app.add_option("--out", c.out, "output directory");
  app.add_option("--data", c.data_path, "CSV file");
  app.add_option("--features", c.features, "feature columns")->delimiter(',');
  app.add_option("--label", c.label, "label column");
  app.add_option("--positive-label", c.positive_label,
                 "label value mapped to +1");
  b.rows.push_back(app.add_option("--rows", f.rows, "keep only the first N rows"));
  app.add_option("--lambda", c.lambda, "L2 regularization strength")
      ->capture_default_str();
  app.add_option("--tol", c.tol, "gradient-norm tolerance")
      ->capture_default_str();
  b.seed.push_back(app.add_option("--seed", f.seed, "master seed"));

  auto* train = app.add_subcommand("train", "fit the base model A(x)");
  auto* neighbors = app.add_subcommand(
      "neighbors", "sphere bounds and worst-case neighbor points");
  neighbors->add_flag("--validate", c.validate,
                      "also retrain every neighbor and report deviations");
  auto* validate = app.add_subcommand(
      "validate", "compare worst-case points against exact retraining");
  validate->add_option("--bound", c.bound, "largest allowed relative deviation")
      ->capture_default_str();
  auto* sample = app.add_subcommand("sample", "draw mechanism outputs");
  add_epsilon(sample, f, b);
  add_samples(sample, f, b);
  add_neighbor_choice(sample, f, b);
  auto* scatter = app.add_subcommand(
      "scatter", "mechanism samples for the base and neighbors per epsilon");
  add_epsilon(scatter, f, b);
  add_grid(scatter, f, b);
  add_samples(scatter, f, b);
  add_neighbor_choice(scatter, f, b);
  scatter->add_flag("--svg", c.svg, "also write SVG plots");
  auto* profile = app.add_subcommand(
      "profile", "privacy-loss ranking of all neighbors at one model point");
  add_epsilon(profile, f, b);
  profile->add_option("--model-point", c.model_point,
                      "center, sample, or comma-separated coordinates")
      ->capture_default_str();
  profile->add_flag("--heatmap", c.heatmap, "write the 2-D heatmap");
  profile->add_option("--heatmap-resolution", c.heatmap_resolution,
                      "heatmap cells per axis")
      ->capture_default_str();
  profile->add_flag("--svg", c.svg, "also write SVG plots");
  auto* sweep = app.add_subcommand(
      "sweep", "typical profiles and neighbor curves across an epsilon grid");
  add_epsilon(sweep, f, b);
  add_grid(sweep, f, b);
  add_samples(sweep, f, b);
  sweep->add_option("--ranks", c.ranks, "ranks to track across the grid")
      ->delimiter(',');
  sweep->add_option("--tau", c.tau, "relative tolerance for plateaus and limits")
      ->capture_default_str();
  sweep->add_option("--persistence", c.persistence,
                    "consecutive departures that mark a plateau onset")
      ->capture_default_str();
  sweep->add_option("--collapse-count", c.collapse_count,
                    "neighbors in the scaling-collapse set")
      ->capture_default_str();
  sweep->add_flag("--svg", c.svg, "also write SVG plots");

  for (CLI::App* sub : {train, neighbors, validate, sample, scatter, profile, sweep}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    RunConfig config;
    if (!f.config_path.empty()) {
      if (!app.get_subcommands().empty()) {
        throw Error(ErrorKind::kConfiguration,
                    "--config reruns a recorded command; do not name a subcommand");
      }
      config = load_config(f.config_path);
      config.out = c.out;
    } else {
      if (app.get_subcommands().empty()) {
        err << app.help();
        return kExitUsage;
      }
      copy_optionals(f, b, c);
      c.command = app.get_subcommands().front()->get_name();
      config = c;
    }
    if (config.out.empty()) {
      throw Error(ErrorKind::kConfiguration, "--out is required");
    }
    CommandResult result = run_command(config);
    result.artifacts.write(config.out);
    for (const auto& note : result.notes) err << note << "\n";
    return result.exit_code;
  } catch (const Error& e) {
    err << "dpcover: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "dpcover: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace dpcover::cli
