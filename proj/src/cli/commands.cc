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

#include "cli/commands.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "cli/svg.h"
#include "dpcover/coverage.h"
#include "dpcover/data.h"
#include "dpcover/erm.h"
#include "dpcover/error.h"
#include "dpcover/mechanism.h"
#include "dpcover/neighbors.h"
#include "dpcover/rng.h"
#include "dpcover/sweep.h"

#ifndef DPCOVER_VERSION
#define DPCOVER_VERSION "unknown"
#endif

namespace dpcover::cli {

using nlohmann::ordered_json;

namespace {

[[noreturn]] void usage(const std::string& message) {
  throw Error(ErrorKind::kConfiguration, message);
}

Dataset load_dataset(const RunConfig& c) {
  if (c.data_path.empty()) usage("--data is required");
  if (c.features.empty()) usage("--features is required");
  if (c.label.empty()) usage("--label is required");
  if (c.positive_label.empty()) usage("--positive-label is required");
  CsvOptions options;
  options.feature_columns = c.features;
  options.label_column = c.label;
  options.positive_label = c.positive_label;
  options.max_rows = c.rows;
  return normalize(load_csv(c.data_path, options));
}

BaseSolution train_base(const RunConfig& c, const Dataset& data) {
  TrainOptions options;
  options.tol = c.tol;
  return train(data, c.lambda, options);
}

TrainOptions train_options(const RunConfig& c) {
  TrainOptions options;
  options.tol = c.tol;
  return options;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json vector_json(const Vector& v) {
  ordered_json arr = ordered_json::array();
  for (Index k = 0; k < v.size(); ++k) arr.push_back(v[k]);
  return arr;
}

std::vector<std::string> coord_header(const std::string& prefix, Index d) {
  std::vector<std::string> names;
  for (Index k = 0; k < d; ++k) names.push_back(prefix + std::to_string(k));
  return names;
}

std::vector<std::string> concat(std::vector<std::string> a,
                                const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

void add_coords(CsvTable& table, const Vector& v) {
  for (Index k = 0; k < v.size(); ++k) table.cell(v[k]);
}

std::uint64_t seed_of(const RunConfig& c) {
  if (!c.seed) usage("command '" + c.command + "' needs --seed");
  return *c.seed;
}

void echo_config(const RunConfig& c, Artifacts& artifacts) {
  ordered_json j = to_json(c);
  j["version"] = DPCOVER_VERSION;
  artifacts.add("config.json", dump(j));
}

// Explicit rows if given, else the first `count` rows.
std::vector<Index> pick_neighbors(const RunConfig& c, Index n, Index fallback) {
  std::vector<Index> picked;
  if (!c.neighbors.empty()) {
    for (Index i : c.neighbors) {
      if (i < 0 || i >= n) {
        throw Error(ErrorKind::kIndex, "neighbor row " + std::to_string(i) +
                                           " out of range [0, " +
                                           std::to_string(n) + ")");
      }
      picked.push_back(i);
    }
    return picked;
  }
  const Index count = std::min(n, c.neighbor_count.value_or(fallback));
  if (count < 0) usage("--neighbor-count must be nonnegative");
  for (Index i = 0; i < count; ++i) picked.push_back(i);
  return picked;
}

std::vector<double> epsilon_grid(const RunConfig& c, bool allow_single) {
  const bool has_list = !c.eps_list.empty();
  const bool has_range = c.eps_min || c.eps_max;
  const bool has_single = c.epsilon.has_value();
  if (static_cast<int>(has_list) + static_cast<int>(has_range) +
          static_cast<int>(has_single) >
      1) {
    usage("give only one of --epsilon, --eps-list, or --eps-min/--eps-max");
  }
  if (has_single) {
    if (!allow_single) usage("use --eps-min/--eps-max for this command");
    return {*c.epsilon};
  }
  if (has_list) {
    std::vector<double> grid = c.eps_list;
    for (std::size_t g = 0; g < grid.size(); ++g) {
      if (!(grid[g] > 0.0) || (g > 0 && !(grid[g] > grid[g - 1]))) {
        usage("--eps-list must be positive and strictly increasing");
      }
    }
    return grid;
  }
  if (!c.eps_min || !c.eps_max) usage("both --eps-min and --eps-max are required");
  return log_grid(*c.eps_min, *c.eps_max, c.points_per_decade);
}

double require_epsilon(const RunConfig& c) {
  if (c.eps_min || c.eps_max || !c.eps_list.empty()) {
    usage("command '" + c.command + "' takes a single --epsilon");
  }
  if (!c.epsilon) usage("--epsilon is required");
  return *c.epsilon;
}

ModelPoint parse_model_point(const RunConfig& c, const BaseSolution& base,
                             const MechanismParams& params) {
  if (c.model_point == "center") return base.model;
  if (c.model_point == "sample") {
    Rng rng = Rng(seed_of(c)).split(0);
    return sample_model(base.model, params, rng);
  }
  std::vector<double> values;
  std::stringstream ss(c.model_point);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      usage("--model-point must be 'center', 'sample' or comma-separated numbers");
    }
  }
  if (static_cast<Index>(values.size()) != base.model.size()) {
    usage("--model-point has " + std::to_string(values.size()) +
          " coordinates, the model has " + std::to_string(base.model.size()));
  }
  return Eigen::Map<const Vector>(values.data(), static_cast<Index>(values.size()));
}

std::string scatter_svg(const std::string& title, const ModelPoint& base,
                        const std::vector<std::pair<Index, std::vector<ModelPoint>>>& groups,
                        const std::vector<ModelPoint>& base_samples) {
  SvgPlot plot(title, "theta_0", "theta_1");
  std::size_t color = 0;
  for (const auto& [index, points] : groups) {
    SvgSeries s;
    s.line = false;
    s.marker_radius = 2.5;
    s.color = palette_color(color++);
    for (const auto& p : points) {
      s.x.push_back(p[0]);
      s.y.push_back(p[1]);
    }
    plot.add(std::move(s));
  }
  SvgSeries b;
  b.label = "A(x) samples";
  b.line = false;
  b.marker_radius = 3.0;
  b.color = "#000000";
  for (const auto& p : base_samples) {
    b.x.push_back(p[0]);
    b.y.push_back(p[1]);
  }
  plot.add(std::move(b));
  SvgSeries center;
  center.label = "A(x)";
  center.line = false;
  center.marker_radius = 4.0;
  center.color = "#d62728";
  center.x = {base[0]};
  center.y = {base[1]};
  plot.add(std::move(center));
  return plot.render();
}

}  // namespace

bool is_randomized(const RunConfig& c) {
  return c.command == "sample" || c.command == "scatter" ||
         c.command == "sweep" ||
         (c.command == "profile" && c.model_point == "sample");
}

void resolve_defaults(RunConfig& c, std::vector<std::string>& notes) {
  if (is_randomized(c) && !c.seed) {
    std::random_device device;
    c.seed = (static_cast<std::uint64_t>(device()) << 32) | device();
    notes.push_back("no --seed given; using generated seed " +
                    std::to_string(*c.seed));
  }
  if (c.command == "sample" && !c.samples) c.samples = 1000;
  if (c.command == "scatter") {
    if (!c.samples) c.samples = 20;
    if (!c.neighbor_count && c.neighbors.empty()) c.neighbor_count = 50;
  }
  if (c.command == "sweep" && !c.samples) c.samples = 1000;
}

CommandResult cmd_train(const RunConfig& c) {
  const Dataset data = load_dataset(c);
  const BaseSolution base = train_base(c, data);
  CommandResult result;
  ordered_json model;
  model["theta"] = vector_json(base.model);
  model["objective"] = base.objective;
  model["grad_norm"] = base.grad_norm;
  model["n"] = base.n;
  model["d"] = data.d();
  model["lambda"] = base.lambda;
  result.artifacts.add("model.json", dump(model));
  result.notes.push_back("trained on " + std::to_string(base.n) + " rows in " +
                         std::to_string(base.iterations) + " Newton iterations");
  return result;
}

CommandResult cmd_neighbors(const RunConfig& c) {
  const Dataset data = load_dataset(c);
  const BaseSolution base = train_base(c, data);
  const NeighborSet set = build_neighbor_set(base, data);
  const Index d = data.d();

  std::vector<std::string> header = {"i"};
  header = concat(header, coord_header("R_", d));
  header.push_back("r");
  header = concat(header, coord_header("A_wc_", d));
  std::optional<NeighborValidation> validation;
  if (c.validate) {
    header = concat(header, coord_header("A_exact_", d));
    header.push_back("rel_deviation");
    validation = validate_neighbors(set, data, train_options(c));
  }
  CsvTable table(header);
  for (Index i = 0; i < set.size(); ++i) {
    const auto& bound = set.bounds[static_cast<std::size_t>(i)];
    table.cell(static_cast<std::int64_t>(i));
    add_coords(table, bound.center);
    table.cell(bound.radius);
    add_coords(table, set.wc_points[static_cast<std::size_t>(i)]);
    if (validation) {
      const auto& row = validation->rows[static_cast<std::size_t>(i)];
      add_coords(table, row.exact);
      table.cell(row.rel_deviation);
    }
    table.end_row();
  }
  CommandResult result;
  result.artifacts.add("neighbors.csv", table.str());
  if (validation) {
    result.notes.push_back("max relative deviation " +
                           format_double(validation->max_rel_deviation));
  }
  return result;
}

CommandResult cmd_validate(const RunConfig& c) {
  if (!(c.bound > 0.0)) usage("--bound must be positive");
  const Dataset data = load_dataset(c);
  const BaseSolution base = train_base(c, data);
  const NeighborSet set = build_neighbor_set(base, data);
  const NeighborValidation report = validate_neighbors(set, data, train_options(c));

  CsvTable table({"i", "rel_deviation"});
  for (const auto& row : report.rows) {
    table.cell(static_cast<std::int64_t>(row.index)).cell(row.rel_deviation);
    table.end_row();
  }
  const bool passed = report.max_rel_deviation <= c.bound;
  ordered_json summary;
  summary["n"] = data.n();
  summary["max"] = report.max_rel_deviation;
  summary["mean"] = report.mean_rel_deviation;
  summary["argmax"] = report.argmax;
  summary["bound"] = c.bound;
  summary["passed"] = passed;

  CommandResult result;
  result.artifacts.add("validation.csv", table.str());
  result.artifacts.add("validation_summary.json", dump(summary));
  result.notes.push_back("max relative deviation " +
                         format_double(report.max_rel_deviation) + " (bound " +
                         format_double(c.bound) + ")");
  if (!passed) {
    result.exit_code = kExitValidation;
    result.notes.push_back("validation bound exceeded");
  }
  return result;
}

CommandResult cmd_sample(const RunConfig& c) {
  const double epsilon = require_epsilon(c);
  const Index samples = c.samples.value_or(1000);
  if (samples < 1) usage("--samples must be positive");
  const Rng master(seed_of(c));
  const Dataset data = load_dataset(c);
  const BaseSolution base = train_base(c, data);
  const NeighborSet set = build_neighbor_set(base, data);
  const auto params = MechanismParams::make(epsilon, base.n, base.lambda, data.d());
  const auto rows = pick_neighbors(c, data.n(), 0);

  CsvTable table(concat({"source", "neighbor_index", "sample"},
                        coord_header("theta_", data.d())));
  // Source s = 0 is the base mechanism, s = i + 1 the mechanism of neighbor i;
  // sample k of source s uses stream split({s, k}).
  auto emit = [&](std::uint64_t source, std::optional<Index> index,
                  const ModelPoint& center) {
    for (Index k = 0; k < samples; ++k) {
      Rng rng = master.split({source, static_cast<std::uint64_t>(k)});
      const ModelPoint m = sample_model(center, params, rng);
      table.cell(std::string(index ? "neighbor" : "base"));
      if (index) {
        table.cell(static_cast<std::int64_t>(*index));
      } else {
        table.empty_cell();
      }
      table.cell(static_cast<std::int64_t>(k));
      add_coords(table, m);
      table.end_row();
    }
  };
  emit(0, std::nullopt, base.model);
  for (Index i : rows) {
    emit(static_cast<std::uint64_t>(i) + 1, i, set.wc_points[static_cast<std::size_t>(i)]);
  }
  CommandResult result;
  result.artifacts.add("samples.csv", table.str());
  return result;
}

CommandResult cmd_scatter(const RunConfig& c) {
  const auto grid = epsilon_grid(c, true);
  const Index samples = c.samples.value_or(20);
  if (samples < 1) usage("--samples must be positive");
  const Rng master(seed_of(c));
  const Dataset data = load_dataset(c);
  const BaseSolution base = train_base(c, data);
  const NeighborSet set = build_neighbor_set(base, data);
  const auto rows = pick_neighbors(c, data.n(), 50);
  const Index d = data.d();

  CsvTable table(concat({"epsilon", "source", "neighbor_index", "sample"},
                        coord_header("theta_", d)));
  CommandResult result;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const auto params = MechanismParams::make(grid[g], base.n, base.lambda, d);
    std::vector<ModelPoint> base_samples;
    std::vector<std::pair<Index, std::vector<ModelPoint>>> groups;
    // Sample k of source s at grid point g uses stream split({g, s, k}).
    auto draw = [&](std::uint64_t source, const ModelPoint& center) {
      std::vector<ModelPoint> points;
      for (Index k = 0; k < samples; ++k) {
        Rng rng = master.split({g, source, static_cast<std::uint64_t>(k)});
        points.push_back(sample_model(center, params, rng));
      }
      return points;
    };
    base_samples = draw(0, base.model);
    for (Index i : rows) {
      groups.emplace_back(i, draw(static_cast<std::uint64_t>(i) + 1,
                                  set.wc_points[static_cast<std::size_t>(i)]));
    }
    auto write_rows = [&](const std::string& source, std::optional<Index> index,
                          const std::vector<ModelPoint>& points) {
      for (std::size_t k = 0; k < points.size(); ++k) {
        table.cell(grid[g]).cell(source);
        if (index) {
          table.cell(static_cast<std::int64_t>(*index));
        } else {
          table.empty_cell();
        }
        table.cell(static_cast<std::int64_t>(k));
        add_coords(table, points[k]);
        table.end_row();
      }
    };
    write_rows("base", std::nullopt, base_samples);
    for (const auto& [index, points] : groups) write_rows("neighbor", index, points);

    if (c.svg && d >= 2) {
      result.artifacts.add(
          "scatter_" + std::to_string(g) + ".svg",
          scatter_svg("epsilon = " + format_double(grid[g]), base.model, groups,
                      base_samples));
    }
  }
  if (c.svg && d < 2) result.notes.push_back("scatter SVG needs d >= 2; skipped");
  result.artifacts.add("scatter.csv", table.str());
  return result;
}

CommandResult cmd_profile(const RunConfig& c) {
  const double epsilon = require_epsilon(c);
  const Dataset data = load_dataset(c);
  const BaseSolution base = train_base(c, data);
  const NeighborSet set = build_neighbor_set(base, data);
  const auto params = MechanismParams::make(epsilon, base.n, base.lambda, data.d());
  if (c.heatmap && data.d() != 2) {
    usage("heatmaps need exactly 2 features; the profile CSV works for any d");
  }
  const ModelPoint m = parse_model_point(c, base, params);
  const PrivacyProfile profile = privacy_profile(set, m, params.beta);

  CsvTable table({"rank", "neighbor_index", "abs_loss", "d_xyM"});
  for (std::size_t k = 0; k < profile.ranked.size(); ++k) {
    const auto& entry = profile.ranked[k];
    table.cell(static_cast<std::int64_t>(k))
        .cell(static_cast<std::int64_t>(entry.neighbor_index))
        .cell(entry.abs_loss)
        .cell(entry.d_xyM);
    table.end_row();
  }
  CommandResult result;
  result.artifacts.add("profile.csv", table.str());

  ordered_json summary;
  summary["epsilon"] = epsilon;
  summary["beta"] = params.beta;
  summary["model_point"] = vector_json(m);
  summary["most_vulnerable_index"] = profile.most_vulnerable().neighbor_index;
  summary["max_abs_loss"] = profile.most_vulnerable().abs_loss;
  summary["d_max"] = profile.most_vulnerable().d_xyM;
  result.artifacts.add("profile_summary.json", dump(summary));

  if (c.heatmap) {
    if (c.heatmap_resolution < 1) usage("--heatmap-resolution must be positive");
    const HeatmapGrid grid = bounding_grid(set, m, c.heatmap_resolution);
    const Heatmap map = heatmap_grid(set, grid, m, params.beta);
    CsvTable points({"neighbor_index", "x", "y", "abs_loss"});
    for (const auto& p : map.neighbors) {
      points.cell(static_cast<std::int64_t>(p.neighbor_index)).cell(p.x).cell(p.y).cell(p.abs_loss);
      points.end_row();
    }
    CsvTable field({"x", "y", "abs_loss"});
    for (const auto& cell : map.field) {
      field.cell(cell.x).cell(cell.y).cell(cell.abs_loss);
      field.end_row();
    }
    result.artifacts.add("heatmap.csv", points.str());
    result.artifacts.add("heatmap_field.csv", field.str());

    if (c.svg) {
      double top = 0.0;
      for (const auto& p : map.neighbors) top = std::max(top, p.abs_loss);
      for (const auto& cell : map.field) top = std::max(top, cell.abs_loss);
      const double scale = top > 0.0 ? top : 1.0;
      SvgPlot plot("|privacy loss| at M (epsilon = " + format_double(epsilon) + ")",
                   "theta_0", "theta_1");
      const double dx = (grid.x_max - grid.x_min) / static_cast<double>(grid.resolution);
      const double dy = (grid.y_max - grid.y_min) / static_cast<double>(grid.resolution);
      for (const auto& cell : map.field) {
        plot.add_cell({cell.x - dx / 2, cell.y - dy / 2, cell.x + dx / 2,
                       cell.y + dy / 2, ramp_color(cell.abs_loss / scale)});
      }
      SvgSeries stars;
      stars.label = "A_wc(y_i)";
      stars.line = false;
      stars.marker_radius = 3.5;
      stars.color = "#ffffff";
      for (const auto& p : map.neighbors) {
        stars.x.push_back(p.x);
        stars.y.push_back(p.y);
        stars.point_colors.push_back(ramp_color(p.abs_loss / scale));
      }
      plot.add(std::move(stars));
      SvgSeries mark;
      mark.label = "M";
      mark.line = false;
      mark.marker_radius = 5.0;
      mark.color = "#000000";
      mark.x = {m[0]};
      mark.y = {m[1]};
      plot.add(std::move(mark));
      result.artifacts.add("heatmap.svg", plot.render(720, 600));
    }
  }
  result.notes.push_back("most vulnerable row " +
                         std::to_string(profile.most_vulnerable().neighbor_index) +
                         ", |loss| = " +
                         format_double(profile.most_vulnerable().abs_loss));
  return result;
}

CommandResult cmd_sweep(const RunConfig& c) {
  const auto grid = epsilon_grid(c, false);
  const Dataset data = load_dataset(c);
  const BaseSolution base = train_base(c, data);
  const NeighborSet set = build_neighbor_set(base, data);
  const Index n = data.n();

  SweepConfig config;
  config.epsilon_grid = grid;
  config.samples_per_eps = c.samples.value_or(1000);
  config.seed = seed_of(c);
  config.plateau.tau = c.tau;
  config.plateau.persistence = c.persistence;
  if (c.ranks.empty()) {
    config.rank_indices_of_interest = {0, n / 4, n / 2, (3 * n) / 4, n - 1};
    config.rank_indices_of_interest.erase(
        std::unique(config.rank_indices_of_interest.begin(),
                    config.rank_indices_of_interest.end()),
        config.rank_indices_of_interest.end());
  } else {
    config.rank_indices_of_interest = c.ranks;
  }
  const SweepResult sweep = run_sweep(set, config);
  CommandResult result;

  CsvTable profiles({"epsilon", "rank", "mean", "stderr", "normalized", "beta"});
  for (const auto& p : sweep.profiles) {
    for (Index j = 0; j < p.normalized.size(); ++j) {
      profiles.cell(p.epsilon)
          .cell(static_cast<std::int64_t>(j))
          .cell(p.mean_abs_loss_by_rank[j])
          .cell(p.std_error_by_rank[j])
          .cell(p.normalized[j])
          .cell(p.beta);
      profiles.end_row();
    }
  }
  result.artifacts.add("profiles.csv", profiles.str());

  CsvTable neighbors({"epsilon", "i", "mean", "stderr", "abs_mean",
                      "abs_stderr", "normalized", "beta"});
  for (std::size_t g = 0; g < grid.size(); ++g) {
    for (const auto& curve : sweep.curves) {
      neighbors.cell(grid[g])
          .cell(static_cast<std::int64_t>(curve.neighbor_index))
          .cell(curve.mean_loss[g].mean)
          .cell(curve.mean_loss[g].std_error)
          .cell(curve.mean_abs_loss[g].mean)
          .cell(curve.mean_abs_loss[g].std_error)
          .cell(curve.normalized[g])
          .cell(sweep.betas[g]);
      neighbors.end_row();
    }
  }
  result.artifacts.add("neighbors.csv", neighbors.str());

  CsvTable onsets({"i", "onset_lo", "onset_hi", "distance", "product"});
  for (const auto& curve : sweep.curves) {
    if (!curve.onset) continue;
    onsets.cell(static_cast<std::int64_t>(curve.neighbor_index))
        .cell(curve.onset->lo)
        .cell(curve.onset->hi)
        .cell(curve.distance)
        .cell(curve.onset->hi * curve.distance);
    onsets.end_row();
  }
  result.artifacts.add("onsets.csv", onsets.str());

  ordered_json collapse;
  std::vector<NeighborCurve> spanning;
  if (grid.size() >= 4) {
    spanning = select_spanning(sweep.curves, c.collapse_count);
    const CollapseReport all = scaling_collapse(sweep.curves);
    const CollapseReport picked = scaling_collapse(spanning);
    ordered_json selected = ordered_json::array();
    for (const auto& row : picked.rows) selected.push_back(row.neighbor_index);
    collapse["selected"] = selected;
    collapse["spearman"] = picked.spearman;
    collapse["max_min_ratio"] = picked.max_min_ratio;
    collapse["all_with_onset"] = {{"count", all.rows.size()},
                                  {"spearman", all.spearman},
                                  {"max_min_ratio", all.max_min_ratio}};
    collapse["excluded"] = all.excluded;
    if (!all.excluded.empty()) {
      result.notes.push_back(std::to_string(all.excluded.size()) +
                             " neighbors have no plateau onset inside the grid");
    }
  } else {
    collapse["error"] = "plateau detection needs at least 4 grid points";
  }
  result.artifacts.add("collapse.json", dump(collapse));

  ordered_json range;
  range["tau"] = c.tau;
  try {
    const EpsilonRange r = epsilon_range(sweep, c.tau);
    range["eps_low"] = r.eps_low;
    range["eps_high"] = r.eps_high;
  } catch (const Error& e) {
    range["eps_low"] = nullptr;
    range["eps_high"] = nullptr;
    range["error"] = e.what();
    result.notes.push_back(e.what());
  }
  result.artifacts.add("range.json", dump(range));

  if (c.svg) {
    SvgPlot fig4("Typical privacy profile / beta", "rank", "mean |l| / beta");
    fig4.log_y();
    const std::size_t stride = std::max<std::size_t>(1, grid.size() / 10);
    for (std::size_t g = 0; g < grid.size(); g += stride) {
      SvgSeries s;
      s.label = "eps " + format_double(grid[g]);
      s.color = ramp_color(static_cast<double>(g) / static_cast<double>(grid.size()));
      for (Index j = 0; j < n; ++j) {
        s.x.push_back(static_cast<double>(j));
        s.y.push_back(sweep.profiles[g].normalized[j]);
      }
      fig4.add(std::move(s));
    }
    result.artifacts.add("profiles.svg", fig4.render());

    SvgPlot fig5("Typical |l| / beta by rank", "beta", "mean |l| / beta");
    fig5.log_x().log_y();
    std::size_t k = 0;
    for (Index rank : sweep.rank_indices_of_interest) {
      SvgSeries s;
      s.label = "rank " + std::to_string(rank);
      s.color = palette_color(k++);
      s.marker_radius = 2.0;
      s.x = sweep.betas;
      s.y = sweep.rank_curve(rank);
      fig5.add(std::move(s));
    }
    result.artifacts.add("ranks.svg", fig5.render());

    SvgPlot fig6a("Neighbor mean |l| / beta", "beta", "mean |l| / beta");
    SvgPlot fig6b("Neighbor curves rescaled", "beta * |A(x) - A_wc(y_i)|",
                  "mean |l| / (beta |A(x) - A_wc(y_i)|)");
    fig6a.log_x().log_y();
    fig6b.log_x();
    k = 0;
    for (const auto& curve : spanning) {
      SvgSeries a;
      a.label = "i = " + std::to_string(curve.neighbor_index);
      a.color = palette_color(k++);
      a.x = sweep.betas;
      a.y = curve.normalized;
      SvgSeries b = a;
      b.x.clear();
      b.y.clear();
      for (std::size_t g = 0; g < grid.size(); ++g) {
        b.x.push_back(sweep.betas[g] * curve.distance);
        b.y.push_back(curve.normalized[g] / curve.distance);
      }
      fig6a.add(std::move(a));
      fig6b.add(std::move(b));
    }
    result.artifacts.add("neighbors.svg", fig6a.render());
    result.artifacts.add("collapse.svg", fig6b.render());
  }
  return result;
}

CommandResult run_command(RunConfig config) {
  std::vector<std::string> notes;
  resolve_defaults(config, notes);
  CommandResult result;
  if (config.command == "train") {
    result = cmd_train(config);
  } else if (config.command == "neighbors") {
    result = cmd_neighbors(config);
  } else if (config.command == "validate") {
    result = cmd_validate(config);
  } else if (config.command == "sample") {
    result = cmd_sample(config);
  } else if (config.command == "scatter") {
    result = cmd_scatter(config);
  } else if (config.command == "profile") {
    result = cmd_profile(config);
  } else if (config.command == "sweep") {
    result = cmd_sweep(config);
  } else {
    usage("unknown command '" + config.command + "'");
  }
  echo_config(config, result.artifacts);
  if (config.seed && notes.empty()) {
    result.notes.insert(result.notes.begin(),
                        "seed " + std::to_string(*config.seed));
  }
  result.notes.insert(result.notes.begin(), notes.begin(), notes.end());
  return result;
}

}  // namespace dpcover::cli
