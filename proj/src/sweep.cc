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

#include "dpcover/sweep.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "dpcover/coverage.h"
#include "dpcover/error.h"
#include "parallel.h"

namespace dpcover {
namespace {

constexpr Index kMinSweepSamples = 100;

// Signed losses of every neighbor at K samples, one row per sample.
Matrix sample_losses(const ModelPoint& base,
                     std::span<const ModelPoint> neighbors,
                     const MechanismParams& params, Index samples,
                     const Rng& rng) {
  const Index n = static_cast<Index>(neighbors.size());
  Matrix losses(samples, n);
  parallel_for(samples, [&](Index k) {
    Rng stream = rng.split(static_cast<std::uint64_t>(k));
    const ModelPoint m = sample_model(base, params, stream);
    const double to_base = (base - m).norm();
    for (Index i = 0; i < n; ++i) {
      losses(k, i) =
          params.beta * ((neighbors[static_cast<std::size_t>(i)] - m).norm() - to_base);
    }
  });
  return losses;
}

MeanEstimate column_estimate(const Matrix& values, Index col) {
  std::vector<double> column(static_cast<std::size_t>(values.rows()));
  for (Index k = 0; k < values.rows(); ++k) {
    column[static_cast<std::size_t>(k)] = values(k, col);
  }
  return mean_estimate(column);
}

TypicalProfile profile_from_losses(const Matrix& losses,
                                   const MechanismParams& params) {
  Matrix sorted = losses.cwiseAbs();
  for (Index k = 0; k < sorted.rows(); ++k) {
    auto row = sorted.row(k);
    std::sort(row.begin(), row.end());
  }
  const Index n = sorted.cols();
  TypicalProfile profile;
  profile.epsilon = params.epsilon;
  profile.beta = params.beta;
  profile.mean_abs_loss_by_rank.resize(n);
  profile.std_error_by_rank.resize(n);
  for (Index j = 0; j < n; ++j) {
    const MeanEstimate est = column_estimate(sorted, j);
    profile.mean_abs_loss_by_rank[j] = est.mean;
    profile.std_error_by_rank[j] = est.std_error;
  }
  profile.normalized = profile.mean_abs_loss_by_rank / params.beta;
  return profile;
}

void check_samples(Index samples, Index minimum) {
  if (samples < minimum) {
    throw Error(ErrorKind::kConfiguration,
                "need at least " + std::to_string(minimum) + " samples, got " +
                    std::to_string(samples));
  }
}

std::vector<double> average_ranks(std::span<const double> v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
  constexpr std::size_t kBlock = 8;
  if (values.size() <= kBlock) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

MeanEstimate mean_estimate(std::span<const double> values) {
  MeanEstimate est;
  const double count = static_cast<double>(values.size());
  if (values.empty()) {
    est.mean = std::numeric_limits<double>::quiet_NaN();
    est.std_error = est.mean;
    return est;
  }
  est.mean = pairwise_sum(values) / count;
  if (values.size() < 2) {
    est.std_error = std::numeric_limits<double>::quiet_NaN();
    return est;
  }
  std::vector<double> sq(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    const double dev = values[k] - est.mean;
    sq[k] = dev * dev;
  }
  const double variance = pairwise_sum(sq) / (count - 1.0);
  est.std_error = std::sqrt(variance / count);
  return est;
}

TypicalProfile typical_profile(const NeighborSet& set,
                               const MechanismParams& params, Index samples,
                               const Rng& rng) {
  check_samples(samples, 1);
  const Matrix losses =
      sample_losses(set.base.model, set.wc_points, params, samples, rng);
  return profile_from_losses(losses, params);
}

MeanEstimate neighbor_mean_loss(const ModelPoint& base, const ModelPoint& nbr,
                                const MechanismParams& params, Index samples,
                                const Rng& rng) {
  check_samples(samples, 2);
  const ModelPoint points[] = {nbr};
  const Matrix losses = sample_losses(base, points, params, samples, rng);
  return column_estimate(losses, 0);
}

MeanEstimate neighbor_mean_abs_loss(const ModelPoint& base,
                                    const ModelPoint& nbr,
                                    const MechanismParams& params,
                                    Index samples, const Rng& rng) {
  check_samples(samples, 2);
  const ModelPoint points[] = {nbr};
  const Matrix losses = sample_losses(base, points, params, samples, rng);
  return column_estimate(losses.cwiseAbs(), 0);
}

std::optional<OnsetInterval> detect_plateau(std::span<const double> values,
                                            std::span<const double> betas,
                                            const PlateauOptions& options) {
  if (values.size() != betas.size()) {
    throw Error(ErrorKind::kConfiguration,
                "detect_plateau: values and grid differ in length");
  }
  if (values.size() < 4) {
    throw Error(ErrorKind::kConfiguration,
                "detect_plateau: need at least 4 grid points");
  }
  if (options.persistence < 1 || !(options.tau >= 0.0)) {
    throw Error(ErrorKind::kConfiguration, "detect_plateau: bad options");
  }
  // The plateau level at candidate k is the mean of everything before k, so
  // one noisy early estimate does not set the reference for the whole curve.
  double prefix = 0.0;
  const std::size_t run = static_cast<std::size_t>(options.persistence);
  for (std::size_t k = 1; k + run <= values.size(); ++k) {
    prefix += values[k - 1];
    const double level = prefix / static_cast<double>(k);
    bool sustained = true;
    for (std::size_t j = k; j < k + run; ++j) {
      sustained = sustained &&
                  std::abs(values[j] - level) > options.tau * std::abs(level);
    }
    if (sustained) {
      return OnsetInterval{betas[k - 1], betas[k], static_cast<Index>(k)};
    }
  }
  return std::nullopt;
}

std::vector<double> SweepResult::rank_curve(Index rank) const {
  std::vector<double> curve;
  curve.reserve(profiles.size());
  for (const auto& p : profiles) curve.push_back(p.normalized[rank]);
  return curve;
}

std::vector<double> log_grid(double eps_min, double eps_max,
                             int points_per_decade) {
  if (!(eps_min > 0.0) || !(eps_max >= eps_min) || points_per_decade < 1 ||
      !std::isfinite(eps_max)) {
    throw Error(ErrorKind::kConfiguration,
                "epsilon grid needs 0 < eps_min <= eps_max and at least one "
                "point per decade");
  }
  const double lo = std::log10(eps_min);
  const double hi = std::log10(eps_max);
  const auto steps = static_cast<Index>(
      std::llround((hi - lo) * static_cast<double>(points_per_decade)));
  std::vector<double> grid;
  if (steps <= 0) {
    grid.push_back(eps_min);
    return grid;
  }
  for (Index k = 0; k <= steps; ++k) {
    if (k == 0) {
      grid.push_back(eps_min);
    } else if (k == steps) {
      grid.push_back(eps_max);
    } else {
      grid.push_back(std::pow(
          10.0, lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(steps)));
    }
  }
  return grid;
}

SweepResult run_sweep(const NeighborSet& set, const SweepConfig& config) {
  const auto& grid = config.epsilon_grid;
  if (grid.empty()) {
    throw Error(ErrorKind::kConfiguration, "empty epsilon grid");
  }
  for (std::size_t g = 0; g < grid.size(); ++g) {
    if (!(grid[g] > 0.0) || (g > 0 && !(grid[g] > grid[g - 1]))) {
      throw Error(ErrorKind::kConfiguration,
                  "epsilon grid must be positive and strictly increasing");
    }
  }
  check_samples(config.samples_per_eps, kMinSweepSamples);
  const Index n = set.size();
  for (Index rank : config.rank_indices_of_interest) {
    if (rank < 0 || rank >= n) {
      throw Error(ErrorKind::kConfiguration,
                  "rank " + std::to_string(rank) + " out of range [0, " +
                      std::to_string(n) + ")");
    }
  }

  const MechanismParams base_params = MechanismParams::make(
      grid.front(), set.base.n, set.base.lambda, set.base.model.size());
  const Rng master(config.seed);

  SweepResult result;
  result.epsilons = grid;
  result.rank_indices_of_interest = config.rank_indices_of_interest;
  result.curves.resize(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    auto& curve = result.curves[static_cast<std::size_t>(i)];
    curve.neighbor_index = i;
    curve.distance = set.distance(i);
  }

  for (std::size_t g = 0; g < grid.size(); ++g) {
    const MechanismParams params = base_params.with_epsilon(grid[g]);
    result.betas.push_back(params.beta);
    const Matrix losses =
        sample_losses(set.base.model, set.wc_points, params,
                      config.samples_per_eps, master.split(g));
    result.profiles.push_back(profile_from_losses(losses, params));
    const Matrix abs_losses = losses.cwiseAbs();
    for (Index i = 0; i < n; ++i) {
      auto& curve = result.curves[static_cast<std::size_t>(i)];
      curve.mean_loss.push_back(column_estimate(losses, i));
      curve.mean_abs_loss.push_back(column_estimate(abs_losses, i));
      curve.normalized.push_back(curve.mean_abs_loss.back().mean / params.beta);
    }
  }

  if (grid.size() >= 4) {
    for (auto& curve : result.curves) {
      curve.onset = detect_plateau(curve.normalized, result.betas, config.plateau);
    }
  }
  return result;
}

double spearman_correlation(std::span<const double> x,
                            std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(ErrorKind::kConfiguration,
                "spearman_correlation: need two equal-length samples");
  }
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double mean = 0.5 * static_cast<double>(x.size() + 1);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sxy += (rx[k] - mean) * (ry[k] - mean);
    sxx += (rx[k] - mean) * (rx[k] - mean);
    syy += (ry[k] - mean) * (ry[k] - mean);
  }
  if (sxx == 0.0 || syy == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return sxy / std::sqrt(sxx * syy);
}

CollapseReport scaling_collapse(std::span<const NeighborCurve> curves) {
  CollapseReport report;
  for (const auto& curve : curves) {
    if (!curve.onset) {
      report.excluded.push_back(curve.neighbor_index);
      report.warnings.push_back("neighbor " +
                                std::to_string(curve.neighbor_index) +
                                ": no plateau onset inside the grid; excluded");
      continue;
    }
    report.rows.push_back({curve.neighbor_index, curve.onset->lo, curve.onset->hi,
                           curve.distance, curve.onset->hi * curve.distance});
  }
  if (report.rows.empty()) {
    report.max_min_ratio = std::numeric_limits<double>::quiet_NaN();
    report.spearman = std::numeric_limits<double>::quiet_NaN();
    return report;
  }
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  std::vector<double> onsets, distances;
  for (const auto& row : report.rows) {
    lo = std::min(lo, row.product);
    hi = std::max(hi, row.product);
    onsets.push_back(row.onset_hi);
    distances.push_back(row.distance);
  }
  report.max_min_ratio = hi / lo;
  report.spearman = report.rows.size() >= 2
                        ? spearman_correlation(onsets, distances)
                        : std::numeric_limits<double>::quiet_NaN();
  return report;
}

std::vector<NeighborCurve> select_spanning(std::span<const NeighborCurve> curves,
                                           Index count) {
  std::vector<const NeighborCurve*> pool;
  for (const auto& c : curves) {
    if (c.onset && c.distance > 0.0) pool.push_back(&c);
  }
  std::stable_sort(pool.begin(), pool.end(),
                   [](const NeighborCurve* a, const NeighborCurve* b) {
                     return a->distance < b->distance;
                   });
  std::vector<NeighborCurve> picked;
  if (pool.empty() || count <= 0) return picked;
  const Index m = static_cast<Index>(pool.size());
  const Index take = std::min(count, m);
  Index last = -1;
  for (Index j = 0; j < take; ++j) {
    const Index pos =
        take == 1 ? 0
                  : static_cast<Index>(std::llround(static_cast<double>(j) *
                                                    static_cast<double>(m - 1) /
                                                    static_cast<double>(take - 1)));
    if (pos == last) continue;
    picked.push_back(*pool[static_cast<std::size_t>(pos)]);
    last = pos;
  }
  return picked;
}

bool profiles_agree(const Vector& profile, const Vector& limit, double tau) {
  if (profile.size() != limit.size()) return false;
  for (Index j = 0; j < profile.size(); ++j) {
    if (std::abs(profile[j] - limit[j]) > tau * std::abs(limit[j])) return false;
  }
  return true;
}

EpsilonRange epsilon_range(const SweepResult& sweep, double tau) {
  const auto& profiles = sweep.profiles;
  const std::size_t count = profiles.size();
  auto fail = [&](const std::string& why) {
    std::ostringstream msg;
    msg << "cannot locate the epsilon range: " << why
        << "; extend the epsilon grid";
    if (count > 0) {
      msg << " beyond [" << sweep.epsilons.front() << ", "
          << sweep.epsilons.back() << "]";
    }
    throw Error(ErrorKind::kConfiguration, msg.str());
  };
  if (count < 4) fail("need at least 4 grid points");

  const Vector& low_limit = profiles.front().normalized;
  const Vector& high_limit = profiles.back().normalized;
  std::size_t low = 0;
  while (low + 1 < count && profiles_agree(profiles[low + 1].normalized, low_limit, tau)) {
    ++low;
  }
  std::size_t high = count - 1;
  while (high > 0 && profiles_agree(profiles[high - 1].normalized, high_limit, tau)) {
    --high;
  }
  if (low == 0) fail("no low-epsilon plateau (the two smallest epsilons disagree)");
  if (high == count - 1) {
    fail("no high-epsilon plateau (the two largest epsilons disagree)");
  }
  if (low >= high) fail("the low and high plateaus meet; no transition band");

  EpsilonRange range;
  range.low_index = static_cast<Index>(low);
  range.high_index = static_cast<Index>(high);
  range.eps_low = sweep.epsilons[low];
  range.eps_high = sweep.epsilons[high];
  return range;
}

}  // namespace dpcover
