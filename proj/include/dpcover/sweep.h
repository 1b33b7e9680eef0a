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

#ifndef DPCOVER_SWEEP_H_
#define DPCOVER_SWEEP_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dpcover/mechanism.h"
#include "dpcover/neighbors.h"
#include "dpcover/rng.h"
#include "dpcover/types.h"

namespace dpcover {

// Monte Carlo analysis over model points M ~ A(x) = A(x) + b.
//
// Seeds: sample k of a call that receives stream `rng` draws from
// rng.split(k). run_sweep hands grid point g the stream master.split(g), so
// sample k at grid point g uses Rng(seed).split(g).split(k). Means and
// variances are reduced with pairwise summation in sample order, so results
// do not depend on thread count.

struct MeanEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // NaN for fewer than two samples
};

// Pairwise (cascade) summation.
double pairwise_sum(std::span<const double> values);

MeanEstimate mean_estimate(std::span<const double> values);

// Privacy profile averaged by rank over samples M ~ A(x): each sample's
// |loss| vector is sorted first, then averaged element-wise.
struct TypicalProfile {
  double epsilon = 0.0;
  double beta = 0.0;
  Vector mean_abs_loss_by_rank;
  Vector normalized;  // mean_abs_loss_by_rank / beta
  Vector std_error_by_rank;
};

TypicalProfile typical_profile(const NeighborSet& set,
                               const MechanismParams& params, Index samples,
                               const Rng& rng);

// E_{M ~ A(x)}[beta (|A(y) - M| - |A(x) - M|)], the KL divergence of A(x)
// from A(y). Needs at least two samples.
MeanEstimate neighbor_mean_loss(const ModelPoint& base, const ModelPoint& nbr,
                                const MechanismParams& params, Index samples,
                                const Rng& rng);

// Same samples, mean of |loss|.
MeanEstimate neighbor_mean_abs_loss(const ModelPoint& base,
                                    const ModelPoint& nbr,
                                    const MechanismParams& params,
                                    Index samples, const Rng& rng);

struct PlateauOptions {
  double tau = 0.05;     // relative departure from the low-beta level
  int persistence = 2;   // consecutive departing grid points required
};

// Grid cell (lo, hi] in which a curve first leaves its low-beta plateau.
// `hi` is the first grid value at which the departure is observed.
struct OnsetInterval {
  double lo = 0.0;
  double hi = 0.0;
  Index index = 0;  // grid index of `hi`
};

// Returns the first grid index k whose value, and the `persistence - 1`
// values after it, differ by more than tau relative from the plateau level,
// taken as the mean of the values before k; nullopt if there is none. Throws
// kConfiguration for fewer than four grid points or mismatched lengths.
std::optional<OnsetInterval> detect_plateau(std::span<const double> values,
                                            std::span<const double> betas,
                                            const PlateauOptions& options = {});

struct NeighborCurve {
  Index neighbor_index = 0;
  double distance = 0.0;  // |A(x) - A_wc(y_i)|
  std::vector<MeanEstimate> mean_loss;      // signed, per grid point
  std::vector<MeanEstimate> mean_abs_loss;  // per grid point
  std::vector<double> normalized;           // mean_abs_loss / beta
  std::optional<OnsetInterval> onset;       // detected on `normalized`
};

struct SweepConfig {
  std::vector<double> epsilon_grid;  // strictly increasing, positive
  Index samples_per_eps = 1000;
  std::uint64_t seed = 0;
  std::vector<Index> rank_indices_of_interest;
  PlateauOptions plateau;
};

struct SweepResult {
  std::vector<double> epsilons;
  std::vector<double> betas;
  std::vector<TypicalProfile> profiles;  // one per grid point
  std::vector<NeighborCurve> curves;     // one per neighbor, index order
  std::vector<Index> rank_indices_of_interest;

  // normalized typical-profile value at `rank` across the grid.
  std::vector<double> rank_curve(Index rank) const;
};

// log10-spaced grid from eps_min to eps_max inclusive, `points_per_decade`
// points per factor of ten (the last step is stretched to hit eps_max).
std::vector<double> log_grid(double eps_min, double eps_max,
                             int points_per_decade);

// Throws kConfiguration for an empty or non-increasing grid, fewer than 100
// samples, or out-of-range ranks.
SweepResult run_sweep(const NeighborSet& set, const SweepConfig& config);

struct CollapseRow {
  Index neighbor_index = 0;
  double onset_lo = 0.0;
  double onset_hi = 0.0;
  double distance = 0.0;
  double product = 0.0;  // onset_hi * distance
};

struct CollapseReport {
  std::vector<CollapseRow> rows;
  std::vector<Index> excluded;  // curves without a detected onset
  std::vector<std::string> warnings;
  double max_min_ratio = 0.0;   // max product / min product
  double spearman = 0.0;        // rank correlation of onset_hi vs distance
};

CollapseReport scaling_collapse(std::span<const NeighborCurve> curves);

// Spearman rank correlation with average ranks for ties. NaN when either
// input is constant.
double spearman_correlation(std::span<const double> x,
                            std::span<const double> y);

// `count` curves with detected onsets and nonzero distance, evenly spaced
// through the distance order (shortest and longest always included).
std::vector<NeighborCurve> select_spanning(std::span<const NeighborCurve> curves,
                                           Index count);

struct EpsilonRange {
  double eps_low = 0.0;
  double eps_high = 0.0;
  Index low_index = 0;
  Index high_index = 0;
};

// True when every rank of `profile` is within tau (relative) of `limit`.
bool profiles_agree(const Vector& profile, const Vector& limit, double tau);

// eps_low: largest epsilon of the run of grid points, starting at the
// smallest epsilon, whose normalized profiles agree with the smallest-epsilon
// profile. eps_high: smallest epsilon of the corresponding run at the top of
// the grid. Throws kConfiguration when either plateau has fewer than two grid
// points or the runs meet (no transition inside the grid).
EpsilonRange epsilon_range(const SweepResult& sweep, double tau = 0.05);

}  // namespace dpcover

#endif  // DPCOVER_SWEEP_H_
