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

#ifndef DPCOVER_COVERAGE_H_
#define DPCOVER_COVERAGE_H_

#include <cmath>
#include <span>
#include <vector>

#include "dpcover/error.h"
#include "dpcover/mechanism.h"
#include "dpcover/neighbors.h"
#include "dpcover/rng.h"
#include "dpcover/types.h"

namespace dpcover {

// Privacy loss of model point M for one neighbor under Laplace output
// perturbation. All densities are unnormalized; only their ratio enters.
//
//   loss  = -log[f_y(M) / f_x(M)] = beta (|A(y) - M| - |A(x) - M|)
//   d_xyM = | |A(y) - M| - |A(x) - M| |,   abs_loss = beta d_xyM
//
// loss is positive when the neighbor's mechanism covers M less than the base
// mechanism does.
struct PrivacyLoss {
  Index neighbor_index = 0;
  double loss = 0.0;
  double abs_loss = 0.0;
  double d_xyM = 0.0;
  double beta = 0.0;
};

template <typename DerivedX, typename DerivedY, typename DerivedM>
PrivacyLoss privacy_loss(const Eigen::MatrixBase<DerivedX>& base,
                         const Eigen::MatrixBase<DerivedY>& nbr,
                         const Eigen::MatrixBase<DerivedM>& m, double beta,
                         Index neighbor_index = 0) {
  if (base.size() != nbr.size() || base.size() != m.size()) {
    throw Error(ErrorKind::kConfiguration,
                "privacy_loss: model points have different dimensions");
  }
  if (!(beta > 0.0)) {
    throw Error(ErrorKind::kConfiguration, "privacy_loss: beta must be positive");
  }
  const double gap = (nbr - m).norm() - (base - m).norm();
  PrivacyLoss out;
  out.neighbor_index = neighbor_index;
  out.d_xyM = std::abs(gap);
  out.loss = beta * gap;
  out.abs_loss = beta * out.d_xyM;
  out.beta = beta;
  return out;
}

// Monte Carlo estimate of P(|A(y) + b - M| < c) for the mechanism centered at
// `center`. This is the finite-radius coverage; the analytic privacy loss
// above is its c -> 0 limit.
struct CoverageEstimate {
  double coverage = 0.0;
  double std_error = 0.0;  // binomial, sqrt(p (1 - p) / K)
  Index hits = 0;
  Index samples = 0;
};

// Throws kConfiguration unless c > 0 and samples >= 1.
CoverageEstimate empirical_coverage(const ModelPoint& center,
                                    const MechanismParams& params,
                                    const ModelPoint& m, double c,
                                    Index samples, Rng& rng);

// Neighbors ranked by ascending |loss| at one model point (ties broken by
// ascending neighbor index). ranked.back() is the most vulnerable row.
struct PrivacyProfile {
  ModelPoint model_point;
  double beta = 0.0;
  std::vector<PrivacyLoss> ranked;
  std::vector<Index> ranking;  // ranking[k] == ranked[k].neighbor_index

  const PrivacyLoss& most_vulnerable() const { return ranked.back(); }
};

PrivacyProfile privacy_profile(const ModelPoint& base,
                               std::span<const ModelPoint> neighbors,
                               const ModelPoint& m, double beta);

PrivacyProfile privacy_profile(const NeighborSet& set, const ModelPoint& m,
                               double beta);

// Rectangle in a two-dimensional model space sampled at resolution x
// resolution cell centers.
struct HeatmapGrid {
  double x_min = 0.0;
  double x_max = 1.0;
  double y_min = 0.0;
  double y_max = 1.0;
  Index resolution = 64;
};

// Smallest rectangle holding the base point, every worst-case point and M,
// padded by `pad` of its extent on each side.
HeatmapGrid bounding_grid(const NeighborSet& set, const ModelPoint& m,
                          Index resolution, double pad = 0.1);

struct HeatmapPoint {
  Index neighbor_index = 0;
  double x = 0.0;
  double y = 0.0;
  double abs_loss = 0.0;
};

struct HeatmapCell {
  double x = 0.0;
  double y = 0.0;
  // |loss| a neighbor centered at (x, y) would incur at M.
  double abs_loss = 0.0;
};

struct Heatmap {
  std::vector<HeatmapPoint> neighbors;  // one per neighbor, index order
  std::vector<HeatmapCell> field;       // row-major over the grid, y outer
};

// Two-dimensional models only; throws kConfiguration otherwise.
Heatmap heatmap_grid(const NeighborSet& set, const HeatmapGrid& grid,
                     const ModelPoint& m, double beta);

}  // namespace dpcover

#endif  // DPCOVER_COVERAGE_H_
