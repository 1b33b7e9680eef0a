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

#include "dpcover/coverage.h"

#include <algorithm>
#include <numeric>

namespace dpcover {

CoverageEstimate empirical_coverage(const ModelPoint& center,
                                    const MechanismParams& params,
                                    const ModelPoint& m, double c,
                                    Index samples, Rng& rng) {
  if (!(c > 0.0)) {
    throw Error(ErrorKind::kConfiguration, "cutoff radius must be positive");
  }
  if (samples < 1) {
    throw Error(ErrorKind::kConfiguration, "need at least one sample");
  }
  if (center.size() != params.d || m.size() != params.d) {
    throw Error(ErrorKind::kConfiguration,
                "empirical_coverage: dimension mismatch");
  }
  const Vector offset = center - m;
  const double c2 = c * c;
  Index hits = 0;
  for (Index k = 0; k < samples; ++k) {
    const NoiseSample noise = sample_noise(params, rng);
    if ((offset + noise.b).squaredNorm() < c2) ++hits;
  }
  CoverageEstimate est;
  est.hits = hits;
  est.samples = samples;
  est.coverage = static_cast<double>(hits) / static_cast<double>(samples);
  est.std_error = std::sqrt(est.coverage * (1.0 - est.coverage) /
                         static_cast<double>(samples));
  return est;
}

PrivacyProfile privacy_profile(const ModelPoint& base,
                               std::span<const ModelPoint> neighbors,
                               const ModelPoint& m, double beta) {
  PrivacyProfile profile;
  profile.model_point = m;
  profile.beta = beta;
  profile.ranked.reserve(neighbors.size());
  for (std::size_t i = 0; i < neighbors.size(); ++i) {
    profile.ranked.push_back(
        privacy_loss(base, neighbors[i], m, beta, static_cast<Index>(i)));
  }
  std::sort(profile.ranked.begin(), profile.ranked.end(),
            [](const PrivacyLoss& a, const PrivacyLoss& b) {
              if (a.abs_loss != b.abs_loss) return a.abs_loss < b.abs_loss;
              return a.neighbor_index < b.neighbor_index;
            });
  profile.ranking.reserve(neighbors.size());
  for (const auto& entry : profile.ranked) {
    profile.ranking.push_back(entry.neighbor_index);
  }
  return profile;
}

PrivacyProfile privacy_profile(const NeighborSet& set, const ModelPoint& m,
                               double beta) {
  return privacy_profile(set.base.model, set.wc_points, m, beta);
}

HeatmapGrid bounding_grid(const NeighborSet& set, const ModelPoint& m,
                          Index resolution, double pad) {
  if (set.base.model.size() != 2 || m.size() != 2) {
    throw Error(ErrorKind::kConfiguration,
                "heatmaps need a two-dimensional model space");
  }
  Eigen::Vector2d lo = set.base.model.head<2>().cwiseMin(m.head<2>());
  Eigen::Vector2d hi = set.base.model.head<2>().cwiseMax(m.head<2>());
  for (const auto& p : set.wc_points) {
    lo = lo.cwiseMin(p.head<2>());
    hi = hi.cwiseMax(p.head<2>());
  }
  Eigen::Vector2d extent = hi - lo;
  const double fallback = std::max(extent.maxCoeff(), 1e-12);
  for (int k = 0; k < 2; ++k) {
    if (!(extent[k] > 0.0)) extent[k] = fallback;
  }
  HeatmapGrid grid;
  grid.x_min = lo[0] - pad * extent[0];
  grid.x_max = hi[0] + pad * extent[0];
  grid.y_min = lo[1] - pad * extent[1];
  grid.y_max = hi[1] + pad * extent[1];
  grid.resolution = resolution;
  return grid;
}

Heatmap heatmap_grid(const NeighborSet& set, const HeatmapGrid& grid,
                     const ModelPoint& m, double beta) {
  if (set.base.model.size() != 2 || m.size() != 2) {
    throw Error(ErrorKind::kConfiguration,
                "heatmaps need a two-dimensional model space");
  }
  if (grid.resolution < 1 || !(grid.x_max > grid.x_min) ||
      !(grid.y_max > grid.y_min)) {
    throw Error(ErrorKind::kConfiguration, "empty heatmap grid");
  }
  Heatmap map;
  map.neighbors.reserve(set.wc_points.size());
  for (Index i = 0; i < set.size(); ++i) {
    const auto& p = set.wc_points[static_cast<std::size_t>(i)];
    const auto loss = privacy_loss(set.base.model, p, m, beta, i);
    map.neighbors.push_back({i, p[0], p[1], loss.abs_loss});
  }
  const Index res = grid.resolution;
  const double dx = (grid.x_max - grid.x_min) / static_cast<double>(res);
  const double dy = (grid.y_max - grid.y_min) / static_cast<double>(res);
  map.field.reserve(static_cast<std::size_t>(res * res));
  for (Index iy = 0; iy < res; ++iy) {
    for (Index ix = 0; ix < res; ++ix) {
      const Eigen::Vector2d cell(grid.x_min + (static_cast<double>(ix) + 0.5) * dx,
                                 grid.y_min + (static_cast<double>(iy) + 0.5) * dy);
      const auto loss = privacy_loss(set.base.model, cell, m, beta);
      map.field.push_back({cell[0], cell[1], loss.abs_loss});
    }
  }
  return map;
}

}  // namespace dpcover
