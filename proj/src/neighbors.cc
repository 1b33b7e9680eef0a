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

#include "dpcover/neighbors.h"

#include <cmath>
#include <limits>

#include "dpcover/error.h"
#include "parallel.h"

namespace dpcover {
namespace internal {

GeneralSphere general_sphere(const ModelPoint& base, const Vector& delta_s,
                             double lambda, Index n0, Index n1, Index n_added,
                             Index n_removed) {
  const double edits = static_cast<double>(n_added + n_removed);
  const double denom = 2.0 * static_cast<double>(n1);
  GeneralSphere sphere;
  sphere.center = (static_cast<double>(n0 + n1) / denom) * base -
                  (edits / (lambda * denom)) * delta_s;
  sphere.radius = ((static_cast<double>(n_added - n_removed) / denom) * base +
                   (edits / (lambda * denom)) * delta_s)
                      .norm();
  return sphere;
}

}  // namespace internal

SphereBound sphere_bound(const BaseSolution& base, const Dataset& data,
                         Index i) {
  if (data.n() < 2) {
    throw Error(ErrorKind::kData, "sphere bound needs at least 2 rows");
  }
  if (i < 0 || i >= data.n()) {
    throw Error(ErrorKind::kIndex, "row index " + std::to_string(i) +
                                       " out of range [0, " +
                                       std::to_string(data.n()) + ")");
  }
  if (base.model.size() != data.d()) {
    throw Error(ErrorKind::kConfiguration,
                "base model dimension does not match the data");
  }
  // Single removal: delta_s = -grad l_i(A).
  const Vector delta_s = -loss_gradient_row(base.model, data.row(i), data.label(i));
  auto sphere = internal::general_sphere(base.model, delta_s, base.lambda,
                                         data.n(), data.n() - 1, 0, 1);
  return SphereBound{i, std::move(sphere.center), sphere.radius};
}

ModelPoint worst_case_point(const SphereBound& bound, const BaseSolution& base) {
  return 2.0 * bound.center - base.model;
}

ModelPoint exact_neighbor(const Dataset& data, Index i, double lambda,
                          const TrainOptions& options) {
  return train(neighbor(data, i), lambda, options).model;
}

NeighborSet build_neighbor_set(const BaseSolution& base, const Dataset& data) {
  NeighborSet set;
  set.base = base;
  set.bounds.reserve(static_cast<std::size_t>(data.n()));
  set.wc_points.reserve(static_cast<std::size_t>(data.n()));
  for (Index i = 0; i < data.n(); ++i) {
    set.bounds.push_back(sphere_bound(base, data, i));
    set.wc_points.push_back(worst_case_point(set.bounds.back(), base));
  }
  return set;
}

NeighborValidation validate_neighbors(const NeighborSet& set,
                                      const Dataset& data,
                                      const TrainOptions& options) {
  if (set.size() != data.n()) {
    throw Error(ErrorKind::kConfiguration,
                "neighbor set does not belong to this dataset");
  }
  NeighborValidation report;
  report.rows.resize(static_cast<std::size_t>(data.n()));
  parallel_for(data.n(), [&](Index i) {
    auto& row = report.rows[static_cast<std::size_t>(i)];
    row.index = i;
    row.exact = exact_neighbor(data, i, set.base.lambda, options);
    const double shift = (row.exact - set.base.model).norm();
    const double error = (set.wc_points[static_cast<std::size_t>(i)] - row.exact).norm();
    // Distances below the optimizer's parameter resolution are noise.
    const double resolution = options.tol / set.base.lambda;
    if (shift > resolution) {
      row.rel_deviation = error / shift;
    } else {
      row.rel_deviation = error > resolution
                              ? std::numeric_limits<double>::infinity()
                              : 0.0;
    }
  });
  double sum = 0.0;
  for (const auto& row : report.rows) {
    sum += row.rel_deviation;
    if (row.rel_deviation > report.max_rel_deviation) {
      report.max_rel_deviation = row.rel_deviation;
      report.argmax = row.index;
    }
  }
  report.mean_rel_deviation = sum / static_cast<double>(report.rows.size());
  return report;
}

}  // namespace dpcover
