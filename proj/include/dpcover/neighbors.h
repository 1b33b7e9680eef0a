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

#ifndef DPCOVER_NEIGHBORS_H_
#define DPCOVER_NEIGHBORS_H_

#include <vector>

#include "dpcover/data.h"
#include "dpcover/erm.h"
#include "dpcover/types.h"

namespace dpcover {

// Ball |A(y_i) - center| <= radius known to contain the minimizer on the
// dataset with row `index` removed. The base minimizer always lies on its
// surface.
struct SphereBound {
  Index index = 0;
  Vector center;
  double radius = 0.0;
};

namespace internal {

// Ball containing the minimizer after an edit of a dataset of n0 rows into one
// of n1 rows by adding n_added and removing n_removed rows. `delta_s` is
// (sum of added-row loss gradients - sum of removed-row loss gradients) /
// (n_added + n_removed), all evaluated at `base`.
struct GeneralSphere {
  Vector center;
  double radius = 0.0;
};

GeneralSphere general_sphere(const ModelPoint& base, const Vector& delta_s,
                             double lambda, Index n0, Index n1, Index n_added,
                             Index n_removed);

}  // namespace internal

// Sphere for the single-row removal of row i:
//   R = (1 + 1/(2(n-1))) A + grad_l_i(A) / (2 lambda (n-1))
//   r = |A + grad_l_i(A) / lambda| / (2(n-1))
SphereBound sphere_bound(const BaseSolution& base, const Dataset& data, Index i);

// The point diametrically opposite the base model on the sphere, 2R - A.
ModelPoint worst_case_point(const SphereBound& bound, const BaseSolution& base);

// A(y_i) by retraining from scratch on the neighbor view.
ModelPoint exact_neighbor(const Dataset& data, Index i, double lambda,
                          const TrainOptions& options = {});

// Per-row spheres and worst-case points for every single-row-removed neighbor.
// wc_points stand in for A(y_i) everywhere downstream.
struct NeighborSet {
  BaseSolution base;
  std::vector<SphereBound> bounds;
  std::vector<ModelPoint> wc_points;

  Index size() const { return static_cast<Index>(wc_points.size()); }
  // |A_wc(y_i) - A(x)|.
  double distance(Index i) const {
    return (wc_points[static_cast<std::size_t>(i)] - base.model).norm();
  }
};

// O(n d): no retraining.
NeighborSet build_neighbor_set(const BaseSolution& base, const Dataset& data);

struct NeighborValidationRow {
  Index index = 0;
  ModelPoint exact;
  // |A_wc(y_i) - A(y_i)| / |A(y_i) - A(x)|. Zero when both distances are
  // below the optimizer resolution tol / lambda, infinite when only the
  // denominator is.
  double rel_deviation = 0.0;
};

struct NeighborValidation {
  std::vector<NeighborValidationRow> rows;
  double max_rel_deviation = 0.0;
  double mean_rel_deviation = 0.0;
  Index argmax = 0;
};

// Retrains on every neighbor and compares with the worst-case points.
NeighborValidation validate_neighbors(const NeighborSet& set,
                                      const Dataset& data,
                                      const TrainOptions& options = {});

}  // namespace dpcover

#endif  // DPCOVER_NEIGHBORS_H_
