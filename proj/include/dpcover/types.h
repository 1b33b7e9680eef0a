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

#ifndef DPCOVER_TYPES_H_
#define DPCOVER_TYPES_H_

#include <cstddef>

#include <Eigen/Dense>

namespace dpcover {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Row-major so that a data row is a contiguous block.
template <typename Scalar>
using MatrixX =
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using Vector = VectorX<double>;
using Matrix = MatrixX<double>;

// A point in model-parameter space (the weight vector of f(x) = f^T x).
using ModelPoint = Vector;

using Index = std::ptrdiff_t;

}  // namespace dpcover

#endif  // DPCOVER_TYPES_H_
