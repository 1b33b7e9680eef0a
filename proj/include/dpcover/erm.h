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

#ifndef DPCOVER_ERM_H_
#define DPCOVER_ERM_H_

#include <cmath>

#include "dpcover/data.h"
#include "dpcover/types.h"

namespace dpcover {

// ln(1 + exp(-margin)), evaluated without overflow.
template <typename Scalar>
Scalar logistic_loss(Scalar margin) {
  using std::exp;
  using std::log1p;
  return margin > Scalar(0) ? log1p(exp(-margin))
                            : -margin + log1p(exp(margin));
}

// 1 / (1 + exp(-t)).
template <typename Scalar>
Scalar sigmoid(Scalar t) {
  using std::exp;
  if (t >= Scalar(0)) return Scalar(1) / (Scalar(1) + exp(-t));
  const Scalar e = exp(t);
  return e / (Scalar(1) + e);
}

// Gradient in theta of ln(1 + exp(-y theta^T x)), i.e. -y x sigma(-y theta^T x).
template <typename DerivedTheta, typename DerivedX>
VectorX<typename DerivedTheta::Scalar> loss_gradient_row(
    const Eigen::MatrixBase<DerivedTheta>& theta,
    const Eigen::MatrixBase<DerivedX>& x, typename DerivedTheta::Scalar y) {
  using Scalar = typename DerivedTheta::Scalar;
  const Scalar margin = y * theta.dot(x);
  return (-y * sigmoid(-margin)) * x;
}

// J(theta) = (1/m) sum_j ln(1 + exp(-y_j theta^T x_j)) + (lambda/2)|theta|^2
// where m is the logical row count of the view.
double objective(const ModelPoint& theta, const DataView& data, double lambda);

Vector objective_gradient(const ModelPoint& theta, const DataView& data,
                          double lambda);

Eigen::MatrixXd objective_hessian(const ModelPoint& theta, const DataView& data,
                                  double lambda);

struct TrainOptions {
  double tol = 1e-10;  // on |grad J|
  int max_iterations = 10000;
};

// The exact regularized risk minimizer A(D) with its convergence evidence.
struct BaseSolution {
  ModelPoint model;
  Index n = 0;  // logical rows trained on
  double lambda = 1.0;
  double grad_norm = 0.0;
  double objective = 0.0;
  int iterations = 0;
};

// Minimizes J from theta = 0 with damped Newton steps (gradient steps when the
// Hessian solve is unusable). J is lambda-strongly convex, so the result is
// the unique global minimizer. Throws kNumerical when |grad J| > tol after
// max_iterations.
BaseSolution train(const DataView& data, double lambda,
                   const TrainOptions& options = {});

}  // namespace dpcover

#endif  // DPCOVER_ERM_H_
