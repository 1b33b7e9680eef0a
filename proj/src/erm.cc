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

#include "dpcover/erm.h"

#include <sstream>

#include "dpcover/error.h"

namespace dpcover {
namespace {

void check_dims(const ModelPoint& theta, const DataView& data) {
  if (theta.size() != data.d()) {
    throw Error(ErrorKind::kConfiguration,
                "model has " + std::to_string(theta.size()) +
                    " parameters, data has " + std::to_string(data.d()) +
                    " features");
  }
}

void check_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw Error(ErrorKind::kConfiguration,
                "regularization constant must be positive");
  }
}

// Largest Hessian eigenvalue of the loss term is at most 1/4 for |x| <= 1.
double lipschitz_bound(double lambda) { return lambda + 0.25; }

}  // namespace

double objective(const ModelPoint& theta, const DataView& data, double lambda) {
  check_dims(theta, data);
  double sum = 0.0;
  data.for_each_row([&](const auto& x, double y) {
    sum += logistic_loss(y * theta.dot(x));
  });
  return sum / static_cast<double>(data.size()) +
         0.5 * lambda * theta.squaredNorm();
}

Vector objective_gradient(const ModelPoint& theta, const DataView& data,
                          double lambda) {
  check_dims(theta, data);
  Vector grad = Vector::Zero(theta.size());
  data.for_each_row(
      [&](const auto& x, double y) { grad += loss_gradient_row(theta, x, y); });
  grad /= static_cast<double>(data.size());
  grad += lambda * theta;
  return grad;
}

Eigen::MatrixXd objective_hessian(const ModelPoint& theta, const DataView& data,
                                  double lambda) {
  check_dims(theta, data);
  const Index d = theta.size();
  Eigen::MatrixXd hess = Eigen::MatrixXd::Zero(d, d);
  data.for_each_row([&](const auto& x, double y) {
    const double p = sigmoid(y * theta.dot(x));
    hess.selfadjointView<Eigen::Lower>().rankUpdate(Vector(x), p * (1.0 - p));
  });
  hess = hess.selfadjointView<Eigen::Lower>();
  hess /= static_cast<double>(data.size());
  hess.diagonal().array() += lambda;
  return hess;
}

BaseSolution train(const DataView& data, double lambda,
                   const TrainOptions& options) {
  check_lambda(lambda);
  if (!(options.tol > 0.0)) {
    throw Error(ErrorKind::kConfiguration, "tolerance must be positive");
  }
  if (data.size() < 1) {
    throw Error(ErrorKind::kData, "cannot train on an empty dataset");
  }

  ModelPoint theta = ModelPoint::Zero(data.d());
  double value = objective(theta, data, lambda);
  Vector grad = objective_gradient(theta, data, lambda);
  double grad_norm = grad.norm();
  int iter = 0;

  while (grad_norm > options.tol && iter < options.max_iterations) {
    ++iter;
    const Eigen::MatrixXd hess = objective_hessian(theta, data, lambda);
    Eigen::LDLT<Eigen::MatrixXd> ldlt(hess);
    Vector step;
    bool newton = ldlt.info() == Eigen::Success && ldlt.isPositive() &&
                  ldlt.rcond() > 1e-12;
    if (newton) {
      step = -ldlt.solve(grad);
      newton = step.allFinite() && step.dot(grad) < 0.0;
    }
    if (!newton) step = -grad / lipschitz_bound(lambda);

    // Armijo backtracking. Once the predicted decrease in J drops below its
    // rounding error the test is blind, so a full Newton step that shrinks
    // the gradient is taken as is.
    double t = 1.0;
    const double slope = step.dot(grad);
    ModelPoint candidate = theta + step;
    double candidate_value = objective(candidate, data, lambda);
    Vector candidate_grad = objective_gradient(candidate, data, lambda);
    const bool newton_accepted =
        newton && candidate.allFinite() && candidate_grad.norm() < 0.5 * grad_norm;
    if (!newton_accepted) {
      while (candidate_value > value + 1e-4 * t * slope && t > 1e-10) {
        t *= 0.5;
        candidate = theta + t * step;
        candidate_value = objective(candidate, data, lambda);
      }
      candidate_grad = objective_gradient(candidate, data, lambda);
    }
    if (!candidate.allFinite()) {
      throw Error(ErrorKind::kNumerical, "optimizer produced non-finite parameters");
    }
    // Near the optimum rounding can make J non-decreasing; fall back on the
    // gradient norm to decide whether the step helped.
    if (!newton_accepted && candidate_value > value &&
        candidate_grad.norm() >= grad_norm) {
      break;
    }
    theta = std::move(candidate);
    value = candidate_value;
    grad = candidate_grad;
    grad_norm = grad.norm();
  }

  if (grad_norm > options.tol) {
    std::ostringstream msg;
    msg << "training did not converge after " << iter
        << " iterations: |grad J| = " << grad_norm << " > tol " << options.tol;
    throw Error(ErrorKind::kNumerical, msg.str());
  }

  BaseSolution solution;
  solution.model = std::move(theta);
  solution.n = data.size();
  solution.lambda = lambda;
  solution.grad_norm = grad_norm;
  solution.objective = objective(solution.model, data, lambda);
  solution.iterations = iter;
  return solution;
}

}  // namespace dpcover
