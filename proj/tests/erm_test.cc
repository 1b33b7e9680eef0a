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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dpcover/error.h"
#include "fixtures.h"
#include "oracles.h"

namespace dpcover {
namespace {

// Base model of the 2-feature, 100-row Adults subset at lambda = 1, from a
// separate Newton run and confirmed by the gradient-descent oracle below.
constexpr double kGoldenModel[] = {0.02914900089517879, 0.05213861312764385};

TEST(LossTest, OriginGivesLogTwo) {
  const Dataset data = testing::adults();
  const Vector zero = Vector::Zero(2);
  EXPECT_NEAR(objective(zero, data, 1.0), 0.6931471805599453, 1e-15);
  EXPECT_EQ(objective(zero, data, 1.0), objective(zero, data, 1e6));
}

TEST(LossTest, ObjectiveBoundsRegularizerAndMatchesOracle) {
  const Dataset data = testing::adults();
  std::mt19937_64 gen(1);
  std::normal_distribution<double> normal;
  for (int t = 0; t < 50; ++t) {
    Vector theta(2);
    theta << normal(gen), normal(gen);
    const double lambda = 0.5 + t;
    const double j = objective(theta, data, lambda);
    EXPECT_GE(j, 0.5 * lambda * theta.squaredNorm());
    EXPECT_NEAR(j, oracle::objective(data.features(), data.labels(), theta, lambda),
                1e-12 * j);
  }
}

TEST(LossTest, StableForLargeMargins) {
  EXPECT_EQ(logistic_loss(800.0), 0.0);
  EXPECT_DOUBLE_EQ(logistic_loss(-800.0), 800.0);
  EXPECT_DOUBLE_EQ(sigmoid(-800.0), 0.0);
}

TEST(RowGradientTest, ClosedFormCases) {
  Vector theta = Vector::Zero(2);
  Vector x(2);
  x << 1.0, 0.0;
  const Vector g = loss_gradient_row(theta, x, 1.0);
  EXPECT_DOUBLE_EQ(g[0], -0.5);
  EXPECT_DOUBLE_EQ(g[1], 0.0);
  theta << 0.3, -2.0;
  EXPECT_EQ(loss_gradient_row(theta, Vector::Zero(2), -1.0), Vector::Zero(2));
}

TEST(RowGradientTest, MatchesCentralDifferences) {
  std::mt19937_64 gen(2);
  std::normal_distribution<double> normal;
  for (int t = 0; t < 20; ++t) {
    Vector theta(3), x(3);
    for (int k = 0; k < 3; ++k) {
      theta[k] = normal(gen);
      x[k] = normal(gen);
    }
    x /= 1.5 * x.norm();
    const double y = t % 2 ? 1.0 : -1.0;
    auto loss = [&](const Vector& th) {
      const double z = -y * th.dot(x);
      return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
    };
    const Vector fd = oracle::finite_difference(loss, theta, 1e-5);
    EXPECT_LT((loss_gradient_row(theta, x, y) - fd).norm(), 1e-9);
  }
}

TEST(ObjectiveTest, GradientAndHessianMatchDifferences) {
  const Dataset data = testing::synthetic(40, 3, 5);
  const DataView view = neighbor(data, 7);
  Vector theta(3);
  theta << 0.4, -0.2, 0.9;
  const double lambda = 0.7;
  auto j = [&](const Vector& th) { return objective(th, view, lambda); };
  EXPECT_LT((objective_gradient(theta, view, lambda) -
             oracle::finite_difference(j, theta, 1e-5))
                .norm(),
            1e-9);
  const Eigen::MatrixXd h = objective_hessian(theta, view, lambda);
  for (int k = 0; k < 3; ++k) {
    auto gk = [&](const Vector& th) { return objective_gradient(th, view, lambda)[k]; };
    const Vector row = oracle::finite_difference(gk, theta, 1e-5);
    EXPECT_LT((h.row(k).transpose() - row).norm(), 1e-8);
  }
  EXPECT_NEAR(objective(theta, view, lambda),
              oracle::objective(data.features(), data.labels(), theta, lambda, 7),
              1e-14);
}

TEST(TrainTest, AdultsMatchesGoldenAndGradientDescent) {
  const Dataset data = testing::adults();
  const BaseSolution base = train(data, 1.0);
  const Vector reference =
      oracle::gradient_descent(data.features(), data.labels(), 1.0, -1, 1e-10);
  for (int k = 0; k < 2; ++k) {
    EXPECT_NEAR(base.model[k], reference[k], 1e-8);
    EXPECT_NEAR(base.model[k], kGoldenModel[k], 1e-12);
  }
  EXPECT_LE(base.grad_norm, 1e-10);
  EXPECT_EQ(base.n, 100);
  // Independent optimizers agree within tol / lambda.
  EXPECT_LE((base.model - reference).norm(), 2e-10);
}

TEST(TrainTest, BitReproducible) {
  const Dataset data = testing::adults();
  const BaseSolution a = train(data, 1.0);
  const BaseSolution b = train(data, 1.0);
  EXPECT_EQ(a.model, b.model);
  EXPECT_EQ(a.objective, b.objective);
}

TEST(TrainTest, ReportedGradientIsExact) {
  const Dataset data = testing::synthetic(60, 4, 11);
  const BaseSolution base = train(data, 0.3);
  EXPECT_EQ(base.grad_norm, objective_gradient(base.model, data, 0.3).norm());
  EXPECT_LE(base.grad_norm, 1e-10);
  EXPECT_DOUBLE_EQ(base.objective, objective(base.model, data, 0.3));
}

TEST(TrainTest, GlobalMinimumSpotCheck) {
  const Dataset data = testing::adults();
  const BaseSolution base = train(data, 1.0);
  std::mt19937_64 gen(3);
  std::normal_distribution<double> normal;
  for (int t = 0; t < 100; ++t) {
    Vector probe = base.model;
    const double scale = std::pow(10.0, -4 + t % 5);
    probe[0] += scale * normal(gen);
    probe[1] += scale * normal(gen);
    EXPECT_LE(base.objective, objective(probe, data, 1.0));
  }
}

TEST(TrainTest, SymmetricPairSolutionIsAlongRow) {
  Matrix x(2, 2);
  x << 0.6, 0.3, -0.6, -0.3;
  Vector y(2);
  y << 1.0, -1.0;
  const Dataset data(x, y);
  const BaseSolution base = train(data, 0.5);
  EXPECT_LE(objective_gradient(base.model, data, 0.5).norm(), 1e-10);
  // Parallel to x: the cross product vanishes.
  EXPECT_NEAR(base.model[0] * 0.3 - base.model[1] * 0.6, 0.0, 1e-12);
  EXPECT_GT(base.model[0], 0.0);
}

TEST(TrainTest, HeavyRegularizationShrinksModel) {
  const Dataset data = testing::adults();
  for (double lambda : {1e4, 1e8}) {
    const BaseSolution base = train(data, lambda);
    EXPECT_LE(base.model.norm(), 2.0 / lambda);
  }
}

TEST(TrainTest, NeighborViewTrainsOnRemainingRows) {
  const Dataset data = testing::synthetic(30, 2, 4);
  const BaseSolution nbr = train(neighbor(data, 5), 1.0);
  EXPECT_EQ(nbr.n, 29);
  const Vector reference =
      oracle::gradient_descent(data.features(), data.labels(), 1.0, 5, 1e-11);
  EXPECT_LE((nbr.model - reference).norm(), 1e-9);
}

TEST(TrainTest, RejectsBadParameters) {
  const Dataset data = testing::synthetic(10, 2, 1);
  EXPECT_THROW(train(data, 0.0), Error);
  EXPECT_THROW(train(data, -1.0), Error);
  TrainOptions options;
  options.tol = 0.0;
  EXPECT_THROW(train(data, 1.0, options), Error);
}

TEST(TrainTest, IterationCapIsAnError) {
  const Dataset data = testing::adults();
  TrainOptions options;
  options.max_iterations = 1;
  options.tol = 1e-300;
  try {
    train(data, 1.0, options);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNumerical);
  }
}

}  // namespace
}  // namespace dpcover
