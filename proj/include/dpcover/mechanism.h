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

#ifndef DPCOVER_MECHANISM_H_
#define DPCOVER_MECHANISM_H_

#include <cstdint>

#include "dpcover/rng.h"
#include "dpcover/types.h"

namespace dpcover {

// Laplace output perturbation A(x) + b with density of b proportional to
// exp(-beta |b|) and beta = n lambda epsilon / 2.
struct MechanismParams {
  double epsilon = 0.0;
  double lambda = 0.0;
  Index n = 0;
  Index d = 0;
  double beta = 0.0;

  // Validates all inputs positive and derives beta.
  static MechanismParams make(double epsilon, Index n, double lambda, Index d);
  // Same n, lambda, d at a different epsilon.
  MechanismParams with_epsilon(double epsilon) const;
};

// n lambda epsilon / 2. Throws kConfiguration for nonpositive inputs.
double beta_of(double epsilon, Index n, double lambda);

struct NoiseSample {
  Vector b;
  double radius = 0.0;
  // Seed of the stream the sample came from and the stream position before
  // the draw; together they reproduce the sample.
  std::uint64_t stream_seed = 0;
  std::uint64_t stream_offset = 0;
};

// Direction uniform on the unit sphere, radius ~ Gamma(shape d, rate beta).
NoiseSample sample_noise(const MechanismParams& params, Rng& rng);

// center + noise.b.
ModelPoint apply_noise(const ModelPoint& center, const NoiseSample& noise);

ModelPoint sample_model(const ModelPoint& center, const MechanismParams& params,
                        Rng& rng);

// -beta |center - m|. The normalizing constant is omitted; every quantity
// built on it is a ratio of densities sharing beta, where it cancels.
template <typename DerivedC, typename DerivedM>
typename DerivedC::Scalar log_pdf_unnormalized(
    const Eigen::MatrixBase<DerivedC>& center,
    const Eigen::MatrixBase<DerivedM>& m, typename DerivedC::Scalar beta) {
  return -beta * (center - m).norm();
}

}  // namespace dpcover

#endif  // DPCOVER_MECHANISM_H_
