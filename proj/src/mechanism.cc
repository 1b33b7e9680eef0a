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

#include "dpcover/mechanism.h"

#include <cmath>
#include <sstream>

#include "dpcover/error.h"

namespace dpcover {
namespace {

bool positive(double v) { return v > 0.0 && std::isfinite(v); }

}  // namespace

double beta_of(double epsilon, Index n, double lambda) {
  if (!positive(epsilon) || n <= 0 || !positive(lambda)) {
    std::ostringstream msg;
    msg << "epsilon, n and lambda must be positive (got epsilon=" << epsilon
        << ", n=" << n << ", lambda=" << lambda << ")";
    throw Error(ErrorKind::kConfiguration, msg.str());
  }
  return static_cast<double>(n) * lambda * epsilon / 2.0;
}

MechanismParams MechanismParams::make(double epsilon, Index n, double lambda,
                                      Index d) {
  if (d <= 0) {
    throw Error(ErrorKind::kConfiguration, "dimension must be positive");
  }
  MechanismParams params;
  params.epsilon = epsilon;
  params.lambda = lambda;
  params.n = n;
  params.d = d;
  params.beta = beta_of(epsilon, n, lambda);
  return params;
}

MechanismParams MechanismParams::with_epsilon(double eps) const {
  return make(eps, n, lambda, d);
}

NoiseSample sample_noise(const MechanismParams& params, Rng& rng) {
  NoiseSample sample;
  sample.stream_seed = rng.seed();
  sample.stream_offset = rng.draws();
  Vector direction(params.d);
  double norm = 0.0;
  do {
    for (Index k = 0; k < params.d; ++k) direction[k] = rng.normal();
    norm = direction.norm();
  } while (!(norm > 0.0));
  direction /= norm;
  sample.radius = rng.gamma(static_cast<double>(params.d), params.beta);
  sample.b = sample.radius * direction;
  return sample;
}

ModelPoint apply_noise(const ModelPoint& center, const NoiseSample& noise) {
  if (center.size() != noise.b.size()) {
    throw Error(ErrorKind::kConfiguration,
                "noise dimension does not match the model point");
  }
  return center + noise.b;
}

ModelPoint sample_model(const ModelPoint& center, const MechanismParams& params,
                        Rng& rng) {
  if (center.size() != params.d) {
    throw Error(ErrorKind::kConfiguration,
                "model point dimension does not match the mechanism");
  }
  return apply_noise(center, sample_noise(params, rng));
}

}  // namespace dpcover
