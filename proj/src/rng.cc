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

#include "dpcover/rng.h"

#include <vector>

namespace dpcover {

Rng Rng::split(std::initializer_list<std::uint64_t> path) const {
  std::vector<std::uint32_t> words;
  words.reserve(2 * (path.size() + 1));
  auto push = [&words](std::uint64_t v) {
    words.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
    words.push_back(static_cast<std::uint32_t>(v >> 32));
  };
  push(seed_);
  for (std::uint64_t k : path) push(k);
  std::seed_seq seq(words.begin(), words.end());
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  const std::uint64_t child =
      static_cast<std::uint64_t>(out[0]) | (static_cast<std::uint64_t>(out[1]) << 32);
  return Rng(child);
}

double Rng::uniform() {
  return std::generate_canonical<double, 53>(*this);
}

double Rng::normal() {
  std::normal_distribution<double> dist(0.0, 1.0);
  return dist(*this);
}

double Rng::gamma(double shape, double rate) {
  std::gamma_distribution<double> dist(shape, 1.0 / rate);
  return dist(*this);
}

}  // namespace dpcover
