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

#ifndef DPCOVER_RNG_H_
#define DPCOVER_RNG_H_

#include <cstdint>
#include <initializer_list>
#include <random>

namespace dpcover {

// Seedable, splittable random source.
//
// Split rule: the child of a stream with seed s for the path (k_1, ..., k_m)
// has seed equal to the first 64-bit output of std::seed_seq fed with the
// 32-bit words (lo(s), hi(s), lo(k_1), hi(k_1), ..., lo(k_m), hi(k_m)). The
// engine is std::mt19937_64 seeded with that value. Children depend only on
// the parent seed and the path, never on how many draws the parent made, so
// work split over independent streams is reproducible in any execution
// order.
class Rng {
 public:
  using Engine = std::mt19937_64;
  using result_type = Engine::result_type;

  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  Rng split(std::initializer_list<std::uint64_t> path) const;
  Rng split(std::uint64_t stream) const { return split({stream}); }

  // UniformRandomBitGenerator interface.
  static constexpr result_type min() { return Engine::min(); }
  static constexpr result_type max() { return Engine::max(); }
  result_type operator()() {
    ++draws_;
    return engine_();
  }

  // Raw engine outputs consumed so far, including those used by the
  // distribution helpers.
  std::uint64_t draws() const { return draws_; }

  double uniform();                           // [0, 1)
  double normal();                            // N(0, 1)
  double gamma(double shape, double rate);    // density ~ x^(shape-1) e^(-rate x)

 private:
  std::uint64_t seed_;
  Engine engine_;
  std::uint64_t draws_ = 0;
};

}  // namespace dpcover

#endif  // DPCOVER_RNG_H_
