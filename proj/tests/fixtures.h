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

#ifndef DPCOVER_TESTS_FIXTURES_H_
#define DPCOVER_TESTS_FIXTURES_H_

#include <random>
#include <string>

#include "dpcover/data.h"

namespace dpcover::testing {

inline std::string data_dir() { return DPCOVER_DATA_DIR; }

inline CsvOptions adults_options(std::size_t rows = 100) {
  CsvOptions options;
  options.feature_columns = {"age", "education-num"};
  options.label_column = "income";
  options.positive_label = ">50K";
  options.max_rows = rows;
  return options;
}

// The normalized 2-feature Adults subset used throughout the experiments.
inline Dataset adults(std::size_t rows = 100) {
  return normalize(load_csv(data_dir() + "/adult.csv", adults_options(rows)));
}

// Random rows in the unit ball with noisy linear labels.
inline Dataset synthetic(Index n, Index d, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unit;
  Matrix x(n, d);
  Vector y(n);
  for (Index i = 0; i < n; ++i) {
    Vector row(d);
    for (Index k = 0; k < d; ++k) row[k] = normal(gen);
    row *= std::pow(unit(gen), 1.0 / static_cast<double>(d)) / row.norm();
    x.row(i) = row.transpose();
    y[i] = (row.sum() + 0.3 * normal(gen)) > 0 ? 1.0 : -1.0;
  }
  return Dataset(x, y);
}

}  // namespace dpcover::testing

#endif  // DPCOVER_TESTS_FIXTURES_H_
