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

#ifndef DPCOVER_DATA_H_
#define DPCOVER_DATA_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dpcover/types.h"

namespace dpcover {

// Selected feature columns and the raw label column of a delimited file, in
// file order.
struct RawTable {
  std::vector<std::string> feature_names;
  std::string label_name;
  std::string positive_label;
  Matrix features;                  // n x d, as read
  std::vector<std::string> labels;  // raw label cells

  Index rows() const { return features.rows(); }
  Index cols() const { return features.cols(); }
};

struct CsvOptions {
  std::vector<std::string> feature_columns;
  std::string label_column;
  std::string positive_label;
  // Keep only the first `max_rows` data rows when set.
  std::optional<std::size_t> max_rows;
};

// Reads a comma-delimited file with a header line. Throws Error with kind
// kConfiguration for unknown columns and kData for unreadable, missing or
// non-numeric cells, or fewer than two rows.
RawTable load_csv(const std::string& path, const CsvOptions& options);

// Parses CSV text already in memory; `source` names it in error messages.
RawTable parse_csv(const std::string& text, const CsvOptions& options,
                   const std::string& source = "<memory>");

// The two-stage transform fitted on a base table: per-feature standardization
// (population variance) followed by division of every row by the largest
// standardized row norm.
struct NormMeta {
  Vector mean;
  Vector stddev;
  double row_norm_divisor = 1.0;

  static NormMeta identity(Index d);

  // Applies the frozen transform to rows with the fitted arity.
  Matrix apply(const Matrix& raw) const;
};

NormMeta fit_normalization(const RawTable& raw);

// Normalized rows in the unit ball with labels in {-1, +1}. Immutable.
class Dataset {
 public:
  // Validates |x_i| <= 1 (to 1e-12) and labels in {-1, +1}.
  Dataset(Matrix features, Vector labels, NormMeta meta);

  // Identity normalization; for data that already lives in the unit ball.
  Dataset(Matrix features, Vector labels);

  Index n() const { return features_.rows(); }
  Index d() const { return features_.cols(); }
  const Matrix& features() const { return features_; }
  const Vector& labels() const { return labels_; }
  const NormMeta& meta() const { return meta_; }

  auto row(Index i) const { return features_.row(i).transpose(); }
  double label(Index i) const { return labels_[i]; }

 private:
  Matrix features_;
  Vector labels_;
  NormMeta meta_;
};

// Fits the normalization on `raw` and maps labels equal to the configured
// positive label to +1, everything else to -1.
Dataset normalize(const RawTable& raw);

// A dataset with at most one row hidden. The full view covers the base
// dataset; neighbor() hides one row. Views never copy or renormalize data and
// must not outlive the dataset they refer to.
class DataView {
 public:
  // Implicit: a Dataset can be passed wherever a view is expected.
  DataView(const Dataset& base);  // NOLINT(google-explicit-constructor)

  const Dataset& base() const { return *base_; }
  std::optional<Index> removed_index() const { return removed_; }

  // Logical row count: n for the full view, n - 1 for a neighbor.
  Index size() const { return removed_ ? base_->n() - 1 : base_->n(); }
  Index d() const { return base_->d(); }

  // Base-dataset index of logical row j.
  Index base_index(Index j) const {
    return (removed_ && j >= *removed_) ? j + 1 : j;
  }
  auto row(Index j) const { return base_->row(base_index(j)); }
  double label(Index j) const { return base_->label(base_index(j)); }

  template <typename Fn>
  void for_each_row(Fn&& fn) const {
    const Index n = base_->n();
    for (Index i = 0; i < n; ++i) {
      if (removed_ && i == *removed_) continue;
      fn(base_->row(i), base_->label(i));
    }
  }

 private:
  friend DataView neighbor(const Dataset& base, Index i);
  DataView(const Dataset& base, Index removed)
      : base_(&base), removed_(removed) {}

  const Dataset* base_;
  std::optional<Index> removed_;
};

using NeighborView = DataView;

// The view of `base` with row i removed. Throws kIndex when i is outside
// [0, n).
DataView neighbor(const Dataset& base, Index i);

}  // namespace dpcover

#endif  // DPCOVER_DATA_H_
