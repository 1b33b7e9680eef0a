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

#include "dpcover/data.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>
#include <system_error>

#include "dpcover/error.h"

namespace dpcover {
namespace {

constexpr double kUnitBallSlack = 1e-12;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

// Splits one CSV record. Double quotes group fields and "" escapes a quote.
std::vector<std::string> split_record(std::string_view line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back(trim(field));
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  fields.emplace_back(trim(field));
  return fields;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

bool is_blank(std::string_view line) { return trim(line).empty(); }

}  // namespace

RawTable parse_csv(const std::string& text, const CsvOptions& options,
                   const std::string& source) {
  if (options.feature_columns.empty()) {
    throw Error(ErrorKind::kConfiguration, "no feature columns selected");
  }
  std::string_view body = text;
  if (body.substr(0, 3) == "\xEF\xBB\xBF") body.remove_prefix(3);
  const auto lines = split_lines(body);

  std::size_t cursor = 0;
  while (cursor < lines.size() && is_blank(lines[cursor])) ++cursor;
  if (cursor == lines.size()) {
    throw Error(ErrorKind::kData, source + ": missing header line");
  }
  const auto header = split_record(lines[cursor++]);

  auto column_of = [&](const std::string& name) -> std::size_t {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) {
      throw Error(ErrorKind::kConfiguration,
                  source + ": no column named '" + name + "'");
    }
    return static_cast<std::size_t>(it - header.begin());
  };
  std::vector<std::size_t> feature_cols;
  for (const auto& name : options.feature_columns) {
    feature_cols.push_back(column_of(name));
  }
  const std::size_t label_col = column_of(options.label_column);

  std::vector<std::vector<double>> values;
  std::vector<std::string> labels;
  std::size_t line_number = cursor;  // 1-based number of the previous line
  for (; cursor < lines.size(); ++cursor) {
    ++line_number;
    if (is_blank(lines[cursor])) continue;
    if (options.max_rows && values.size() >= *options.max_rows) break;
    const auto fields = split_record(lines[cursor]);
    if (fields.size() != header.size()) {
      std::ostringstream msg;
      msg << source << ": line " << line_number << " has " << fields.size()
          << " fields, header has " << header.size();
      throw Error(ErrorKind::kData, msg.str());
    }
    std::vector<double> row;
    row.reserve(feature_cols.size());
    for (std::size_t k = 0; k < feature_cols.size(); ++k) {
      const std::string& cell = fields[feature_cols[k]];
      double value = 0.0;
      const char* first = cell.data();
      const char* last = cell.data() + cell.size();
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (cell.empty() || ec != std::errc() || ptr != last ||
          !std::isfinite(value)) {
        std::ostringstream msg;
        msg << source << ": row " << values.size() + 1 << " (line "
            << line_number << "), column '" << options.feature_columns[k]
            << "': ";
        if (cell.empty()) {
          msg << "missing value";
        } else {
          msg << "cannot parse '" << cell << "' as a number";
        }
        throw Error(ErrorKind::kData, msg.str());
      }
      row.push_back(value);
    }
    const std::string& label = fields[label_col];
    if (label.empty()) {
      std::ostringstream msg;
      msg << source << ": row " << values.size() + 1 << " (line "
          << line_number << "), column '" << options.label_column
          << "': missing value";
      throw Error(ErrorKind::kData, msg.str());
    }
    values.push_back(std::move(row));
    labels.push_back(label);
  }

  if (values.empty()) {
    throw Error(ErrorKind::kData, source + ": no data rows (need at least 2 rows)");
  }
  if (values.size() < 2) {
    throw Error(ErrorKind::kData, source + ": need at least 2 rows, found 1");
  }

  RawTable table;
  table.feature_names = options.feature_columns;
  table.label_name = options.label_column;
  table.positive_label = options.positive_label;
  table.features.resize(static_cast<Index>(values.size()),
                        static_cast<Index>(feature_cols.size()));
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t k = 0; k < feature_cols.size(); ++k) {
      table.features(static_cast<Index>(i), static_cast<Index>(k)) =
          values[i][k];
    }
  }
  table.labels = std::move(labels);
  return table;
}

RawTable load_csv(const std::string& path, const CsvOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::kData, "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_csv(buffer.str(), options, path);
}

NormMeta NormMeta::identity(Index d) {
  NormMeta meta;
  meta.mean = Vector::Zero(d);
  meta.stddev = Vector::Ones(d);
  meta.row_norm_divisor = 1.0;
  return meta;
}

Matrix NormMeta::apply(const Matrix& raw) const {
  if (raw.cols() != mean.size()) {
    throw Error(ErrorKind::kConfiguration,
                "normalization fitted for " + std::to_string(mean.size()) +
                    " features, got " + std::to_string(raw.cols()));
  }
  Matrix out(raw.rows(), raw.cols());
  for (Index i = 0; i < raw.rows(); ++i) {
    for (Index k = 0; k < raw.cols(); ++k) {
      out(i, k) = ((raw(i, k) - mean[k]) / stddev[k]) / row_norm_divisor;
    }
  }
  return out;
}

NormMeta fit_normalization(const RawTable& raw) {
  const Index n = raw.rows();
  const Index d = raw.cols();
  NormMeta meta;
  meta.mean = raw.features.colwise().mean().transpose();
  meta.stddev.resize(d);
  for (Index k = 0; k < d; ++k) {
    const double var =
        (raw.features.col(k).array() - meta.mean[k]).square().sum() /
        static_cast<double>(n);
    if (!(var > 0.0)) {
      throw Error(ErrorKind::kData, "feature '" + raw.feature_names[k] +
                                        "' has zero variance");
    }
    meta.stddev[k] = std::sqrt(var);
  }
  double max_norm = 0.0;
  for (Index i = 0; i < n; ++i) {
    const auto standardized =
        (raw.features.row(i).transpose() - meta.mean).cwiseQuotient(meta.stddev);
    max_norm = std::max(max_norm, standardized.norm());
  }
  if (!(max_norm > 0.0)) {
    throw Error(ErrorKind::kData, "all rows are zero after standardization");
  }
  meta.row_norm_divisor = max_norm;
  return meta;
}

Dataset::Dataset(Matrix features, Vector labels, NormMeta meta)
    : features_(std::move(features)),
      labels_(std::move(labels)),
      meta_(std::move(meta)) {
  if (labels_.size() != features_.rows()) {
    throw Error(ErrorKind::kData, "label count does not match row count");
  }
  if (features_.rows() < 2) {
    throw Error(ErrorKind::kData, "need at least 2 rows");
  }
  for (Index i = 0; i < features_.rows(); ++i) {
    const double norm = features_.row(i).norm();
    if (!std::isfinite(norm) || norm > 1.0 + kUnitBallSlack) {
      throw Error(ErrorKind::kData,
                  "row " + std::to_string(i) + " lies outside the unit ball");
    }
    if (labels_[i] != 1.0 && labels_[i] != -1.0) {
      throw Error(ErrorKind::kData,
                  "row " + std::to_string(i) + " has a label other than +/-1");
    }
  }
}

Dataset::Dataset(Matrix features, Vector labels)
    : Dataset(features, std::move(labels), NormMeta::identity(features.cols())) {}

Dataset normalize(const RawTable& raw) {
  NormMeta meta = fit_normalization(raw);
  Matrix features = meta.apply(raw.features);
  Vector labels(raw.rows());
  for (Index i = 0; i < raw.rows(); ++i) {
    labels[i] = raw.labels[static_cast<std::size_t>(i)] == raw.positive_label
                    ? 1.0
                    : -1.0;
  }
  return Dataset(std::move(features), std::move(labels), std::move(meta));
}

DataView::DataView(const Dataset& base) : base_(&base) {}

DataView neighbor(const Dataset& base, Index i) {
  if (i < 0 || i >= base.n()) {
    throw Error(ErrorKind::kIndex, "row index " + std::to_string(i) +
                                       " out of range [0, " +
                                       std::to_string(base.n()) + ")");
  }
  return DataView(base, i);
}

}  // namespace dpcover
