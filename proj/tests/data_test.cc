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

#include <gtest/gtest.h>

#include <cmath>

#include "dpcover/error.h"
#include "fixtures.h"

namespace dpcover {
namespace {

CsvOptions two_columns() {
  CsvOptions options;
  options.feature_columns = {"a", "b"};
  options.label_column = "y";
  options.positive_label = "yes";
  return options;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorKind::kValidation;
}

TEST(CsvTest, ParsesSelectedColumnsAndLabels) {
  const auto raw = parse_csv("a,skip,b,y\n1,x,2,yes\n3,x,4,no\n5,x,6,yes\n",
                             two_columns());
  ASSERT_EQ(raw.rows(), 3);
  ASSERT_EQ(raw.cols(), 2);
  EXPECT_EQ(raw.features(1, 0), 3.0);
  EXPECT_EQ(raw.features(2, 1), 6.0);
  EXPECT_EQ(raw.labels[1], "no");
}

TEST(CsvTest, HandlesQuotesSpacesCrlfAndBom) {
  const auto raw = parse_csv(
      "\xEF\xBB\xBF\"a\", b ,y\r\n\"1.5\", 2 , yes\r\n-1,\"3\",\"no, really\"\r\n",
      two_columns());
  ASSERT_EQ(raw.rows(), 2);
  EXPECT_EQ(raw.features(0, 0), 1.5);
  EXPECT_EQ(raw.features(1, 1), 3.0);
  EXPECT_EQ(raw.labels[0], "yes");
  EXPECT_EQ(raw.labels[1], "no, really");
}

TEST(CsvTest, RowLimitTruncatesHead) {
  auto options = two_columns();
  options.max_rows = 2;
  const auto raw = parse_csv("a,b,y\n1,2,yes\n3,4,no\n5,6,yes\n", options);
  EXPECT_EQ(raw.rows(), 2);
}

TEST(CsvTest, MissingValueNamesRowAndColumn) {
  try {
    parse_csv("a,b,y\n1,2,yes\n3,,no\n", two_columns());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kData);
    const std::string msg = e.what();
    EXPECT_NE(msg.find("row 2"), std::string::npos) << msg;
    EXPECT_NE(msg.find("'b'"), std::string::npos) << msg;
  }
}

TEST(CsvTest, RejectsMalformedInput) {
  EXPECT_EQ(kind_of([] { parse_csv("a,b,y\n1,2,yes\n3,x,no\n", two_columns()); }),
            ErrorKind::kData);
  EXPECT_EQ(kind_of([] { parse_csv("a,b,y\n1,2\n3,4,no\n", two_columns()); }),
            ErrorKind::kData);
  EXPECT_EQ(kind_of([] { parse_csv("a,b,y\n", two_columns()); }),
            ErrorKind::kData);
  EXPECT_EQ(kind_of([] { parse_csv("a,b,y\n1,2,yes\n", two_columns()); }),
            ErrorKind::kData);
  EXPECT_EQ(kind_of([] { parse_csv("a,c,y\n1,2,yes\n3,4,no\n", two_columns()); }),
            ErrorKind::kConfiguration);
  EXPECT_EQ(kind_of([] { load_csv("/nonexistent/file.csv", two_columns()); }),
            ErrorKind::kData);
}

TEST(NormalizationTest, StandardizesThenScalesIntoUnitBall) {
  const auto raw = parse_csv("a,b,y\n1,10,yes\n2,30,no\n4,20,yes\n9,0,no\n",
                             two_columns());
  const Dataset data = normalize(raw);
  const NormMeta& meta = data.meta();

  // Population moments by hand.
  const double mean_a = 4.0, mean_b = 15.0;
  const double sd_a = std::sqrt((9.0 + 4.0 + 0.0 + 25.0) / 4.0);
  const double sd_b = std::sqrt((25.0 + 225.0 + 25.0 + 225.0) / 4.0);
  EXPECT_NEAR(meta.mean[0], mean_a, 1e-14);
  EXPECT_NEAR(meta.mean[1], mean_b, 1e-14);
  EXPECT_NEAR(meta.stddev[0], sd_a, 1e-14);
  EXPECT_NEAR(meta.stddev[1], sd_b, 1e-14);

  double max_norm = 0.0;
  for (Index i = 0; i < data.n(); ++i) max_norm = std::max(max_norm, data.row(i).norm());
  EXPECT_NEAR(max_norm, 1.0, 1e-12);

  // Undo the row scaling: standardized columns have mean 0 and variance 1.
  const Matrix standardized = data.features() * meta.row_norm_divisor;
  for (Index k = 0; k < 2; ++k) {
    const double mean = standardized.col(k).mean();
    const double var = (standardized.col(k).array() - mean).square().mean();
    EXPECT_NEAR(mean, 0.0, 1e-10);
    EXPECT_NEAR(var, 1.0, 1e-10);
  }
  EXPECT_EQ(data.label(0), 1.0);
  EXPECT_EQ(data.label(1), -1.0);
}

TEST(NormalizationTest, ZeroVarianceFeatureIsNamed) {
  const auto raw = parse_csv("a,b,y\n1,5,yes\n2,5,no\n", two_columns());
  try {
    normalize(raw);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kData);
    EXPECT_NE(std::string(e.what()).find("'b'"), std::string::npos);
  }
}

TEST(NormalizationTest, AdultsSubsetLiesInUnitBall) {
  const Dataset data = testing::adults();
  ASSERT_EQ(data.n(), 100);
  ASSERT_EQ(data.d(), 2);
  double max_norm = 0.0;
  for (Index i = 0; i < data.n(); ++i) max_norm = std::max(max_norm, data.row(i).norm());
  EXPECT_NEAR(max_norm, 1.0, 1e-12);
  const double positives = (data.labels().array() > 0).count();
  EXPECT_GT(positives, 0);
  EXPECT_LT(positives, 100);
}

TEST(DatasetTest, RejectsRowsOutsideBallAndBadLabels) {
  Matrix x(2, 1);
  x << 0.5, 1.5;
  EXPECT_EQ(kind_of([&] { Dataset(x, Vector::Ones(2)); }), ErrorKind::kData);
  x << 0.5, 0.5;
  Vector y(2);
  y << 1.0, 0.0;
  EXPECT_EQ(kind_of([&] { Dataset(x, y); }), ErrorKind::kData);
}

TEST(NeighborViewTest, SkipsRemovedRowWithoutRenormalizing) {
  const Dataset data = testing::adults(10);
  const DataView view = neighbor(data, 3);
  EXPECT_EQ(view.size(), 9);
  EXPECT_EQ(view.base_index(2), 2);
  EXPECT_EQ(view.base_index(3), 4);
  EXPECT_EQ(view.row(3), data.row(4));
  Index visited = 0;
  view.for_each_row([&](const auto& row, double label) {
    const Index expected = visited < 3 ? visited : visited + 1;
    EXPECT_EQ(row, data.row(expected));
    EXPECT_EQ(label, data.label(expected));
    ++visited;
  });
  EXPECT_EQ(visited, 9);
  EXPECT_EQ(kind_of([&] { neighbor(data, 10); }), ErrorKind::kIndex);
  EXPECT_EQ(kind_of([&] { neighbor(data, -1); }), ErrorKind::kIndex);
}

}  // namespace
}  // namespace dpcover
