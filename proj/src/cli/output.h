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

#ifndef DPCOVER_CLI_OUTPUT_H_
#define DPCOVER_CLI_OUTPUT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dpcover/types.h"

namespace dpcover::cli {

// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

// Comma-separated table with a header row; numbers use format_double.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  CsvTable& cell(double value);
  CsvTable& cell(std::int64_t value);
  CsvTable& cell(const std::string& value);
  CsvTable& empty_cell();
  void end_row();

  std::string str() const;

 private:
  void separate();

  std::size_t columns_;
  std::size_t current_ = 0;
  std::string text_;
};

// Files produced by one run, written together once the run has succeeded.
class Artifacts {
 public:
  void add(const std::string& name, std::string content);
  bool contains(const std::string& name) const;
  const std::string& get(const std::string& name) const;
  const std::map<std::string, std::string>& files() const { return files_; }

  // Creates `dir` and writes every file.
  void write(const std::string& dir) const;

 private:
  std::map<std::string, std::string> files_;
};

}  // namespace dpcover::cli

#endif  // DPCOVER_CLI_OUTPUT_H_
