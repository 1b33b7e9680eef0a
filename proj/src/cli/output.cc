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

#include "cli/output.h"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "dpcover/error.h"

namespace dpcover::cli {

std::string format_double(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) throw std::runtime_error("format_double failed");
  return std::string(buffer, ptr);
}

CsvTable::CsvTable(std::vector<std::string> header) : columns_(header.size()) {
  for (const auto& name : header) cell(name);
  end_row();
}

void CsvTable::separate() {
  if (current_ > 0) text_.push_back(',');
  ++current_;
}

CsvTable& CsvTable::cell(double value) {
  separate();
  text_ += format_double(value);
  return *this;
}

CsvTable& CsvTable::cell(std::int64_t value) {
  separate();
  text_ += std::to_string(value);
  return *this;
}

CsvTable& CsvTable::cell(const std::string& value) {
  separate();
  if (value.find_first_of(",\"\n") == std::string::npos) {
    text_ += value;
  } else {
    text_.push_back('"');
    for (char c : value) {
      if (c == '"') text_.push_back('"');
      text_.push_back(c);
    }
    text_.push_back('"');
  }
  return *this;
}

CsvTable& CsvTable::empty_cell() {
  separate();
  return *this;
}

void CsvTable::end_row() {
  if (current_ != columns_) {
    throw std::logic_error("CsvTable: row has " + std::to_string(current_) +
                           " cells, expected " + std::to_string(columns_));
  }
  text_.push_back('\n');
  current_ = 0;
}

std::string CsvTable::str() const { return text_; }

void Artifacts::add(const std::string& name, std::string content) {
  files_[name] = std::move(content);
}

bool Artifacts::contains(const std::string& name) const {
  return files_.count(name) != 0;
}

const std::string& Artifacts::get(const std::string& name) const {
  return files_.at(name);
}

void Artifacts::write(const std::string& dir) const {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw Error(ErrorKind::kConfiguration,
                "cannot create output directory '" + dir + "': " + ec.message());
  }
  for (const auto& [name, content] : files_) {
    const auto path = std::filesystem::path(dir) / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    if (!out) {
      throw Error(ErrorKind::kConfiguration,
                  "cannot write '" + path.string() + "'");
    }
  }
}

}  // namespace dpcover::cli
