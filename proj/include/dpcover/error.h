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

#ifndef DPCOVER_ERROR_H_
#define DPCOVER_ERROR_H_

#include <stdexcept>
#include <string>

namespace dpcover {

enum class ErrorKind {
  kConfiguration,  // bad column names, unsupported options
  kData,           // unreadable or invalid input data
  kIndex,          // row index out of range
  kNumerical,      // optimizer failure, non-finite values
  kValidation,     // a measured quantity exceeded its configured bound
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kConfiguration:
      return "configuration error";
    case ErrorKind::kData:
      return "data error";
    case ErrorKind::kIndex:
      return "index error";
    case ErrorKind::kNumerical:
      return "numerical error";
    case ErrorKind::kValidation:
      return "validation error";
  }
  return "error";
}

}  // namespace dpcover

#endif  // DPCOVER_ERROR_H_
