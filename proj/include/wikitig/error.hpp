// Copyright 2026 The WikiTIG Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WIKITIG_ERROR_HPP_
#define WIKITIG_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wikitig {

// Stable numeric codes; bindings and the CLI surface these verbatim.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kParse = 2,
  kLengthMismatch = 3,
  kEmptyInput = 4,
  kTypeMismatch = 5,
  kIo = 6,
  kDuplicateId = 7,
  kIdMismatch = 8,
};

inline std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kParse: return "parse_error";
    case ErrorCode::kLengthMismatch: return "length_mismatch";
    case ErrorCode::kEmptyInput: return "empty_input";
    case ErrorCode::kTypeMismatch: return "type_mismatch";
    case ErrorCode::kIo: return "io_error";
    case ErrorCode::kDuplicateId: return "duplicate_id";
    case ErrorCode::kIdMismatch: return "id_mismatch";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by delinearize. `row` is the 0-based row index, or npos when the
// failure concerns the whole string (e.g. no rows at all).
class ParseError : public Error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  ParseError(std::size_t row, const std::string& what)
      : Error(ErrorCode::kParse, what), row_(row) {}

  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

}  // namespace wikitig

#endif  // WIKITIG_ERROR_HPP_
