// Copyright 2026 The qsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSYM_ERRORS_HPP
#define QSYM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsym {

enum class ErrorCode {
    DimensionMismatch,
    ParseError,
    IndexOutOfRange,
    BadArity,
    UnknownFixture,
    NotSkewHermitian,
    NotUnitTrace,
    NotNormalized,
    NotClosed,
    BudgetExceeded,
    OracleMismatch,
    InvalidArgument,
    Io,
};

const char *error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// C API can translate it without string matching.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message);

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

/// Syntax error with a 1-based source location. `line` is 0 for inputs that
/// are a single expression rather than a file.
class ParseError : public Error {
   public:
    ParseError(std::string message, std::size_t line, std::size_t column);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string &detail() const noexcept { return detail_; }

   private:
    std::string detail_;
    std::size_t line_;
    std::size_t column_;
};

[[noreturn]] void throw_error(ErrorCode code, const std::string &message);

}  // namespace qsym

#endif  // QSYM_ERRORS_HPP
