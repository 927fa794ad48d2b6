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

#include "qsym/errors.hpp"

namespace qsym {

const char *error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::ParseError:
            return "ParseError";
        case ErrorCode::IndexOutOfRange:
            return "IndexOutOfRange";
        case ErrorCode::BadArity:
            return "BadArity";
        case ErrorCode::UnknownFixture:
            return "UnknownFixture";
        case ErrorCode::NotSkewHermitian:
            return "NotSkewHermitian";
        case ErrorCode::NotUnitTrace:
            return "NotUnitTrace";
        case ErrorCode::NotNormalized:
            return "NotNormalized";
        case ErrorCode::NotClosed:
            return "NotClosed";
        case ErrorCode::BudgetExceeded:
            return "BudgetExceeded";
        case ErrorCode::OracleMismatch:
            return "OracleMismatch";
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
        case ErrorCode::Io:
            return "Io";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message) : std::runtime_error(message), code_(code) {}

namespace {

std::string located(const std::string &message, std::size_t line, std::size_t column) {
    std::string where = line == 0 ? "column " + std::to_string(column)
                                  : "line " + std::to_string(line) + ", column " + std::to_string(column);
    return where + ": " + message;
}

}  // namespace

ParseError::ParseError(std::string message, std::size_t line, std::size_t column)
    : Error(ErrorCode::ParseError, located(message, line, column)),
      detail_(std::move(message)),
      line_(line),
      column_(column) {}

void throw_error(ErrorCode code, const std::string &message) { throw Error(code, message); }

}  // namespace qsym
