// Copyright 2026 The qunc Authors
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

#ifndef QUNC_ERROR_H
#define QUNC_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace qunc {

enum class ErrorKind {
    NonSquare,
    NotHermitian,
    NoConvergence,
    NotPSD,
    DimensionMismatch,
    NonRealExpectation,
    InvalidState,
    BlochOutOfBall,
    IdentityViolation,
    TooFewObservables,
    TooManyObservables,
    WrongDimension,
    InvalidArgument,
    ParseError,
    ValidationError,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries a kind so front ends can map it
/// onto exit codes without parsing messages.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message);

    ErrorKind kind() const noexcept {
        return kind_;
    }

    /// The message without the kind prefix that what() carries.
    const std::string &message() const noexcept {
        return message_;
    }

    /// True for kinds that indicate an internal inconsistency rather than bad input.
    bool is_internal() const noexcept;

   private:
    ErrorKind kind_;
    std::string message_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string &message);

}  // namespace qunc

#endif
