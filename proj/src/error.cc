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

#include "qunc/error.h"

namespace qunc {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonSquare:
            return "NonSquare";
        case ErrorKind::NotHermitian:
            return "NotHermitian";
        case ErrorKind::NoConvergence:
            return "NoConvergence";
        case ErrorKind::NotPSD:
            return "NotPSD";
        case ErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorKind::NonRealExpectation:
            return "NonRealExpectation";
        case ErrorKind::InvalidState:
            return "InvalidState";
        case ErrorKind::BlochOutOfBall:
            return "BlochOutOfBall";
        case ErrorKind::IdentityViolation:
            return "IdentityViolation";
        case ErrorKind::TooFewObservables:
            return "TooFewObservables";
        case ErrorKind::TooManyObservables:
            return "TooManyObservables";
        case ErrorKind::WrongDimension:
            return "WrongDimension";
        case ErrorKind::InvalidArgument:
            return "InvalidArgument";
        case ErrorKind::ParseError:
            return "ParseError";
        case ErrorKind::ValidationError:
            return "ValidationError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind), message_(message) {
}

bool Error::is_internal() const noexcept {
    return kind_ == ErrorKind::NoConvergence || kind_ == ErrorKind::NonRealExpectation ||
           kind_ == ErrorKind::IdentityViolation;
}

void fail(ErrorKind kind, const std::string &message) {
    throw Error(kind, message);
}

}  // namespace qunc
