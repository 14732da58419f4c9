// Copyright 2026 The chandisc Authors
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

#ifndef CHANDISC_ERROR_H
#define CHANDISC_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace chandisc {

enum class ErrorKind {
    NotHermitian,
    NotUnitary,
    NotNormalized,
    DimensionMismatch,
    UnsupportedDimension,
    UnknownName,
    ParamOutOfRange,
    InvalidDistribution,
    InvalidChannel,
    BasisNotPauli,
    BasisMismatch,
    NotUnital,
};

std::string_view error_kind_name(ErrorKind kind);

/// Raised when an input violates a precondition or a type invariant.
class Error : public std::invalid_argument {
   public:
    Error(ErrorKind kind, const std::string &message);
    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

}  // namespace chandisc

#endif
