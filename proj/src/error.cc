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

#include "chandisc/error.h"

namespace chandisc {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotHermitian:
            return "NotHermitian";
        case ErrorKind::NotUnitary:
            return "NotUnitary";
        case ErrorKind::NotNormalized:
            return "NotNormalized";
        case ErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorKind::UnsupportedDimension:
            return "UnsupportedDimension";
        case ErrorKind::UnknownName:
            return "UnknownName";
        case ErrorKind::ParamOutOfRange:
            return "ParamOutOfRange";
        case ErrorKind::InvalidDistribution:
            return "InvalidDistribution";
        case ErrorKind::InvalidChannel:
            return "InvalidChannel";
        case ErrorKind::BasisNotPauli:
            return "BasisNotPauli";
        case ErrorKind::BasisMismatch:
            return "BasisMismatch";
        case ErrorKind::NotUnital:
            return "NotUnital";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::invalid_argument(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
}

}  // namespace chandisc
