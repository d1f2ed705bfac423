// Copyright 2026 The qcss Authors
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

#include "qcss/error.h"

namespace qcss {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::dimension_mismatch:
            return "DimensionMismatch";
        case Errc::singular_matrix:
            return "SingularMatrix";
        case Errc::unsupported_degree:
            return "UnsupportedDegree";
        case Errc::context_mismatch:
            return "ContextMismatch";
        case Errc::even_length:
            return "EvenLength";
        case Errc::coefficient_not_binary:
            return "CoefficientNotBinary";
        case Errc::length_mismatch:
            return "LengthMismatch";
        case Errc::dual_condition_violated:
            return "DualConditionViolated";
        case Errc::not_a_subcode:
            return "NotASubcode";
        case Errc::dimension_order:
            return "DimensionOrder";
        case Errc::size_too_small:
            return "SizeTooSmall";
        case Errc::insufficient_enlargement:
            return "InsufficientEnlargement";
        case Errc::not_applicable:
            return "NotApplicable";
        case Errc::domain_error:
            return "DomainError";
        case Errc::commutation_violated:
            return "CommutationViolated";
        case Errc::construction_invariant:
            return "ConstructionInvariant";
        case Errc::parse_error:
            return "ParseError";
        case Errc::invalid_argument:
            return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string &message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {
}

}  // namespace qcss
