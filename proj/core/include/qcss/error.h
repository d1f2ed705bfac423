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

#ifndef QCSS_ERROR_H_
#define QCSS_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcss {

enum class Errc {
    dimension_mismatch,
    singular_matrix,
    unsupported_degree,
    context_mismatch,
    even_length,
    coefficient_not_binary,
    length_mismatch,
    dual_condition_violated,
    not_a_subcode,
    dimension_order,
    size_too_small,
    insufficient_enlargement,
    not_applicable,
    domain_error,
    commutation_violated,
    construction_invariant,
    parse_error,
    invalid_argument,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and tests) can dispatch on the kind without parsing messages.
class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string &message);

    Errc code() const noexcept {
        return code_;
    }

   private:
    Errc code_;
};

}  // namespace qcss

#endif  // QCSS_ERROR_H_
