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

#ifndef QCSS_BOUNDS_H_
#define QCSS_BOUNDS_H_

#include <string_view>

namespace qcss {

/// Asymptotic upper bounds R(x) on the rate of a binary code with relative
/// distance x.
enum class BoundKind {
    /// 1 - H(x / 2)
    sphere_packing,
    /// The linear-programming (McEliece-Rodemich-Rumsey-Welch) bound
    ///   min_{0 <= u <= 1 - 2x} 1 + g(u^2) - g(u^2 + 2xu + 2x),
    ///   g(t) = H((1 - sqrt(1 - t)) / 2).
    mrrw,
    /// The simpler first MRRW bound H(1/2 - sqrt(x (1 - x))).
    mrrw_first,
};

/// Which quantum-rate combination a threshold refers to.
enum class CodeFamily {
    /// R(x) + R(2x/3) - 1
    enlarged,
    /// 2 R(x) - 1
    css,
};

BoundKind parse_bound_kind(std::string_view name);
CodeFamily parse_code_family(std::string_view name);
std::string_view to_string(BoundKind kind) noexcept;
std::string_view to_string(CodeFamily family) noexcept;

/// Binary entropy in bits. Throws Errc::domain_error outside [0, 1].
double entropy(double x);

/// R(x) for x in [0, 1/2]. Throws Errc::domain_error outside.
double rate_bound(BoundKind kind, double x);

/// The quantum rate bound of the family: R(x) + R(2x/3) - 1 or 2R(x) - 1.
double quantum_rate_bound(BoundKind kind, CodeFamily family, double x);

/// Root in (0, 1/2) of quantum_rate_bound, by bisection to `tolerance`.
double quantum_rate_threshold(BoundKind kind, CodeFamily family, double tolerance = 1e-6);

}  // namespace qcss

#endif  // QCSS_BOUNDS_H_
