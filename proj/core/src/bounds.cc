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

#include "qcss/bounds.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcss/error.h"

namespace qcss {

namespace {

// Grid resolution for the LP-bound minimisation before golden-section
// refinement.
constexpr int kGridPoints = 400;

double clamp_unit(double x) {
    return std::clamp(x, 0.0, 1.0);
}

double lp_g(double t) {
    return entropy(clamp_unit((1.0 - std::sqrt(clamp_unit(1.0 - t))) / 2.0));
}

double lp_bound(double x) {
    const double hi = 1.0 - 2.0 * x;
    auto f = [x](double u) { return 1.0 + lp_g(u * u) - lp_g(u * u + 2.0 * x * u + 2.0 * x); };
    if (hi <= 0.0) {
        return f(0.0);
    }
    int best = 0;
    double best_value = f(0.0);
    for (int i = 1; i <= kGridPoints; ++i) {
        double v = f(hi * i / kGridPoints);
        if (v < best_value) {
            best_value = v;
            best = i;
        }
    }
    double a = hi * std::max(best - 1, 0) / kGridPoints;
    double b = hi * std::min(best + 1, kGridPoints) / kGridPoints;
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - ratio * (b - a);
    double d = a + ratio * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int iter = 0; iter < 80 && b - a > 1e-13; ++iter) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = f(d);
        }
    }
    return std::min({best_value, fc, fd});
}

}  // namespace

BoundKind parse_bound_kind(std::string_view name) {
    if (name == "sphere-packing" || name == "sphere_packing" || name == "hamming") {
        return BoundKind::sphere_packing;
    }
    if (name == "mrrw" || name == "lp") {
        return BoundKind::mrrw;
    }
    if (name == "mrrw1" || name == "mrrw-first" || name == "mrrw_first") {
        return BoundKind::mrrw_first;
    }
    throw Error(Errc::invalid_argument, "unknown bound kind '" + std::string(name) + "'");
}

CodeFamily parse_code_family(std::string_view name) {
    if (name == "enlarged") {
        return CodeFamily::enlarged;
    }
    if (name == "css") {
        return CodeFamily::css;
    }
    throw Error(Errc::invalid_argument, "unknown code family '" + std::string(name) + "'");
}

std::string_view to_string(BoundKind kind) noexcept {
    switch (kind) {
        case BoundKind::sphere_packing:
            return "sphere-packing";
        case BoundKind::mrrw:
            return "mrrw";
        case BoundKind::mrrw_first:
            return "mrrw-first";
    }
    return "?";
}

std::string_view to_string(CodeFamily family) noexcept {
    return family == CodeFamily::enlarged ? "enlarged" : "css";
}

double entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw Error(Errc::domain_error, "entropy argument " + std::to_string(x) + " outside [0, 1]");
    }
    if (x == 0.0 || x == 1.0) {
        return 0.0;
    }
    // log1p keeps (1 - x) log(1 - x) accurate for tiny x.
    return (-x * std::log(x) - (1.0 - x) * std::log1p(-x)) / std::log(2.0);
}

double rate_bound(BoundKind kind, double x) {
    if (!(x >= 0.0 && x <= 0.5)) {
        throw Error(Errc::domain_error, "relative distance " + std::to_string(x) + " outside [0, 1/2]");
    }
    switch (kind) {
        case BoundKind::sphere_packing:
            return 1.0 - entropy(x / 2.0);
        case BoundKind::mrrw_first:
            return entropy(std::max(0.0, 0.5 - std::sqrt(x * (1.0 - x))));
        case BoundKind::mrrw:
            return lp_bound(x);
    }
    throw Error(Errc::invalid_argument, "unknown bound kind");
}

double quantum_rate_bound(BoundKind kind, CodeFamily family, double x) {
    if (family == CodeFamily::enlarged) {
        return rate_bound(kind, x) + rate_bound(kind, 2.0 * x / 3.0) - 1.0;
    }
    return 2.0 * rate_bound(kind, x) - 1.0;
}

double quantum_rate_threshold(BoundKind kind, CodeFamily family, double tolerance) {
    double lo = 0.0;
    double hi = 0.5;
    double f_lo = quantum_rate_bound(kind, family, lo);
    double f_hi = quantum_rate_bound(kind, family, hi);
    if (!(f_lo > 0.0 && f_hi < 0.0)) {
        throw Error(Errc::domain_error, "quantum rate bound does not change sign on [0, 1/2]");
    }
    while (hi - lo > tolerance) {
        double mid = 0.5 * (lo + hi);
        if (quantum_rate_bound(kind, family, mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace qcss
