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

#include <gtest/gtest.h>

#include <cmath>

#include "qcss/bounds.h"
#include "test_util.h"

namespace {

using qcss::BoundKind;
using qcss::CodeFamily;
using qcss::Errc;

double h2(double p) {
    if (p <= 0.0 || p >= 1.0) {
        return 0.0;
    }
    return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

// Dense-grid evaluation of the LP bound, for comparison with the refined
// minimisation.
double lp_bound_grid(double x) {
    auto g = [](double t) { return h2((1 - std::sqrt(1 - t)) / 2); };
    double best = 1.0;
    const int steps = 200000;
    for (int i = 0; i <= steps; ++i) {
        double u = (1 - 2 * x) * i / steps;
        best = std::min(best, 1 + g(u * u) - g(u * u + 2 * x * u + 2 * x));
    }
    return best;
}

TEST(Bounds, Entropy) {
    EXPECT_DOUBLE_EQ(qcss::entropy(0.0), 0.0);
    EXPECT_DOUBLE_EQ(qcss::entropy(1.0), 0.0);
    EXPECT_DOUBLE_EQ(qcss::entropy(0.5), 1.0);
    EXPECT_NEAR(qcss::entropy(0.11), h2(0.11), 1e-14);
    EXPECT_NEAR(qcss::entropy(1e-12), h2(1e-12), 1e-15);
    EXPECT_ERRC(qcss::entropy(-0.1), Errc::domain_error);
    EXPECT_ERRC(qcss::entropy(1.5), Errc::domain_error);
}

TEST(Bounds, RateBoundShapes) {
    EXPECT_DOUBLE_EQ(qcss::rate_bound(BoundKind::sphere_packing, 0.0), 1.0);
    EXPECT_NEAR(qcss::rate_bound(BoundKind::mrrw, 0.0), 1.0, 1e-9);
    EXPECT_NEAR(qcss::rate_bound(BoundKind::mrrw, 0.5), 0.0, 1e-9);
    EXPECT_NEAR(qcss::rate_bound(BoundKind::mrrw_first, 0.5), 0.0, 1e-12);
    for (int i = 0; i < 24; ++i) {
        double x = 0.01 + 0.02 * i;
        EXPECT_NEAR(qcss::rate_bound(BoundKind::mrrw, x), lp_bound_grid(x), 1e-7) << x;
        EXPECT_NEAR(qcss::rate_bound(BoundKind::mrrw_first, x), h2(0.5 - std::sqrt(x * (1 - x))), 1e-12);
        EXPECT_NEAR(qcss::rate_bound(BoundKind::sphere_packing, x), 1 - h2(x / 2), 1e-12);
        EXPECT_LE(qcss::rate_bound(BoundKind::mrrw, x), qcss::rate_bound(BoundKind::mrrw_first, x) + 1e-12);
        EXPECT_GT(qcss::rate_bound(BoundKind::mrrw, x), qcss::rate_bound(BoundKind::mrrw, std::min(x + 0.01, 0.5)));
    }
    EXPECT_ERRC(qcss::rate_bound(BoundKind::mrrw, 0.6), Errc::domain_error);
}

TEST(Bounds, Thresholds) {
    EXPECT_NEAR(qcss::quantum_rate_threshold(BoundKind::mrrw, CodeFamily::enlarged), 0.2197, 5e-4);
    EXPECT_NEAR(qcss::quantum_rate_threshold(BoundKind::mrrw, CodeFamily::css), 0.1825, 5e-4);
    EXPECT_NEAR(qcss::quantum_rate_threshold(BoundKind::sphere_packing, CodeFamily::css), 0.220056, 1e-5);
    for (auto kind : {BoundKind::sphere_packing, BoundKind::mrrw, BoundKind::mrrw_first}) {
        double enlarged = qcss::quantum_rate_threshold(kind, CodeFamily::enlarged);
        double css = qcss::quantum_rate_threshold(kind, CodeFamily::css);
        EXPECT_GT(enlarged, css);
        EXPECT_NEAR(qcss::quantum_rate_bound(kind, CodeFamily::enlarged, enlarged), 0.0, 1e-5);
        EXPECT_NEAR(qcss::quantum_rate_bound(kind, CodeFamily::css, css), 0.0, 1e-5);
    }
}

TEST(Bounds, Parsing) {
    EXPECT_EQ(qcss::parse_bound_kind("mrrw"), BoundKind::mrrw);
    EXPECT_EQ(qcss::parse_bound_kind("sphere-packing"), BoundKind::sphere_packing);
    EXPECT_EQ(qcss::parse_bound_kind("mrrw-first"), BoundKind::mrrw_first);
    EXPECT_EQ(qcss::parse_code_family("css"), CodeFamily::css);
    EXPECT_EQ(qcss::to_string(BoundKind::mrrw), "mrrw");
    EXPECT_EQ(qcss::to_string(CodeFamily::enlarged), "enlarged");
    EXPECT_ERRC(qcss::parse_bound_kind("gv"), Errc::invalid_argument);
    EXPECT_ERRC(qcss::parse_code_family("steane"), Errc::invalid_argument);
}

}  // namespace
