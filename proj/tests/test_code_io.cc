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

#include "qcss/code_io.h"
#include "qcss/cyclic.h"
#include "qcss/enlarge.h"
#include "test_util.h"

namespace {

using qcss::CodeDocument;
using qcss::Errc;

qcss::StabilizerCode eight_qubit_code() {
    auto c = qcss::extend_parity(qcss::bch_code(qcss::bch_spec(7, 1, 3)));
    return qcss::enlarge(c, qcss::even_weight_code(8)).quantum;
}

TEST(CodeIo, JsonRoundTripIsByteIdentical) {
    auto code = eight_qubit_code();
    auto d = qcss::quantum_distance(code);
    auto doc = qcss::make_document(code, &d);
    EXPECT_EQ(doc.n, 8u);
    EXPECT_EQ(doc.K, 3u);
    EXPECT_EQ(doc.claimed_distance, 3u);
    EXPECT_EQ(doc.verified_distance, 3u);
    EXPECT_EQ(doc.pure, true);
    auto first = qcss::write_json(doc);
    auto parsed = qcss::parse_json(first);
    EXPECT_EQ(parsed, doc);
    EXPECT_EQ(qcss::write_json(parsed), first);

    auto bare = qcss::make_document(code);
    auto text = qcss::write_json(bare);
    EXPECT_NE(text.find("\"verified_distance\": null"), std::string::npos);
    EXPECT_EQ(qcss::write_json(qcss::parse_json(text)), text);
}

TEST(CodeIo, TextFormat) {
    auto doc = qcss::make_document(eight_qubit_code());
    auto text = qcss::write_text(doc);
    EXPECT_EQ(text.substr(0, text.find('\n')), "n=8 K=3");
    auto parsed = qcss::parse_text(text);
    EXPECT_EQ(parsed.stabilizer, doc.stabilizer);
    EXPECT_EQ(qcss::write_text(parsed), text);
    EXPECT_EQ(qcss::parse_code_document(text).n, 8u);
    EXPECT_EQ(qcss::parse_code_document(qcss::write_json(doc)).n, 8u);
}

TEST(CodeIo, DocumentRebuildsTheCode) {
    auto code = eight_qubit_code();
    auto rebuilt = qcss::code_from_document(qcss::make_document(code));
    EXPECT_EQ(rebuilt.n(), 8u);
    EXPECT_EQ(rebuilt.k(), 3u);
    EXPECT_TRUE(qcss::row_space_equal(rebuilt.generator().combined(), code.generator().combined()));
    EXPECT_EQ(qcss::quantum_distance(rebuilt).distance, 3u);
}

TEST(CodeIo, MalformedInput) {
    EXPECT_ERRC(qcss::parse_text("n=3 K=1\nXXI\n"), Errc::parse_error);
    EXPECT_ERRC(qcss::parse_text("K=1 n=3\nXXI\nZZI\n"), Errc::parse_error);
    EXPECT_ERRC(qcss::parse_text("n=3 K=1\nXXI\nZQI\n"), Errc::parse_error);
    EXPECT_ERRC(qcss::parse_text(""), Errc::parse_error);
    EXPECT_ERRC(qcss::parse_json("{\"n\": 2}"), Errc::parse_error);
    EXPECT_ERRC(qcss::parse_json("{not json"), Errc::parse_error);
    EXPECT_ERRC(qcss::code_from_document(qcss::parse_text("n=2 K=0\nXX\nXX\n")), Errc::parse_error);
    EXPECT_ERRC(qcss::read_code_file("/nonexistent/code.json"), Errc::invalid_argument);
}

}  // namespace
