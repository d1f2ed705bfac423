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

#ifndef QCSS_CODE_IO_H_
#define QCSS_CODE_IO_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcss/stabilizer.h"

namespace qcss {

/// Interchange form of a stabilizer code.
struct CodeDocument {
    std::size_t n = 0;
    std::size_t K = 0;
    std::optional<std::size_t> claimed_distance;
    std::optional<std::size_t> verified_distance;
    std::optional<bool> pure;
    /// Stabilizer rows, one Pauli string (I, X, Y, Z) each.
    std::vector<std::string> stabilizer;

    bool operator==(const CodeDocument &other) const = default;
};

CodeDocument make_document(const StabilizerCode &code, const QuantumDistanceResult *distance = nullptr);
StabilizerCode code_from_document(const CodeDocument &doc);

/// Pretty-printed JSON ending in a newline. Parsing and re-emitting gives the
/// same bytes.
std::string write_json(const CodeDocument &doc);
/// Header "n=<n> K=<K>" followed by one Pauli string per line.
std::string write_text(const CodeDocument &doc);

/// Throws Errc::parse_error on malformed input.
CodeDocument parse_json(std::string_view text);
CodeDocument parse_text(std::string_view text);
/// Accepts either format, chosen by the first non-blank character.
CodeDocument parse_code_document(std::string_view text);

CodeDocument read_code_file(const std::string &path);

}  // namespace qcss

#endif  // QCSS_CODE_IO_H_
