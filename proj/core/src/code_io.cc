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

#include "qcss/code_io.h"

#include <fstream>
#include <regex>
#include <sstream>

#include "json.hpp"
#include "qcss/error.h"

namespace qcss {

namespace {

using nlohmann::ordered_json;

template <typename T>
ordered_json optional_json(const std::optional<T> &value) {
    return value ? ordered_json(*value) : ordered_json(nullptr);
}

template <typename T>
std::optional<T> optional_field(const ordered_json &doc, const char *key) {
    auto it = doc.find(key);
    if (it == doc.end() || it->is_null()) {
        return std::nullopt;
    }
    return it->get<T>();
}

void check_rows(const CodeDocument &doc) {
    if (doc.K > doc.n || doc.stabilizer.size() != doc.n - doc.K) {
        throw Error(Errc::parse_error, "expected n - K = " + std::to_string(doc.n - std::min(doc.n, doc.K)) +
                                           " stabilizer rows, found " + std::to_string(doc.stabilizer.size()));
    }
    for (const auto &row : doc.stabilizer) {
        if (row.size() != doc.n || row.find_first_not_of("IXYZ") != std::string::npos) {
            throw Error(Errc::parse_error, "bad Pauli string '" + row + "'");
        }
    }
}

}  // namespace

CodeDocument make_document(const StabilizerCode &code, const QuantumDistanceResult *distance) {
    CodeDocument doc;
    doc.n = code.n();
    doc.K = code.k();
    doc.claimed_distance = code.claimed_distance();
    if (distance != nullptr) {
        doc.verified_distance = distance->distance;
        doc.pure = distance->pure;
    }
    doc.stabilizer = to_pauli_strings(code);
    return doc;
}

StabilizerCode code_from_document(const CodeDocument &doc) {
    check_rows(doc);
    SymplecticMatrix stabilizer = from_pauli_strings(doc.stabilizer, doc.n);
    if (rank(stabilizer.combined()) != stabilizer.rows()) {
        throw Error(Errc::parse_error, "stabilizer rows are linearly dependent");
    }
    return StabilizerCode::from_stabilizer(stabilizer, doc.claimed_distance);
}

std::string write_json(const CodeDocument &doc) {
    ordered_json j;
    j["n"] = doc.n;
    j["K"] = doc.K;
    j["claimed_distance"] = optional_json(doc.claimed_distance);
    j["verified_distance"] = optional_json(doc.verified_distance);
    j["pure"] = optional_json(doc.pure);
    j["stabilizer"] = doc.stabilizer;
    return j.dump(2) + "\n";
}

std::string write_text(const CodeDocument &doc) {
    std::string out = "n=" + std::to_string(doc.n) + " K=" + std::to_string(doc.K) + "\n";
    for (const auto &row : doc.stabilizer) {
        out += row;
        out += '\n';
    }
    return out;
}

CodeDocument parse_json(std::string_view text) {
    CodeDocument doc;
    try {
        auto j = ordered_json::parse(text);
        doc.n = j.at("n").get<std::size_t>();
        doc.K = j.at("K").get<std::size_t>();
        doc.claimed_distance = optional_field<std::size_t>(j, "claimed_distance");
        doc.verified_distance = optional_field<std::size_t>(j, "verified_distance");
        doc.pure = optional_field<bool>(j, "pure");
        doc.stabilizer = j.at("stabilizer").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception &e) {
        throw Error(Errc::parse_error, std::string("invalid code JSON: ") + e.what());
    }
    check_rows(doc);
    return doc;
}

CodeDocument parse_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    static const std::regex header(R"(\s*n\s*=\s*(\d+)\s+K\s*=\s*(\d+)\s*)");
    CodeDocument doc;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.find_first_not_of(" \t") == std::string::npos) {
            continue;
        }
        if (!have_header) {
            std::smatch m;
            if (!std::regex_match(line, m, header)) {
                throw Error(Errc::parse_error, "expected header 'n=<n> K=<K>', found '" + line + "'");
            }
            doc.n = std::stoul(m[1].str());
            doc.K = std::stoul(m[2].str());
            have_header = true;
            continue;
        }
        doc.stabilizer.push_back(line);
    }
    if (!have_header) {
        throw Error(Errc::parse_error, "empty code file");
    }
    check_rows(doc);
    return doc;
}

CodeDocument parse_code_document(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        return parse_json(text);
    }
    return parse_text(text);
}

CodeDocument read_code_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(Errc::invalid_argument, "cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_code_document(buffer.str());
}

}  // namespace qcss
