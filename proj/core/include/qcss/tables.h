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

#ifndef QCSS_TABLES_H_
#define QCSS_TABLES_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcss/cyclic.h"
#include "qcss/linear_code.h"
#include "qcss/stabilizer.h"

namespace qcss {

enum class Table { primitive = 1, nonprimitive = 2 };

/// One row of a code table: the classical pair [n,k,d] inside [n,k',d'] and
/// the resulting quantum code [[n,K,D]].
struct TableRow {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t k_prime = 0;
    std::size_t d = 0;
    std::size_t d_prime = 0;
    std::size_t K = 0;
    std::size_t D = 0;

    bool operator==(const TableRow &other) const = default;
    std::string to_string() const;
};

enum class KnownAnomaly { none, distance_formula, k_prime, dual_condition };

struct ExpectedRow {
    TableRow row;
    KnownAnomaly anomaly = KnownAnomaly::none;
};

/// Parses the tab-separated table format (see core/data/*.tsv).
std::vector<ExpectedRow> parse_expected_rows(std::string_view tsv);
/// The embedded published rows.
std::vector<ExpectedRow> expected_rows(Table table);

/// Classical (unextended) BCH lengths used by each table.
std::vector<std::size_t> table_lengths(Table table);

/// A narrow-sense dual-containing BCH code in the nested chain of length n.
struct ChainLink {
    BchSpec spec;
    /// Designed distance after parity extension.
    std::size_t extended_distance = 0;
};

/// Distinct dual-containing narrow-sense BCH codes of length n, in order of
/// increasing designed distance (so each contains the next).
std::vector<ChainLink> dual_containing_chain(std::size_t n);

struct GeneratedRow {
    TableRow row;
    ChainLink c;
    /// Empty when C' is the even-weight code.
    std::optional<ChainLink> c_prime;
};

/// Rows for extended length n + 1. Each chain code C is paired with the
/// largest C' (the even-weight code or an earlier chain code) for which
/// ceil(3d'/2) >= d - 1 and k' > k + 1.
std::vector<GeneratedRow> generate_rows(std::size_t n);

struct RowVerification {
    bool built = false;
    std::string error;
    bool c_dual_containing = false;
    bool nested = false;
    bool commutes = false;
    bool compensation_holds = false;
    bool shift_spans_same_space = false;
    DistanceResult c_distance;
    DistanceResult c_prime_distance;
    QuantumDistanceResult quantum;

    bool algebra_ok() const noexcept {
        return built && c_dual_containing && nested && commutes && compensation_holds && shift_spans_same_space;
    }
};

enum class RowStatus { match, known_anomaly, mismatch };

struct RowReport {
    std::optional<TableRow> expected;
    std::optional<TableRow> generated;
    KnownAnomaly allowlisted = KnownAnomaly::none;
    /// Reasons the row does not simply match; empty for a clean row.
    std::vector<std::string> flags;
    /// Informational remarks (verification method, limits).
    std::vector<std::string> notes;
    RowStatus status = RowStatus::match;
    std::optional<RowVerification> verification;
};

struct TableOptions {
    /// Construct the codes and check every algebraic invariant.
    bool build_codes = true;
    DistanceCaps classical{std::uint64_t{1} << 20, 2'000'000, 0};
    std::uint64_t symplectic_cap = std::uint64_t{1} << 28;
    unsigned threads = 0;
};

struct TableReport {
    Table table = Table::primitive;
    std::vector<RowReport> rows;
    double seconds = 0.0;

    std::size_t flagged() const;
    std::size_t mismatches() const;
    std::size_t known_anomalies() const;
    /// Strict mode also rejects allowlisted anomalies.
    bool passed(bool strict = false) const;
};

TableReport reproduce_table(Table table, const TableOptions &options = {});

std::string to_text(const TableReport &report);
std::string to_json(const TableReport &report);

}  // namespace qcss

#endif  // QCSS_TABLES_H_
