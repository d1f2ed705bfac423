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

// qcss: reproduce the code tables and inspect stabilizer codes.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcss/bounds.h"
#include "qcss/code_io.h"
#include "qcss/cyclic.h"
#include "qcss/enlarge.h"
#include "qcss/error.h"
#include "qcss/tables.h"

namespace {

using nlohmann::ordered_json;

enum class Format { text, json };

struct RunConfig {
    std::uint64_t cap_codewords = std::uint64_t{1} << 28;
    std::uint64_t cap_symplectic = std::uint64_t{1} << 28;
    std::uint64_t cap_subsets = 1'000'000'000;
    unsigned threads = 0;
    Format format = Format::text;
    bool strict = false;
    bool verbose = false;

    qcss::DistanceCaps classical() const {
        return {cap_codewords, cap_subsets, threads};
    }
};

void emit(const ordered_json &j) {
    std::cout << j.dump(2) << "\n";
}

std::string join(const std::vector<std::size_t> &values, const char *sep = " ") {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out << (i ? sep : "") << values[i];
    }
    return out.str();
}

std::string basis_name(qcss::DistanceBasis b) {
    switch (b) {
        case qcss::DistanceBasis::verified:
            return "verified";
        case qcss::DistanceBasis::designed:
            return "designed";
        case qcss::DistanceBasis::unknown:
            return "unknown";
    }
    return "unknown";
}

int run_table(qcss::Table table, const RunConfig &config, bool skip_codes) {
    qcss::TableOptions options;
    options.build_codes = !skip_codes;
    options.threads = config.threads;
    options.symplectic_cap = config.cap_symplectic;
    options.classical = {config.cap_codewords, config.cap_subsets, config.threads};
    auto report = qcss::reproduce_table(table, options);
    std::cout << (config.format == Format::json ? qcss::to_json(report) : qcss::to_text(report));
    return report.passed(config.strict) ? 0 : 1;
}

int run_lemma(unsigned max_m, const RunConfig &config) {
    bool ok = true;
    ordered_json rows = ordered_json::array();
    for (unsigned m = 3; m <= max_m; ++m) {
        std::size_t n = (std::size_t{1} << m) - 1;
        std::size_t found = qcss::max_dual_containing_delta(n);
        std::size_t predicted = (std::size_t{1} << ((m + 1) / 2)) - 1;
        ok = ok && found == predicted;
        if (config.format == Format::text) {
            std::cout << "m=" << m << " n=" << n << " max delta=" << found << " 2^ceil(m/2)-1=" << predicted
                      << (found == predicted ? "  ok" : "  VIOLATION") << "\n";
        }
        rows.push_back({{"m", m}, {"n", n}, {"max_delta", found}, {"predicted", predicted}});
    }
    if (config.format == Format::json) {
        emit({{"rows", rows}, {"passed", ok}});
    }
    if (!ok) {
        std::cerr << "LemmaViolation: maximal dual-containing delta differs from 2^ceil(m/2)-1\n";
    }
    return ok ? 0 : 1;
}

int run_scan(std::size_t limit, std::optional<std::size_t> max_coset, std::size_t lo, const RunConfig &config) {
    auto values = max_coset ? qcss::scan_small_cosets(lo, limit, *max_coset) : qcss::scan_nonprimitive(limit);
    if (config.format == Format::json) {
        emit({{"limit", limit}, {"count", values.size()}, {"n", values}});
    } else {
        std::cout << join(values) << "\n";
        if (config.verbose) {
            std::cout << values.size() << " values\n";
        }
    }
    return 0;
}

int run_cosets(std::size_t n, const RunConfig &config) {
    auto cosets = qcss::cyclotomic_cosets(n);
    if (config.format == Format::json) {
        ordered_json list = ordered_json::array();
        for (const auto &c : cosets) {
            list.push_back(c.elements);
        }
        emit({{"n", n}, {"cosets", list}});
        return 0;
    }
    for (const auto &c : cosets) {
        // Print in orbit order s, 2s, 4s, ...
        std::vector<std::size_t> orbit;
        std::size_t s = c.representative;
        do {
            orbit.push_back(s);
            s = (2 * s) % n;
        } while (s != c.representative);
        std::cout << "C_" << c.representative << " = {" << join(orbit, ",") << "}\n";
    }
    return 0;
}

qcss::LinearCode bch_or_full(std::size_t n, std::size_t delta) {
    if (delta <= 1) {
        return qcss::LinearCode::from_generator(qcss::BitMatrix::identity(n)).with_distance(1);
    }
    return qcss::bch_code(qcss::bch_spec(n, 1, delta));
}

int run_bch(std::size_t n, std::size_t delta, std::size_t b, bool extend, bool distance, const RunConfig &config) {
    auto spec = qcss::bch_spec(n, b, delta);
    auto generator = qcss::bch_generator_polynomial(spec);
    bool dual_containing = qcss::is_dual_containing(spec);
    qcss::LinearCode code = qcss::bch_code(spec);
    if (extend) {
        code = qcss::extend_parity(code);
    }
    std::optional<qcss::DistanceResult> d;
    if (distance) {
        d = qcss::min_distance(code, config.classical());
    }
    if (config.format == Format::json) {
        ordered_json j{{"n", code.n()},
                       {"k", code.k()},
                       {"b", b},
                       {"delta", delta},
                       {"defining_set", spec.defining_set},
                       {"cosets", spec.cosets},
                       {"bch_bound", spec.bch_bound()},
                       {"designed_distance", *code.designed_distance()},
                       {"dual_containing", dual_containing},
                       {"generator_polynomial", generator.to_string()}};
        if (d) {
            j["distance"] = d->distance ? ordered_json(*d->distance) : ordered_json(nullptr);
            j["distance_lower_bound"] = d->lower_bound;
        }
        emit(j);
        return 0;
    }
    std::cout << "[" << code.n() << "," << code.k() << "] BCH code, b=" << b << " delta=" << delta
              << (extend ? " (extended)" : "") << "\n"
              << "cosets: " << join(spec.cosets) << "\n"
              << "BCH bound: " << spec.bch_bound() << ", designed distance " << *code.designed_distance() << "\n"
              << "dual-containing: " << (dual_containing ? "yes" : "no") << "\n"
              << "g(x) = " << generator.to_string() << "\n";
    if (d) {
        if (d->verified()) {
            std::cout << "minimum distance: " << *d->distance << "\n";
        } else {
            std::cout << "minimum distance: >= " << d->lower_bound << " (search beyond caps)\n";
        }
    }
    return 0;
}

int run_enlarge(std::size_t n, std::size_t delta, std::size_t delta_prime, bool no_extend, bool compute_distance,
                const std::string &output, const RunConfig &config) {
    qcss::LinearCode c = bch_or_full(n, delta);
    qcss::LinearCode c_prime = bch_or_full(n, delta_prime);
    if (!no_extend) {
        c = qcss::extend_parity(c);
        c_prime = qcss::extend_parity(c_prime);
    }
    auto record = qcss::enlarge(c, c_prime);
    const auto &q = record.quantum;
    auto check = qcss::commutation_check(q);
    std::optional<qcss::QuantumDistanceResult> qd;
    if (compute_distance) {
        qd = qcss::quantum_distance(q, config.cap_symplectic, config.threads);
    }
    qcss::CodeDocument doc = qcss::make_document(q, qd ? &*qd : nullptr);
    if (!output.empty()) {
        std::ofstream out(output, std::ios::binary);
        out << (config.format == Format::json ? qcss::write_json(doc) : qcss::write_text(doc));
        if (!out) {
            throw qcss::Error(qcss::Errc::invalid_argument, "cannot write '" + output + "'");
        }
    }
    bool distance_ok = !qd || !qd->verified() || qd->distance == q.claimed_distance();
    if (config.format == Format::json) {
        ordered_json j{{"n", q.n()},
                       {"K", q.k()},
                       {"claimed_distance", *q.claimed_distance()},
                       {"distance_basis", basis_name(record.basis)},
                       {"C", {{"k", c.k()}, {"d", *c.best_known_distance()}}},
                       {"C_prime", {{"k", c_prime.k()}, {"d", *c_prime.best_known_distance()}}},
                       {"commutes", check.ok()}};
        if (qd) {
            j["verified_distance"] = qd->distance ? ordered_json(*qd->distance) : ordered_json(nullptr);
            j["pure"] = qd->pure ? ordered_json(*qd->pure) : ordered_json(nullptr);
        }
        if (output.empty()) {
            j["stabilizer"] = doc.stabilizer;
        }
        emit(j);
    } else {
        std::cout << "[[" << q.n() << "," << q.k() << "," << *q.claimed_distance() << "]] from ["
                  << c.n() << "," << c.k() << "," << *c.best_known_distance() << "] inside [" << c_prime.n() << ","
                  << c_prime.k() << "," << *c_prime.best_known_distance() << "], distance "
                  << basis_name(record.basis) << "\n"
                  << "commutation: " << (check.ok() ? "ok" : "FAILED") << "\n";
        if (qd) {
            if (qd->verified()) {
                std::cout << "verified distance: " << *qd->distance << (*qd->pure ? " (pure)" : " (impure)")
                          << ", " << qd->enumerated << " vectors\n";
            } else {
                std::cout << "verified distance: beyond symplectic cap\n";
            }
        }
        if (output.empty() && config.verbose) {
            std::cout << qcss::write_text(doc);
        }
    }
    return check.ok() && distance_ok ? 0 : 1;
}

int run_distance(const std::string &path, const RunConfig &config) {
    auto doc = qcss::read_code_file(path);
    auto code = qcss::code_from_document(doc);
    bool commutes = qcss::check_commutativity(code);
    auto result = qcss::quantum_distance(code, config.cap_symplectic, config.threads);
    bool ok = commutes && result.verified();
    if (result.verified() && doc.claimed_distance && *doc.claimed_distance != *result.distance) {
        ok = false;
    }
    if (config.format == Format::json) {
        doc.verified_distance = result.distance;
        doc.pure = result.pure;
        std::cout << qcss::write_json(doc);
    } else {
        std::cout << "[[" << code.n() << "," << code.k() << "]] commutation " << (commutes ? "ok" : "FAILED")
                  << "\n";
        if (result.verified()) {
            std::cout << "distance " << *result.distance << ", " << (*result.pure ? "pure" : "impure") << " ("
                      << result.enumerated << " vectors)\n";
            if (doc.claimed_distance && *doc.claimed_distance != *result.distance) {
                std::cout << "claimed distance " << *doc.claimed_distance << " does not match\n";
            }
        } else {
            std::cout << "distance not verified: 2^" << (code.n() + code.k())
                      << " vectors exceed --cap-symplectic\n";
        }
    }
    return ok ? 0 : 1;
}

int run_bound(const std::string &kind_name, const std::string &family_name, std::optional<double> at,
              const RunConfig &config) {
    auto kind = qcss::parse_bound_kind(kind_name);
    auto family = qcss::parse_code_family(family_name);
    double threshold = qcss::quantum_rate_threshold(kind, family);
    std::optional<double> rate;
    if (at) {
        rate = qcss::quantum_rate_bound(kind, family, *at);
    }
    if (config.format == Format::json) {
        ordered_json j{{"kind", qcss::to_string(kind)}, {"family", qcss::to_string(family)},
                       {"threshold", threshold}};
        if (rate) {
            j["x"] = *at;
            j["rate"] = *rate;
        }
        emit(j);
    } else {
        std::cout << std::fixed << std::setprecision(6) << "threshold " << threshold << "\n";
        if (rate) {
            std::cout << "rate at x=" << *at << ": " << *rate << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Enlarged CSS codes from BCH codes"};
    app.require_subcommand(1);
    RunConfig config;
    std::string format = "text";
    app.add_option("--cap-codewords", config.cap_codewords, "Largest 2^k enumerated for classical distances")
        ->check(CLI::PositiveNumber);
    app.add_option("--cap-symplectic", config.cap_symplectic, "Largest 2^(n+K) enumerated for quantum distances")
        ->check(CLI::PositiveNumber);
    app.add_option("--cap-subsets", config.cap_subsets, "Largest column-subset count for classical distances")
        ->check(CLI::PositiveNumber);
    app.add_option("--threads", config.threads, "Worker threads (0 = all cores)");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--strict", config.strict, "Treat allowlisted table anomalies as failures");
    app.add_flag("-v,--verbose", config.verbose, "More output");

    bool skip_codes = false;
    auto *table1 = app.add_subcommand("table1", "Regenerate the primitive BCH table");
    auto *table2 = app.add_subcommand("table2", "Regenerate the non-primitive BCH table");
    for (auto *t : {table1, table2}) {
        t->add_flag("--arithmetic-only", skip_codes, "Skip building the codes");
    }

    unsigned max_m = 8;
    auto *lemma = app.add_subcommand("lemma", "Check the maximal dual-containing designed distance");
    lemma->add_option("max_m", max_m, "Largest field degree")->check(CLI::Range(3u, 9u));

    std::size_t limit = 127;
    std::size_t lo = 0;
    std::optional<std::size_t> max_coset;
    auto *scan = app.add_subcommand("scan", "Odd non-primitive n whose coset C_1 omits n - 1");
    scan->add_option("limit", limit, "Upper end of the scan")->check(CLI::Range(3, 1 << 20));
    scan->add_option("--max-coset", max_coset, "Keep only n with |C_1| at most this");
    scan->add_option("--from", lo, "Lower end (exclusive) when filtering by coset size");

    std::size_t n = 0;
    auto *cosets = app.add_subcommand("cosets", "Cyclotomic cosets mod n");
    cosets->add_option("n", n, "Odd length")->required();

    std::size_t delta = 0;
    std::size_t b = 1;
    bool extend = false;
    bool want_distance = false;
    auto *bch = app.add_subcommand("bch", "Describe a BCH code");
    bch->add_option("n", n, "Odd length")->required();
    bch->add_option("delta", delta, "Designed distance")->required();
    bch->add_option("--b", b, "First exponent of the consecutive run");
    bch->add_flag("--extend", extend, "Append an overall parity bit");
    bch->add_flag("--distance", want_distance, "Compute the minimum distance");

    std::size_t delta_prime = 1;
    bool no_extend = false;
    std::string output;
    auto *enl = app.add_subcommand("enlarge", "Build the enlarged code from BCH(n, delta) inside BCH(n, delta')");
    enl->add_option("n", n, "Odd classical length")->required();
    enl->add_option("delta", delta, "Designed distance of C")->required();
    enl->add_option("delta_prime", delta_prime, "Designed distance of C' (1 gives the whole space)")->required();
    enl->add_flag("--no-extend", no_extend, "Use the cyclic codes without parity extension");
    enl->add_flag("--distance", want_distance, "Verify the quantum distance by enumeration");
    enl->add_option("-o,--output", output, "Write the code in --format");

    std::string path;
    auto *dist = app.add_subcommand("distance", "Verify the distance of a code file");
    dist->add_option("file", path, "JSON or text code file")->required()->check(CLI::ExistingFile);

    std::string kind = "mrrw";
    std::string family = "enlarged";
    std::optional<double> at;
    auto *bound = app.add_subcommand("bound", "Relative-distance threshold of an asymptotic rate bound");
    bound->add_option("kind", kind, "sphere-packing, mrrw or mrrw-first");
    bound->add_option("family", family, "enlarged or css");
    bound->add_option("--at", at, "Also evaluate the rate bound at this relative distance")
        ->check(CLI::Range(0.0, 0.5));

    CLI11_PARSE(app, argc, argv);
    config.format = format == "json" ? Format::json : Format::text;

    try {
        if (*table1 || *table2) {
            RunConfig table_config = config;
            if (app.get_option("--cap-codewords")->count() == 0) {
                table_config.cap_codewords = std::uint64_t{1} << 20;
            }
            if (app.get_option("--cap-subsets")->count() == 0) {
                table_config.cap_subsets = 2'000'000;
            }
            return run_table(*table1 ? qcss::Table::primitive : qcss::Table::nonprimitive, table_config,
                             skip_codes);
        }
        if (*lemma) {
            return run_lemma(max_m, config);
        }
        if (*scan) {
            return run_scan(limit, max_coset, lo, config);
        }
        if (*cosets) {
            return run_cosets(n, config);
        }
        if (*bch) {
            return run_bch(n, delta, b, extend, want_distance, config);
        }
        if (*enl) {
            return run_enlarge(n, delta, delta_prime, no_extend, want_distance, output, config);
        }
        if (*dist) {
            return run_distance(path, config);
        }
        if (*bound) {
            return run_bound(kind, family, at, config);
        }
    } catch (const qcss::Error &e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
