// Copyright 2026 The qsym Authors
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

#ifndef QSYM_REPORT_HPP
#define QSYM_REPORT_HPP

// Structured run reports and the drivers that fill them. The JSON form is
// the stable machine interface (schema "qsym-report", version 1); it holds
// no timings unless asked for, so repeated exact runs are byte-identical.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsym/instance_file.hpp"
#include "qsym/symmetry.hpp"

namespace qsym {

inline constexpr int kReportSchemaVersion = 1;
const char *library_version();

struct RankSummary {
    std::size_t rank = 0;
    std::string method = "exact";
    std::optional<std::uint64_t> prime;

    friend bool operator==(const RankSummary &, const RankSummary &) = default;
};

struct DimensionSummary {
    std::size_t dim = 0;
    std::size_t unknowns = 0;
    RankSummary rank;

    friend bool operator==(const DimensionSummary &, const DimensionSummary &) = default;
};

using MatrixText = std::vector<std::vector<std::string>>;

struct DecideSection {
    std::string verdict;
    std::string condition_a;
    DimensionSummary quadratic_p;
    DimensionSummary quadratic_pq;
    std::string condition_b;
    std::optional<std::size_t> center_dim;
    std::optional<RankSummary> rank_restricted;
    std::optional<RankSummary> rank_full;
    std::optional<MatrixText> t_restricted;
    std::optional<MatrixText> t_full;
    DimensionSummary linear_p;
    DimensionSummary linear_pq;
    std::string failure_witness;
    bool monte_carlo = false;

    friend bool operator==(const DecideSection &, const DecideSection &) = default;
};

struct OracleSection {
    std::string verdict;
    std::size_t closure_dim_p = 0;
    std::size_t closure_dim_pq = 0;
    bool agrees = false;

    friend bool operator==(const OracleSection &, const OracleSection &) = default;
};

struct ClosureSection {
    std::size_t lie_dim = 0;
    std::size_t semisimple_dim = 0;
    std::size_t center_dim = 0;
    std::size_t generation_depth = 0;

    friend bool operator==(const ClosureSection &, const ClosureSection &) = default;
};

struct SymmetrySection {
    std::string kind;  // linear | quadratic | center
    std::string set;   // p | pq
    std::size_t dim = 0;
    std::vector<std::string> basis;

    friend bool operator==(const SymmetrySection &, const SymmetrySection &) = default;
};

struct ReportDocument {
    int schema_version = kReportSchemaVersion;
    std::string tool_version;
    std::string command;
    /// FNV-1a 64 of the canonical instance text, 16 hex digits.
    std::string input_digest;
    std::string rank_mode = "auto";
    std::uint64_t modular_threshold = 0;
    std::uint64_t seed = 0;
    bool force_condition_b = false;
    std::optional<DecideSection> decide;
    std::optional<OracleSection> oracle;
    std::optional<ClosureSection> closure;
    std::optional<SymmetrySection> symmetries;
    /// Seconds per phase; empty unless timings were requested.
    std::map<std::string, double> timings;

    friend bool operator==(const ReportDocument &, const ReportDocument &) = default;
};

std::string fnv1a64_hex(std::string_view data);

std::string report_to_json(const ReportDocument &report);
/// Throws ParseError on malformed input or an unknown schema version.
ReportDocument report_from_json(std::string_view json);
std::string report_to_text(const ReportDocument &report);

struct RunOptions {
    DecideOptions decide;
    /// Cross-check the verdict with the Lie-closure oracle.
    bool oracle = false;
    std::optional<std::size_t> max_dim;
    bool timings = false;
};

enum class SymmetryRequest { Linear, Quadratic, Center };
enum class GeneratorSet { P, PQ };

ReportDocument run_decide(const InstanceFile &file, const RunOptions &options);
/// One row of the central-spin table: closure and decomposition of <P>,
/// symmetry dims and central-projection ranks (condition B always evaluated).
ReportDocument run_closure(const InstanceFile &file, const RunOptions &options);
ReportDocument run_symmetries(const InstanceFile &file, SymmetryRequest what, GeneratorSet set,
                              const RunOptions &options);

}  // namespace qsym

#endif  // QSYM_REPORT_HPP
