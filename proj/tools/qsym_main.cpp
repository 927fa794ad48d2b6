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

// qsym command-line front end. Talks to the library only through qsym.h.
//
// Exit codes: 0 simulable / success, 1 not simulable, 2 usage, parse or
// validation error, 3 computation error (budget exceeded, oracle mismatch).

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "qsym/qsym.h"

namespace {

constexpr int kExitSimulable = 0;
constexpr int kExitNotSimulable = 1;
constexpr int kExitUsage = 2;
constexpr int kExitComputation = 3;

int exit_code_for(qsym_status status) {
    switch (status) {
        case QSYM_OK:
            return kExitSimulable;
        case QSYM_ERR_BUDGET_EXCEEDED:
        case QSYM_ERR_ORACLE_MISMATCH:
        case QSYM_ERR_NOT_CLOSED:
        case QSYM_ERR_INTERNAL:
            return kExitComputation;
        default:
            return kExitUsage;
    }
}

int report_error(qsym_status status) {
    std::cerr << "qsym: " << qsym_status_string(status) << ": " << qsym_last_error() << "\n";
    return exit_code_for(status);
}

struct Flags {
    std::string mode = "auto";
    std::uint64_t threshold = 0;
    std::uint64_t seed = 0;
    bool oracle = false;
    std::uint64_t max_dim = 0;
    std::string format = "human";
    bool force_b = false;
    bool timings = false;
};

void add_run_flags(CLI::App *cmd, Flags &f) {
    cmd->add_option("--mode", f.mode, "rank arithmetic")->check(CLI::IsMember({"exact", "modular", "auto"}));
    cmd->add_option("--threshold", f.threshold, "auto mode: rows*cols above which a block goes modular");
    cmd->add_option("--seed", f.seed, "seed for the prime choice in modular arithmetic");
    cmd->add_option("--format", f.format, "output format")->check(CLI::IsMember({"human", "json"}));
    cmd->add_flag("--timings", f.timings, "include per-phase wall-clock times");
}

qsym_options make_options(const Flags &f) {
    qsym_options o;
    qsym_options_init(&o);
    o.mode = f.mode == "exact" ? QSYM_MODE_EXACT : f.mode == "modular" ? QSYM_MODE_MODULAR : QSYM_MODE_AUTO;
    if (f.threshold) o.modular_threshold = f.threshold;
    if (f.seed) o.seed = f.seed;
    o.run_oracle = f.oracle;
    o.max_dim = f.max_dim;
    o.force_condition_b = f.force_b;
    o.include_timings = f.timings;
    return o;
}

int print_report(qsym_report *report, const std::string &format) {
    char *text = nullptr;
    qsym_status st = format == "json" ? qsym_report_to_json(report, &text) : qsym_report_to_text(report, &text);
    if (st != QSYM_OK) return report_error(st);
    std::fputs(text, stdout);
    qsym_string_free(text);
    return kExitSimulable;
}

// Runs one report-producing call on the instance at path.
template <class Call>
int with_instance(const std::string &path, const std::string &format, Call &&call, bool verdict_exit) {
    qsym_instance *inst = nullptr;
    qsym_status st = qsym_instance_load(path.c_str(), &inst);
    if (st != QSYM_OK) return report_error(st);
    qsym_report *report = nullptr;
    st = call(inst, &report);
    qsym_instance_free(inst);
    if (st != QSYM_OK) return report_error(st);
    int code = print_report(report, format);
    if (code == kExitSimulable) {
        if (qsym_report_oracle_agrees(report) == 0) {
            std::cerr << "qsym: oracle mismatch: the Lie-closure verdict differs from the symmetry verdict\n";
            code = kExitComputation;
        } else if (verdict_exit && qsym_report_verdict(report) == QSYM_VERDICT_NOT_SIMULABLE) {
            code = kExitNotSimulable;
        }
    }
    qsym_report_free(report);
    return code;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qsym: decide quantum simulability from quadratic symmetries"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(qsym_version()));

    std::string path;
    Flags flags;

    auto *decide = app.add_subcommand("decide", "decide whether P simulates Q");
    decide->add_option("file", path, "instance file")->required();
    add_run_flags(decide, flags);
    decide->add_flag("--oracle", flags.oracle, "cross-check with the Lie-closure oracle (exit 3 on mismatch)");
    decide->add_option("--max-dim", flags.max_dim, "Lie-closure dimension budget for --oracle");
    decide->add_flag("--force-condition-b", flags.force_b, "evaluate condition B even if condition A fails");

    auto *closure = app.add_subcommand("closure", "Lie closure of P with symmetry dims and projection ranks");
    closure->add_option("file", path, "instance file")->required();
    add_run_flags(closure, flags);
    closure->add_flag("--oracle", flags.oracle, "also close P u Q and compare verdicts");
    closure->add_option("--max-dim", flags.max_dim, "Lie-closure dimension budget");

    std::string kind, coupling_case, couplings, output;
    std::size_t n = 0;
    auto *generate = app.add_subcommand("generate", "write a fixture instance file");
    generate->add_option("kind", kind, "ex1, ex2a, ex2b or central-spin")->required();
    generate->add_option("--n", n, "number of spins (central-spin)");
    generate->add_option("--case", coupling_case, "coupling case (central-spin)")->check(CLI::IsMember({"a", "b"}));
    generate->add_option("--couplings", couplings, "explicit couplings J_2,...,J_n (central-spin)");
    generate->add_option("-o,--output", output, "write to this file instead of stdout");

    bool linear = false, quadratic = false, center = false;
    std::string set = "p";
    auto *symmetries = app.add_subcommand("symmetries", "list a symmetry basis in canonical form");
    symmetries->add_option("file", path, "instance file")->required();
    auto *lin = symmetries->add_flag("--linear", linear, "commutant");
    auto *quad = symmetries->add_flag("--quadratic", quadratic, "tensor-square commutant");
    auto *cen = symmetries->add_flag("--center", center, "center of the commutant");
    lin->excludes(quad)->excludes(cen);
    quad->excludes(cen);
    symmetries->add_option("--set", set, "generators: P or P u Q")->check(CLI::IsMember({"p", "pq"}));
    add_run_flags(symmetries, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    const qsym_options opts = make_options(flags);
    if (decide->parsed()) {
        return with_instance(
            path, flags.format, [&](qsym_instance *i, qsym_report **r) { return qsym_decide(i, &opts, r); }, true);
    }
    if (closure->parsed()) {
        return with_instance(
            path, flags.format, [&](qsym_instance *i, qsym_report **r) { return qsym_closure(i, &opts, r); }, false);
    }
    if (symmetries->parsed()) {
        if (!linear && !quadratic && !center) {
            std::cerr << "qsym: symmetries needs one of --linear, --quadratic, --center\n";
            return kExitUsage;
        }
        auto k = linear ? QSYM_SYM_LINEAR : quadratic ? QSYM_SYM_QUADRATIC : QSYM_SYM_CENTER;
        auto s = set == "pq" ? QSYM_SET_PQ : QSYM_SET_P;
        return with_instance(
            path, flags.format,
            [&](qsym_instance *i, qsym_report **r) { return qsym_symmetries(i, k, s, &opts, r); }, false);
    }

    // generate
    qsym_instance *inst = nullptr;
    qsym_status st = qsym_instance_generate(kind.c_str(), n, coupling_case.empty() ? nullptr : coupling_case.c_str(),
                                            couplings.empty() ? nullptr : couplings.c_str(), &inst);
    if (st != QSYM_OK) return report_error(st);
    char *text = nullptr;
    st = qsym_instance_to_text(inst, &text);
    qsym_instance_free(inst);
    if (st != QSYM_OK) return report_error(st);
    int code = kExitSimulable;
    if (output.empty()) {
        std::fputs(text, stdout);
    } else {
        std::ofstream out(output, std::ios::binary);
        out << text;
        if (!out) {
            std::cerr << "qsym: cannot write '" << output << "'\n";
            code = kExitUsage;
        }
    }
    qsym_string_free(text);
    return code;
}
