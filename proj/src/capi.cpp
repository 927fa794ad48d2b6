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

#include "qsym/qsym.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "qsym/errors.hpp"
#include "qsym/instance_file.hpp"
#include "qsym/report.hpp"

struct qsym_instance {
    qsym::InstanceFile file;
};

struct qsym_report {
    qsym::ReportDocument doc;
};

namespace {

thread_local std::string g_last_error;

qsym_status status_of(qsym::ErrorCode code) {
    using qsym::ErrorCode;
    switch (code) {
        case ErrorCode::DimensionMismatch:
            return QSYM_ERR_DIMENSION_MISMATCH;
        case ErrorCode::ParseError:
            return QSYM_ERR_PARSE;
        case ErrorCode::IndexOutOfRange:
            return QSYM_ERR_INDEX_OUT_OF_RANGE;
        case ErrorCode::BadArity:
            return QSYM_ERR_BAD_ARITY;
        case ErrorCode::UnknownFixture:
            return QSYM_ERR_UNKNOWN_FIXTURE;
        case ErrorCode::NotSkewHermitian:
            return QSYM_ERR_NOT_SKEW_HERMITIAN;
        case ErrorCode::NotUnitTrace:
            return QSYM_ERR_NOT_UNIT_TRACE;
        case ErrorCode::NotNormalized:
            return QSYM_ERR_NOT_NORMALIZED;
        case ErrorCode::NotClosed:
            return QSYM_ERR_NOT_CLOSED;
        case ErrorCode::BudgetExceeded:
            return QSYM_ERR_BUDGET_EXCEEDED;
        case ErrorCode::OracleMismatch:
            return QSYM_ERR_ORACLE_MISMATCH;
        case ErrorCode::InvalidArgument:
            return QSYM_ERR_INVALID_ARGUMENT;
        case ErrorCode::Io:
            return QSYM_ERR_IO;
    }
    return QSYM_ERR_INTERNAL;
}

qsym_status fail(qsym_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

// Runs fn, translating exceptions into status codes.
template <class F>
qsym_status guarded(F &&fn) {
    try {
        fn();
        return QSYM_OK;
    } catch (const qsym::Error &e) {
        return fail(status_of(e.code()), e.what());
    } catch (const std::bad_alloc &) {
        return fail(QSYM_ERR_BUDGET_EXCEEDED, "out of memory");
    } catch (const std::exception &e) {
        return fail(QSYM_ERR_INTERNAL, e.what());
    }
}

char *dup_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

qsym::RunOptions run_options(const qsym_options *o) {
    qsym_options defaults;
    qsym_options_init(&defaults);
    if (!o) o = &defaults;
    qsym::RunOptions r;
    switch (o->mode) {
        case QSYM_MODE_AUTO:
            r.decide.rank.mode = qsym::RankMode::Auto;
            break;
        case QSYM_MODE_EXACT:
            r.decide.rank.mode = qsym::RankMode::Exact;
            break;
        case QSYM_MODE_MODULAR:
            r.decide.rank.mode = qsym::RankMode::Modular;
            break;
        default:
            qsym::throw_error(qsym::ErrorCode::InvalidArgument, "unknown rank mode");
    }
    r.decide.rank.modular_threshold = o->modular_threshold;
    r.decide.rank.seed = o->seed;
    r.decide.force_condition_b = o->force_condition_b != 0;
    r.oracle = o->run_oracle != 0;
    if (o->max_dim != 0) r.max_dim = o->max_dim;
    r.timings = o->include_timings != 0;
    return r;
}

#define QSYM_REQUIRE(cond, what) \
    if (!(cond)) return fail(QSYM_ERR_INVALID_ARGUMENT, what)

}  // namespace

extern "C" {

void qsym_options_init(qsym_options *options) {
    if (!options) return;
    qsym::RankOptions defaults;
    options->mode = QSYM_MODE_AUTO;
    options->modular_threshold = defaults.modular_threshold;
    options->seed = defaults.seed;
    options->force_condition_b = 0;
    options->run_oracle = 0;
    options->max_dim = 0;
    options->include_timings = 0;
}

qsym_status qsym_instance_parse(const char *text, qsym_instance **out) {
    QSYM_REQUIRE(text && out, "null argument");
    *out = nullptr;
    return guarded([&] { *out = new qsym_instance{qsym::parse_instance_file(text)}; });
}

qsym_status qsym_instance_load(const char *path, qsym_instance **out) {
    QSYM_REQUIRE(path && out, "null argument");
    *out = nullptr;
    return guarded([&] { *out = new qsym_instance{qsym::load_instance_file(path)}; });
}

qsym_status qsym_instance_generate(const char *kind, size_t n, const char *coupling_case, const char *couplings,
                                   qsym_instance **out) {
    QSYM_REQUIRE(kind && out, "null argument");
    *out = nullptr;
    return guarded([&] {
        std::string k = kind;
        qsym::PauliModel model;
        if (k == "central-spin") {
            std::vector<qsym::Rational> j;
            if (couplings && *couplings) {
                std::string list = couplings;
                std::size_t start = 0;
                for (;;) {
                    std::size_t comma = list.find(',', start);
                    std::string item = list.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
                    auto value = qsym::GaussianRational::parse(item);
                    if (!value.is_real()) {
                        qsym::throw_error(qsym::ErrorCode::InvalidArgument, "couplings must be real");
                    }
                    j.push_back(value.re());
                    if (comma == std::string::npos) break;
                    start = comma + 1;
                }
            } else if (coupling_case && std::strlen(coupling_case) == 1) {
                j = qsym::central_spin_couplings(n, coupling_case[0]);
            } else {
                qsym::throw_error(qsym::ErrorCode::InvalidArgument,
                                  "central-spin needs a coupling case (a|b) or an explicit coupling list");
            }
            model = qsym::central_spin_model(n, j);
        } else {
            model = qsym::example_model(k);
        }
        *out = new qsym_instance{qsym::instance_file_from_model(model)};
    });
}

qsym_status qsym_instance_to_text(const qsym_instance *instance, char **out) {
    QSYM_REQUIRE(instance && out, "null argument");
    *out = nullptr;
    return guarded([&] { *out = dup_string(instance->file.to_text()); });
}

qsym_status qsym_instance_info(const qsym_instance *instance, size_t *dim, size_t *p_count, size_t *q_count) {
    QSYM_REQUIRE(instance, "null argument");
    if (dim) *dim = instance->file.dim();
    if (p_count) *p_count = instance->file.p.size();
    if (q_count) *q_count = instance->file.q.size();
    return QSYM_OK;
}

void qsym_instance_free(qsym_instance *instance) { delete instance; }

qsym_status qsym_decide(const qsym_instance *instance, const qsym_options *options, qsym_report **out) {
    QSYM_REQUIRE(instance && out, "null argument");
    *out = nullptr;
    return guarded([&] { *out = new qsym_report{qsym::run_decide(instance->file, run_options(options))}; });
}

qsym_status qsym_closure(const qsym_instance *instance, const qsym_options *options, qsym_report **out) {
    QSYM_REQUIRE(instance && out, "null argument");
    *out = nullptr;
    return guarded([&] { *out = new qsym_report{qsym::run_closure(instance->file, run_options(options))}; });
}

qsym_status qsym_symmetries(const qsym_instance *instance, qsym_symmetry_kind kind, qsym_generator_set set,
                            const qsym_options *options, qsym_report **out) {
    QSYM_REQUIRE(instance && out, "null argument");
    QSYM_REQUIRE(kind >= QSYM_SYM_LINEAR && kind <= QSYM_SYM_CENTER, "unknown symmetry kind");
    QSYM_REQUIRE(set == QSYM_SET_P || set == QSYM_SET_PQ, "unknown generator set");
    *out = nullptr;
    return guarded([&] {
        auto what = kind == QSYM_SYM_LINEAR      ? qsym::SymmetryRequest::Linear
                    : kind == QSYM_SYM_QUADRATIC ? qsym::SymmetryRequest::Quadratic
                                                 : qsym::SymmetryRequest::Center;
        auto which = set == QSYM_SET_P ? qsym::GeneratorSet::P : qsym::GeneratorSet::PQ;
        *out = new qsym_report{qsym::run_symmetries(instance->file, what, which, run_options(options))};
    });
}

qsym_verdict qsym_report_verdict(const qsym_report *report) {
    if (!report || !report->doc.decide) return QSYM_VERDICT_NONE;
    return report->doc.decide->verdict == "simulable" ? QSYM_VERDICT_SIMULABLE : QSYM_VERDICT_NOT_SIMULABLE;
}

int qsym_report_oracle_agrees(const qsym_report *report) {
    if (!report || !report->doc.oracle) return -1;
    return report->doc.oracle->agrees ? 1 : 0;
}

qsym_status qsym_report_to_json(const qsym_report *report, char **out) {
    QSYM_REQUIRE(report && out, "null argument");
    *out = nullptr;
    return guarded([&] { *out = dup_string(qsym::report_to_json(report->doc)); });
}

qsym_status qsym_report_to_text(const qsym_report *report, char **out) {
    QSYM_REQUIRE(report && out, "null argument");
    *out = nullptr;
    return guarded([&] { *out = dup_string(qsym::report_to_text(report->doc)); });
}

void qsym_report_free(qsym_report *report) { delete report; }

void qsym_string_free(char *s) { std::free(s); }

const char *qsym_last_error(void) { return g_last_error.c_str(); }

const char *qsym_status_string(qsym_status status) {
    switch (status) {
        case QSYM_OK:
            return "ok";
        case QSYM_ERR_DIMENSION_MISMATCH:
            return "dimension mismatch";
        case QSYM_ERR_PARSE:
            return "parse error";
        case QSYM_ERR_INDEX_OUT_OF_RANGE:
            return "index out of range";
        case QSYM_ERR_BAD_ARITY:
            return "bad arity";
        case QSYM_ERR_UNKNOWN_FIXTURE:
            return "unknown fixture";
        case QSYM_ERR_NOT_SKEW_HERMITIAN:
            return "not skew-Hermitian";
        case QSYM_ERR_NOT_UNIT_TRACE:
            return "trace is not one";
        case QSYM_ERR_NOT_NORMALIZED:
            return "state is not normalized";
        case QSYM_ERR_NOT_CLOSED:
            return "basis is not closed";
        case QSYM_ERR_BUDGET_EXCEEDED:
            return "budget exceeded";
        case QSYM_ERR_ORACLE_MISMATCH:
            return "oracle mismatch";
        case QSYM_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case QSYM_ERR_IO:
            return "i/o error";
        case QSYM_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

const char *qsym_version(void) { return qsym::library_version(); }

}  // extern "C"
