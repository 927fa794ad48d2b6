/*
 * Copyright 2026 The qsym Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef QSYM_QSYM_H
#define QSYM_QSYM_H

/*
 * C interface to libqsym.
 *
 * Handles are opaque and owned by the caller; release them with the
 * matching *_free function. Every call returns a qsym_status; on failure
 * qsym_last_error() describes the problem (per thread, valid until the next
 * failing call on that thread). Strings returned through char** are
 * heap-allocated and released with qsym_string_free.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QSYM_API __declspec(dllexport)
#else
#define QSYM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qsym_instance qsym_instance;
typedef struct qsym_report qsym_report;

typedef enum {
    QSYM_OK = 0,
    QSYM_ERR_DIMENSION_MISMATCH = 1,
    QSYM_ERR_PARSE = 2,
    QSYM_ERR_INDEX_OUT_OF_RANGE = 3,
    QSYM_ERR_BAD_ARITY = 4,
    QSYM_ERR_UNKNOWN_FIXTURE = 5,
    QSYM_ERR_NOT_SKEW_HERMITIAN = 6,
    QSYM_ERR_NOT_UNIT_TRACE = 7,
    QSYM_ERR_NOT_NORMALIZED = 8,
    QSYM_ERR_NOT_CLOSED = 9,
    QSYM_ERR_BUDGET_EXCEEDED = 10,
    QSYM_ERR_ORACLE_MISMATCH = 11,
    QSYM_ERR_INVALID_ARGUMENT = 12,
    QSYM_ERR_IO = 13,
    QSYM_ERR_INTERNAL = 14
} qsym_status;

typedef enum { QSYM_MODE_AUTO = 0, QSYM_MODE_EXACT = 1, QSYM_MODE_MODULAR = 2 } qsym_rank_mode;

typedef enum { QSYM_SYM_LINEAR = 0, QSYM_SYM_QUADRATIC = 1, QSYM_SYM_CENTER = 2 } qsym_symmetry_kind;

typedef enum { QSYM_SET_P = 0, QSYM_SET_PQ = 1 } qsym_generator_set;

typedef enum { QSYM_VERDICT_NONE = -1, QSYM_VERDICT_SIMULABLE = 0, QSYM_VERDICT_NOT_SIMULABLE = 1 } qsym_verdict;

typedef struct {
    qsym_rank_mode mode;
    /* Auto mode switches a block to modular arithmetic above rows*cols. */
    uint64_t modular_threshold;
    uint64_t seed;
    int force_condition_b;
    /* Cross-check with the Lie-closure oracle. */
    int run_oracle;
    /* Closure dimension budget; 0 means d^2. */
    uint64_t max_dim;
    int include_timings;
} qsym_options;

/* Fills in the defaults: auto mode, threshold 4000000, fixed seed. */
QSYM_API void qsym_options_init(qsym_options *options);

QSYM_API qsym_status qsym_instance_parse(const char *text, qsym_instance **out);
QSYM_API qsym_status qsym_instance_load(const char *path, qsym_instance **out);
/*
 * kind: "ex1", "ex2a", "ex2b" or "central-spin". For central-spin, n is the
 * number of spins and either coupling_case ("a" or "b") or couplings (a
 * comma-separated list of n-1 rationals J_2..J_n) must be given. n and the
 * coupling arguments are ignored for the other kinds.
 */
QSYM_API qsym_status qsym_instance_generate(const char *kind, size_t n, const char *coupling_case,
                                            const char *couplings, qsym_instance **out);
QSYM_API qsym_status qsym_instance_to_text(const qsym_instance *instance, char **out);
QSYM_API qsym_status qsym_instance_info(const qsym_instance *instance, size_t *dim, size_t *p_count,
                                        size_t *q_count);
QSYM_API void qsym_instance_free(qsym_instance *instance);

QSYM_API qsym_status qsym_decide(const qsym_instance *instance, const qsym_options *options, qsym_report **out);
QSYM_API qsym_status qsym_closure(const qsym_instance *instance, const qsym_options *options, qsym_report **out);
QSYM_API qsym_status qsym_symmetries(const qsym_instance *instance, qsym_symmetry_kind kind,
                                     qsym_generator_set set, const qsym_options *options, qsym_report **out);

QSYM_API qsym_verdict qsym_report_verdict(const qsym_report *report);
/* 1 if the oracle ran and agreed, 0 if it disagreed, -1 if it did not run. */
QSYM_API int qsym_report_oracle_agrees(const qsym_report *report);
QSYM_API qsym_status qsym_report_to_json(const qsym_report *report, char **out);
QSYM_API qsym_status qsym_report_to_text(const qsym_report *report, char **out);
QSYM_API void qsym_report_free(qsym_report *report);

QSYM_API void qsym_string_free(char *s);
QSYM_API const char *qsym_last_error(void);
QSYM_API const char *qsym_status_string(qsym_status status);
QSYM_API const char *qsym_version(void);

#ifdef __cplusplus
}
#endif

#endif /* QSYM_QSYM_H */
