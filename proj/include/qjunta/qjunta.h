// Copyright 2026 The qjunta Authors
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

#ifndef QJUNTA_QJUNTA_H_
#define QJUNTA_QJUNTA_H_

#include <stddef.h>
#include <stdint.h>

#if defined(QJUNTA_BUILDING_LIBRARY)
#define QJ_API __attribute__((visibility("default")))
#else
#define QJ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qj_status {
  QJ_OK = 0,
  QJ_ERR_INVALID_ARGUMENT = 1,
  QJ_ERR_DIMENSION_MISMATCH = 2,
  QJ_ERR_LIMIT = 3,
  QJ_ERR_PARSE = 4,
  QJ_ERR_IO = 5,
  QJ_ERR_INSUFFICIENT_COPIES = 6,
  QJ_ERR_INTERNAL = 99
} qj_status;

typedef enum qj_backend { QJ_BACKEND_EXACT = 0, QJ_BACKEND_MEASUREMENT = 1 } qj_backend;

/* A hidden unitary (dense, junta or Boolean encoding). */
typedef struct qj_instance qj_instance;

typedef struct qj_options {
  int k;
  double eps;
  int trials;
  uint64_t seed;
  qj_backend backend;
  double c_aa;
  double c_ggt;
  double c_l;
  double c_t;
  int threads; /* 0: hardware concurrency */
} qj_options;

QJ_API const char* qj_version(void);

/* Message of the last failing call on this thread ("" if none). */
QJ_API const char* qj_last_error(void);

/* Human-readable name of a status ("ok", "invalid_argument", ...). */
QJ_API const char* qj_status_name(qj_status status);

QJ_API void qj_options_default(qj_options* options);

QJ_API qj_status qj_instance_load(const char* path, qj_instance** out);
QJ_API qj_status qj_instance_parse(const char* json, qj_instance** out);
/* kind: "junta" | "boolean" | "dense"; family e.g. "haar", "parity-3", "random". */
QJ_API qj_status qj_instance_generate(const char* kind, const char* family, int n, int k,
                                      uint64_t seed, qj_instance** out);
QJ_API qj_status qj_instance_to_json(const qj_instance* instance, char** out);
QJ_API qj_status qj_instance_save(const qj_instance* instance, const char* path);
QJ_API int qj_instance_qubits(const qj_instance* instance);
QJ_API void qj_instance_free(qj_instance* instance);

/* Reports are schema-1 JSON strings released with qj_string_free. */
QJ_API qj_status qj_run_test(const qj_instance* instance, const qj_options* options,
                             char** report);
/* learned (nullable) receives the first successful trial's output, or NULL. */
QJ_API qj_status qj_run_learn(const qj_instance* instance, const qj_options* options,
                              char** report, qj_instance** learned);
/* suite: "core" | "lower-bound" | "calibration" | "all" */
QJ_API qj_status qj_run_verify(const char* suite, uint64_t seed, char** report);
/* algorithm: "tester" | "learner" | "both" */
QJ_API qj_status qj_run_bench(const int* ks, size_t count, const char* algorithm,
                              const qj_options* options, char** report);
/* CSV table of a bench report. */
QJ_API qj_status qj_bench_csv(const char* report, char** csv);

QJ_API void qj_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif  // QJUNTA_QJUNTA_H_
