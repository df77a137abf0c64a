/* Copyright 2026 The cansim Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the cansim simulator.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a cansim_status;
 * on failure cansim_last_error() describes the problem. The message is
 * thread-local and valid until the next cansim call on the same thread.
 * Strings returned through char** out-parameters are released with
 * cansim_string_free. Strings returned as const char* are owned by the
 * handle they came from.
 */

#ifndef CANSIM_CANSIM_H_
#define CANSIM_CANSIM_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CANSIM_BUILDING_LIBRARY)
#    define CANSIM_API __declspec(dllexport)
#  else
#    define CANSIM_API __declspec(dllimport)
#  endif
#else
#  define CANSIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cansim_status {
  CANSIM_OK = 0,
  CANSIM_ERR_INVALID_ARGUMENT = 1, /* null handle, bad option value */
  CANSIM_ERR_PARSE = 2,            /* malformed scenario or trace document */
  CANSIM_ERR_SCENARIO = 3,         /* scenario parsed but is not runnable */
  CANSIM_ERR_RUNTIME = 4,          /* a component rejected its input */
  CANSIM_ERR_IO = 5,
  CANSIM_ERR_HORIZON = 6,          /* latency does not fit in the trace */
  CANSIM_ERR_INTERNAL = 7
} cansim_status;

/* Predicate selection bits for cansim_check_options.predicates. */
#define CANSIM_CHECK_MSG1 0x01u
#define CANSIM_CHECK_MSG_CAN_FORMAT 0x02u
#define CANSIM_CHECK_WIRE 0x04u
#define CANSIM_CHECK_TRANSMISSION 0x08u
#define CANSIM_CHECK_ROW3 0x10u
#define CANSIM_CHECK_STRUCTURAL 0x20u
#define CANSIM_CHECK_ALL 0x3fu

typedef struct cansim_scenario cansim_scenario;
typedef struct cansim_trace cansim_trace;
typedef struct cansim_report cansim_report;
typedef struct cansim_fuzz_summary cansim_fuzz_summary;

CANSIM_API const char* cansim_version(void);
CANSIM_API const char* cansim_last_error(void);
CANSIM_API void cansim_string_free(char* s);

/* ---- scenarios ---------------------------------------------------------- */

/* Parse only; use cansim_scenario_validate to check runnability. */
CANSIM_API cansim_status cansim_scenario_parse(const char* json,
                                               cansim_scenario** out);
CANSIM_API cansim_status cansim_scenario_load(const char* path,
                                              cansim_scenario** out);
CANSIM_API cansim_status cansim_scenario_save(const cansim_scenario* s,
                                              const char* path);
CANSIM_API void cansim_scenario_free(cansim_scenario* s);

/* CANSIM_OK, or CANSIM_ERR_SCENARIO with every violation in the error text. */
CANSIM_API cansim_status cansim_scenario_validate(const cansim_scenario* s);

/* Enables the literal transition table and disables buffer priming. */
CANSIM_API cansim_status cansim_scenario_set_fidelity(cansim_scenario* s,
                                                      int enabled);

/* ---- simulation --------------------------------------------------------- */

/* Runs the buffered system. On CANSIM_ERR_RUNTIME *out still receives the
 * partial trace up to the failing tick. */
CANSIM_API cansim_status cansim_run(const cansim_scenario* s,
                                    cansim_trace** out);

CANSIM_API cansim_status cansim_trace_load(const char* path,
                                           cansim_trace** out);
CANSIM_API cansim_status cansim_trace_save(const cansim_trace* t,
                                           const char* path);
CANSIM_API cansim_status cansim_trace_serialize(const cansim_trace* t,
                                                char** out);
CANSIM_API void cansim_trace_free(cansim_trace* t);

CANSIM_API size_t cansim_trace_horizon(const cansim_trace* t);
CANSIM_API size_t cansim_trace_node_count(const cansim_trace* t);
/* Number of messages received on ar_1. */
CANSIM_API size_t cansim_trace_delivery_count(const cansim_trace* t);
/* Nonzero when the run stopped early on a component failure. */
CANSIM_API int cansim_trace_failed(const cansim_trace* t);

/* ---- checking ----------------------------------------------------------- */

typedef struct cansim_check_options {
  unsigned predicates; /* CANSIM_CHECK_* bits; 0 selects all */
  long latency;        /* < 0: use the scenario's mtLatency */
  int strict;          /* warnings count as failures */
} cansim_check_options;

CANSIM_API void cansim_check_options_init(cansim_check_options* options);

/* Returns the CANSIM_CHECK_* bit for a predicate name, or 0 if unknown.
 * Names: msg1, msg-can-format, wire, transmission, row3, structural, all. */
CANSIM_API unsigned cansim_predicate_from_name(const char* name);

/* A report with violations is still CANSIM_OK; inspect it. Passing a
 * latency that does not fit the trace selects CANSIM_ERR_HORIZON. */
CANSIM_API cansim_status cansim_check(const cansim_trace* t,
                                      const cansim_check_options* options,
                                      cansim_report** out);
CANSIM_API size_t cansim_report_violation_count(const cansim_report* r);
CANSIM_API size_t cansim_report_warning_count(const cansim_report* r);
/* Nonzero when the report passes under the options it was built with. */
CANSIM_API int cansim_report_passed(const cansim_report* r);
CANSIM_API const char* cansim_report_text(const cansim_report* r);
CANSIM_API const char* cansim_report_json(const cansim_report* r);
CANSIM_API void cansim_report_free(cansim_report* r);

/* ---- fuzzing and oracle ------------------------------------------------- */

typedef struct cansim_fuzz_options {
  uint64_t seed;
  size_t nodes;       /* node count of every generated scenario, >= 1 */
  size_t horizon;     /* >= 4 */
  size_t count;
  unsigned threads;   /* 0 = hardware concurrency */
  const char* failure_dir; /* failing scenarios are written here; may be NULL */
} cansim_fuzz_options;

CANSIM_API void cansim_fuzz_options_init(cansim_fuzz_options* options);
CANSIM_API cansim_status cansim_fuzz(const cansim_fuzz_options* options,
                                     cansim_fuzz_summary** out);
CANSIM_API size_t cansim_fuzz_total(const cansim_fuzz_summary* f);
CANSIM_API size_t cansim_fuzz_passed(const cansim_fuzz_summary* f);
CANSIM_API const char* cansim_fuzz_text(const cansim_fuzz_summary* f);
CANSIM_API void cansim_fuzz_free(cansim_fuzz_summary* f);

/* Compares the simulator's deliveries with the reference model. *detail
 * (optional) receives a human-readable account of both logs. */
CANSIM_API cansim_status cansim_oracle_diff(const cansim_scenario* s,
                                            int* equivalent, char** detail);

#ifdef __cplusplus
}
#endif

#endif /* CANSIM_CANSIM_H_ */
