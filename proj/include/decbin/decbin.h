/*
 * Copyright 2026 The decbin Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to decbin: correctly rounded decimal string to IEEE-754
 * binary64/binary32 conversion, the exact reference converter, the
 * power-of-five table and the no-fallback prover.
 *
 * Functions return a decbin_status. Objects are opaque handles created by
 * *_create / decbin_verify and released by the matching *_free. Strings
 * returned as const char* are owned by the handle they came from and stay
 * valid until it is freed. All functions are thread-safe for distinct
 * handles.
 */

#ifndef DECBIN_DECBIN_H_
#define DECBIN_DECBIN_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(DECBIN_BUILDING_LIBRARY)
#define DECBIN_API __declspec(dllexport)
#else
#define DECBIN_API __declspec(dllimport)
#endif
#else
#define DECBIN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum decbin_status {
  DECBIN_OK = 0,
  DECBIN_ERR_SCAN = 1,     /* input is not a number; see offset/reason */
  DECBIN_ERR_ARGUMENT = 2, /* null pointer, bad enum or out-of-range value */
  DECBIN_ERR_BUFFER = 3,   /* output buffer too small */
  DECBIN_ERR_INTERNAL = 4  /* unexpected failure inside the library */
} decbin_status;

typedef enum decbin_target { DECBIN_BINARY64 = 0, DECBIN_BINARY32 = 1 } decbin_target;

typedef enum decbin_class {
  DECBIN_CLASS_ZERO = 0,
  DECBIN_CLASS_SUBNORMAL = 1,
  DECBIN_CLASS_NORMAL = 2,
  DECBIN_CLASS_INFINITY = 3,
  DECBIN_CLASS_NAN = 4
} decbin_class;

typedef enum decbin_scan_reason {
  DECBIN_SCAN_NONE = 0,
  DECBIN_SCAN_EMPTY = 1,
  DECBIN_SCAN_NO_DIGITS = 2,
  DECBIN_SCAN_MALFORMED_EXPONENT = 3,
  DECBIN_SCAN_NON_ASCII = 4
} decbin_scan_reason;

typedef enum decbin_variant {
  DECBIN_VARIANT_NO_CHECK = 0,
  DECBIN_VARIANT_WITH_CHECK = 1,
  DECBIN_VARIANT_ORACLE = 2
} decbin_variant;

#define DECBIN_POW5_MIN_Q (-342)
#define DECBIN_POW5_MAX_Q 308
#define DECBIN_POW5_COUNT 651

/* (-1)^negative * w * 10^q as read from a number string. */
typedef struct decbin_decimal {
  int negative;
  int is_zero;   /* all significand digits were zero */
  int truncated; /* more than 19 significant digits; w holds the first 19 */
  uint64_t w;
  int64_t q;
  size_t consumed;           /* bytes consumed, or error offset */
  decbin_scan_reason reason; /* DECBIN_SCAN_NONE unless DECBIN_ERR_SCAN */
} decbin_decimal;

typedef struct decbin_value {
  uint64_t bits; /* raw encoding; binary32 uses the low 32 bits */
  decbin_class cls;
  int check_evaluated; /* the table path ran (only set by *_with_check) */
  int check_fired;     /* the historical fallback condition held */
} decbin_value;

DECBIN_API const char* decbin_version(void);
DECBIN_API const char* decbin_status_message(decbin_status status);
DECBIN_API const char* decbin_scan_reason_message(decbin_scan_reason reason);

/* Scans a prefix of text. Trailing bytes are allowed; check out->consumed. */
DECBIN_API decbin_status decbin_scan(const char* text, size_t len, decbin_decimal* out);

/* Scans and converts. With strict != 0, trailing bytes are a scan error at
 * their offset. consumed may be NULL. */
DECBIN_API decbin_status decbin_parse(const char* text, size_t len, decbin_target target,
                                      int strict, decbin_value* out, size_t* consumed);
DECBIN_API decbin_status decbin_parse_with_check(const char* text, size_t len,
                                                 decbin_target target, int strict,
                                                 decbin_value* out, size_t* consumed);
DECBIN_API decbin_status decbin_parse_exact(const char* text, size_t len, decbin_target target,
                                            int strict, decbin_value* out, size_t* consumed);

DECBIN_API decbin_status decbin_parse_double(const char* text, size_t len, double* out);
DECBIN_API decbin_status decbin_parse_float(const char* text, size_t len, float* out);

/* (-1)^negative * w * 10^q. */
DECBIN_API decbin_status decbin_convert_parts(int negative, uint64_t w, int64_t q,
                                              decbin_target target, decbin_value* out);

/* 17 significant digits, "d.dddddddddddddddde<exp>", NUL-terminated. A
 * 32-byte buffer is always enough. */
DECBIN_API decbin_status decbin_format17(uint64_t bits, decbin_target target, char* buf,
                                         size_t capacity, size_t* written);

/* Power-of-five table: embedded entry, or regenerated from scratch. */
DECBIN_API decbin_status decbin_pow5_entry(int q, uint64_t* high, uint64_t* low);
DECBIN_API decbin_status decbin_pow5_regenerate(int q, uint64_t* high, uint64_t* low);
DECBIN_API uint64_t decbin_pow5_checksum(void);

/* Batch parse of one number per line into binary64 bit patterns. *count is
 * the number of values written; on a bad line returns DECBIN_ERR_SCAN and
 * sets *error_line (1-based). */
DECBIN_API size_t decbin_count_lines(const char* data, size_t len);
DECBIN_API decbin_status decbin_parse_lines(decbin_variant variant, const char* data, size_t len,
                                            uint64_t* out, size_t capacity, size_t* count,
                                            size_t* error_line);

/* ---- no-fallback verification ------------------------------------------ */

typedef struct decbin_report decbin_report;

typedef struct decbin_power_summary {
  int q;
  unsigned modulus_bits;
  size_t convergents_examined;
  int has_witness;
  uint64_t max_denominator;
  uint64_t witness_denominator; /* 0 when clear */
} decbin_power_summary;

DECBIN_API decbin_status decbin_verify(decbin_target target, decbin_report** out);
DECBIN_API void decbin_report_free(decbin_report* report);
DECBIN_API int decbin_report_all_clear(const decbin_report* report);
DECBIN_API size_t decbin_report_size(const decbin_report* report);
DECBIN_API size_t decbin_report_clear_count(const decbin_report* report);
DECBIN_API unsigned decbin_report_modulus_bits(const decbin_report* report);
DECBIN_API decbin_status decbin_report_entry(const decbin_report* report, size_t index,
                                             decbin_power_summary* out);
DECBIN_API const char* decbin_report_text(decbin_report* report);
/* JSON document covering `count` reports, one section each. Writes at most
 * capacity bytes including the NUL; *needed receives the full size including
 * the NUL. Pass buf = NULL to query the size. */
DECBIN_API decbin_status decbin_reports_json(const decbin_report* const* reports, size_t count,
                                             char* buf, size_t capacity, size_t* needed);

/* ---- differential testing ---------------------------------------------- */

typedef struct decbin_difftest decbin_difftest;

typedef struct decbin_difftest_stats {
  uint64_t inputs;
  uint64_t comparisons;
  uint64_t mismatches;
  uint64_t check_evaluated;
  uint64_t check_fired;
  uint64_t scan_errors;
} decbin_difftest_stats;

DECBIN_API decbin_status decbin_difftest_create(uint64_t seed, decbin_difftest** out);
DECBIN_API void decbin_difftest_free(decbin_difftest* dt);
DECBIN_API decbin_status decbin_difftest_run_random(decbin_difftest* dt, uint64_t count);
DECBIN_API decbin_status decbin_difftest_run_corpus(decbin_difftest* dt);
DECBIN_API decbin_status decbin_difftest_check(decbin_difftest* dt, const char* text, size_t len);
DECBIN_API decbin_status decbin_difftest_get_stats(const decbin_difftest* dt,
                                                   decbin_difftest_stats* out);
/* NULL when nothing was recorded. */
DECBIN_API const char* decbin_difftest_first_mismatch(const decbin_difftest* dt);
DECBIN_API const char* decbin_difftest_first_firing(const decbin_difftest* dt);
DECBIN_API const char* decbin_difftest_first_scan_error(const decbin_difftest* dt);

#ifdef __cplusplus
}
#endif

#endif /* DECBIN_DECBIN_H_ */
