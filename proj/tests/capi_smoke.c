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

/* Compiled as C to prove the header is usable without a C++ compiler. */

#include <stdio.h>
#include <string.h>

#include "decbin/decbin.h"

static int failures = 0;

static void expect(int ok, const char* what) {
  if (!ok) {
    fprintf(stderr, "FAIL: %s\n", what);
    ++failures;
  }
}

int main(void) {
  decbin_value v;
  decbin_decimal d;
  decbin_report* report = NULL;
  char buf[32];
  size_t written = 0;

  expect(decbin_parse("1.5", 3, DECBIN_BINARY64, 1, &v, NULL) == DECBIN_OK, "parse status");
  expect(v.bits == 0x3FF8000000000000ULL, "parse bits");
  expect(decbin_scan("-3.14E+12", 9, &d) == DECBIN_OK && d.w == 314 && d.q == 10 && d.negative,
         "scan decomposition");
  expect(decbin_parse("abc", 3, DECBIN_BINARY64, 1, &v, &written) == DECBIN_ERR_SCAN && written == 0,
         "scan error offset");
  expect(decbin_format17(0x3FB999999999999AULL, DECBIN_BINARY64, buf, sizeof buf, &written) == DECBIN_OK,
         "format17 status");
  expect(strcmp(buf, "1.0000000000000001e-1") == 0, "format17 text");
  expect(decbin_verify(DECBIN_BINARY64, &report) == DECBIN_OK, "verify status");
  expect(decbin_report_all_clear(report) == 1, "verify clear");
  decbin_report_free(report);

  if (failures == 0) printf("capi smoke: ok\n");
  return failures == 0 ? 0 : 1;
}
