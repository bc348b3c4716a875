// Copyright 2026 The decbin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exercises the shared library strictly through its C header.

#include "decbin/decbin.h"

#include <gtest/gtest.h>

#include <cstring>
#include <string>
#include <vector>

namespace {

decbin_value parse64(const char* text) {
  decbin_value v{};
  EXPECT_EQ(decbin_parse(text, std::strlen(text), DECBIN_BINARY64, 1, &v, nullptr), DECBIN_OK);
  return v;
}

TEST(CApi, ParseValues) {
  EXPECT_EQ(parse64("1.5").bits, 0x3FF8000000000000u);
  EXPECT_EQ(parse64("1.5").cls, DECBIN_CLASS_NORMAL);
  EXPECT_EQ(parse64("1e309").cls, DECBIN_CLASS_INFINITY);
  EXPECT_EQ(parse64("5e-324").cls, DECBIN_CLASS_SUBNORMAL);
  EXPECT_EQ(parse64("-0").bits, 0x8000000000000000u);

  decbin_value v{};
  ASSERT_EQ(decbin_parse("16777217", 8, DECBIN_BINARY32, 1, &v, nullptr), DECBIN_OK);
  EXPECT_EQ(v.bits, 0x4B800000u);

  double d = 0;
  float f = 0;
  EXPECT_EQ(decbin_parse_double("0.1", 3, &d), DECBIN_OK);
  EXPECT_EQ(d, 0.1);
  EXPECT_EQ(decbin_parse_float("0.1", 3, &f), DECBIN_OK);
  EXPECT_EQ(f, 0.1f);
}

TEST(CApi, StrictnessAndErrors) {
  decbin_value v{};
  size_t consumed = 99;
  EXPECT_EQ(decbin_parse("1.5x", 4, DECBIN_BINARY64, 1, &v, &consumed), DECBIN_ERR_SCAN);
  EXPECT_EQ(consumed, 3u);
  EXPECT_EQ(decbin_parse("1.5x", 4, DECBIN_BINARY64, 0, &v, &consumed), DECBIN_OK);
  EXPECT_EQ(consumed, 3u);
  EXPECT_EQ(v.bits, 0x3FF8000000000000u);
  EXPECT_EQ(decbin_parse("abc", 3, DECBIN_BINARY64, 0, &v, &consumed), DECBIN_ERR_SCAN);
  EXPECT_EQ(consumed, 0u);

  EXPECT_EQ(decbin_parse("1", 1, DECBIN_BINARY64, 1, nullptr, nullptr), DECBIN_ERR_ARGUMENT);
  EXPECT_EQ(decbin_parse("1", 1, static_cast<decbin_target>(7), 1, &v, nullptr), DECBIN_ERR_ARGUMENT);
  EXPECT_EQ(decbin_parse(nullptr, 0, DECBIN_BINARY64, 1, &v, nullptr), DECBIN_ERR_SCAN);
  EXPECT_STREQ(decbin_status_message(DECBIN_ERR_BUFFER), "buffer too small");
  EXPECT_NE(std::string(decbin_version()), "");
}

TEST(CApi, Scan) {
  decbin_decimal d{};
  ASSERT_EQ(decbin_scan("-3.14E+12", 9, &d), DECBIN_OK);
  EXPECT_EQ(d.negative, 1);
  EXPECT_EQ(d.w, 314u);
  EXPECT_EQ(d.q, 10);
  EXPECT_EQ(d.truncated, 0);
  EXPECT_EQ(d.consumed, 9u);

  ASSERT_EQ(decbin_scan("0.000", 5, &d), DECBIN_OK);
  EXPECT_EQ(d.is_zero, 1);

  ASSERT_EQ(decbin_scan("1e+", 3, &d), DECBIN_ERR_SCAN);
  EXPECT_EQ(d.reason, DECBIN_SCAN_MALFORMED_EXPONENT);
  EXPECT_EQ(d.consumed, 3u);
  EXPECT_NE(std::string(decbin_scan_reason_message(d.reason)), "");
}

TEST(CApi, CheckedAndExactVariantsAgree) {
  const char* inputs[] = {"1e-300", "123456789e200", "2.2250738585072011e-308",
                          "12345678901234567890123e-40", "7e-46"};
  for (const char* s : inputs) {
    for (decbin_target t : {DECBIN_BINARY64, DECBIN_BINARY32}) {
      decbin_value a{}, b{}, c{};
      ASSERT_EQ(decbin_parse(s, std::strlen(s), t, 1, &a, nullptr), DECBIN_OK);
      ASSERT_EQ(decbin_parse_with_check(s, std::strlen(s), t, 1, &b, nullptr), DECBIN_OK);
      ASSERT_EQ(decbin_parse_exact(s, std::strlen(s), t, 1, &c, nullptr), DECBIN_OK);
      EXPECT_EQ(a.bits, b.bits) << s;
      EXPECT_EQ(a.bits, c.bits) << s;
      EXPECT_EQ(b.check_fired, 0) << s;
    }
  }
  decbin_value v{};
  ASSERT_EQ(decbin_parse_with_check("1e-300", 6, DECBIN_BINARY64, 1, &v, nullptr), DECBIN_OK);
  EXPECT_EQ(v.check_evaluated, 1);
}

TEST(CApi, ConvertParts) {
  decbin_value v{};
  ASSERT_EQ(decbin_convert_parts(1, 314, 10, DECBIN_BINARY64, &v), DECBIN_OK);
  EXPECT_EQ(v.bits, 0xC286D8B4AD400000u);
  ASSERT_EQ(decbin_convert_parts(0, 1, INT64_MIN, DECBIN_BINARY64, &v), DECBIN_OK);
  EXPECT_EQ(v.bits, 0u);
}

TEST(CApi, Format17Buffering) {
  char buf[32];
  size_t written = 0;
  ASSERT_EQ(decbin_format17(0x3FF0000000000000u, DECBIN_BINARY64, buf, sizeof buf, &written), DECBIN_OK);
  EXPECT_STREQ(buf, "1.0000000000000000e0");
  EXPECT_EQ(written, 20u);
  EXPECT_EQ(decbin_format17(0x3FF0000000000000u, DECBIN_BINARY64, buf, 5, &written), DECBIN_ERR_BUFFER);
  EXPECT_EQ(decbin_format17(0x7FF0000000000000u, DECBIN_BINARY64, buf, sizeof buf, &written),
            DECBIN_ERR_ARGUMENT);
  ASSERT_EQ(decbin_format17(1, DECBIN_BINARY64, buf, sizeof buf, &written), DECBIN_OK);
  decbin_value v{};
  ASSERT_EQ(decbin_parse(buf, written, DECBIN_BINARY64, 1, &v, nullptr), DECBIN_OK);
  EXPECT_EQ(v.bits, 1u);
}

TEST(CApi, Table) {
  uint64_t hi = 0, lo = 0, rhi = 0, rlo = 0;
  ASSERT_EQ(decbin_pow5_entry(0, &hi, &lo), DECBIN_OK);
  EXPECT_EQ(hi, 0x8000000000000000u);
  EXPECT_EQ(lo, 0u);
  ASSERT_EQ(decbin_pow5_entry(1, &hi, &lo), DECBIN_OK);
  EXPECT_EQ(hi, 0xA000000000000000u);
  EXPECT_EQ(decbin_pow5_entry(309, &hi, &lo), DECBIN_ERR_ARGUMENT);
  EXPECT_EQ(decbin_pow5_regenerate(-343, &hi, &lo), DECBIN_ERR_ARGUMENT);
  for (int q = DECBIN_POW5_MIN_Q; q <= DECBIN_POW5_MAX_Q; q += 37) {
    ASSERT_EQ(decbin_pow5_entry(q, &hi, &lo), DECBIN_OK);
    ASSERT_EQ(decbin_pow5_regenerate(q, &rhi, &rlo), DECBIN_OK);
    EXPECT_EQ(hi, rhi);
    EXPECT_EQ(lo, rlo);
  }
  EXPECT_EQ(decbin_pow5_checksum(), decbin_pow5_checksum());
}

TEST(CApi, Batch) {
  const std::string data = "1.5\n\n-2\r\n1e-400\n";
  ASSERT_EQ(decbin_count_lines(data.data(), data.size()), 3u);
  std::vector<uint64_t> out(3);
  size_t count = 0, bad = 0;
  ASSERT_EQ(decbin_parse_lines(DECBIN_VARIANT_WITH_CHECK, data.data(), data.size(), out.data(),
                               out.size(), &count, &bad),
            DECBIN_OK);
  EXPECT_EQ(count, 3u);
  EXPECT_EQ(out[1], 0xC000000000000000u);
  const std::string broken = "1\nzz\n";
  EXPECT_EQ(decbin_parse_lines(DECBIN_VARIANT_NO_CHECK, broken.data(), broken.size(), out.data(),
                               out.size(), &count, &bad),
            DECBIN_ERR_SCAN);
  EXPECT_EQ(bad, 2u);
}

TEST(CApi, VerifyReports) {
  decbin_report* r64 = nullptr;
  decbin_report* r32 = nullptr;
  ASSERT_EQ(decbin_verify(DECBIN_BINARY64, &r64), DECBIN_OK);
  ASSERT_EQ(decbin_verify(DECBIN_BINARY32, &r32), DECBIN_OK);
  EXPECT_EQ(decbin_report_all_clear(r64), 1);
  EXPECT_EQ(decbin_report_size(r64), 651u);
  EXPECT_EQ(decbin_report_clear_count(r32), 651u);
  EXPECT_EQ(decbin_report_modulus_bits(r64), 137u);
  EXPECT_EQ(decbin_report_modulus_bits(r32), 166u);

  decbin_power_summary s{};
  ASSERT_EQ(decbin_report_entry(r64, 342, &s), DECBIN_OK);
  EXPECT_EQ(s.q, 0);
  EXPECT_EQ(s.has_witness, 0);
  EXPECT_GT(s.convergents_examined, 0u);
  EXPECT_EQ(decbin_report_entry(r64, 651, &s), DECBIN_ERR_ARGUMENT);

  const std::string text = decbin_report_text(r64);
  EXPECT_EQ(text.rfind("binary64: 651/651 clear, k=137", 0), 0u);

  const decbin_report* both[] = {r64, r32};
  size_t needed = 0;
  ASSERT_EQ(decbin_reports_json(both, 2, nullptr, 0, &needed), DECBIN_OK);
  std::string json(needed, '\0');
  char tiny[8];
  EXPECT_EQ(decbin_reports_json(both, 2, tiny, sizeof tiny, &needed), DECBIN_ERR_BUFFER);
  ASSERT_EQ(decbin_reports_json(both, 2, json.data(), json.size(), &needed), DECBIN_OK);
  EXPECT_NE(json.find("\"schema\": \"decbin.verify/1\""), std::string::npos);
  EXPECT_NE(json.find("\"modulus_bits\": 166"), std::string::npos);

  decbin_report_free(r64);
  decbin_report_free(r32);
  decbin_report_free(nullptr);
}

TEST(CApi, Difftest) {
  decbin_difftest* dt = nullptr;
  ASSERT_EQ(decbin_difftest_create(42, &dt), DECBIN_OK);
  ASSERT_EQ(decbin_difftest_run_corpus(dt), DECBIN_OK);
  ASSERT_EQ(decbin_difftest_run_random(dt, 5000), DECBIN_OK);
  ASSERT_EQ(decbin_difftest_check(dt, "nope", 4), DECBIN_OK);
  decbin_difftest_stats s{};
  ASSERT_EQ(decbin_difftest_get_stats(dt, &s), DECBIN_OK);
  EXPECT_EQ(s.mismatches, 0u);
  EXPECT_EQ(s.check_fired, 0u);
  EXPECT_EQ(s.scan_errors, 1u);
  EXPECT_EQ(decbin_difftest_first_mismatch(dt), nullptr);
  EXPECT_EQ(decbin_difftest_first_firing(dt), nullptr);
  ASSERT_NE(decbin_difftest_first_scan_error(dt), nullptr);
  decbin_difftest_free(dt);
  EXPECT_EQ(decbin_difftest_run_random(nullptr, 1), DECBIN_ERR_ARGUMENT);
}

}  // namespace
