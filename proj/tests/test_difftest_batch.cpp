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

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>
#include <vector>

#include "decbin/batch.hpp"
#include "decbin/difftest.hpp"
#include "decbin/scanner.hpp"

namespace decbin {
namespace {

TEST(Generator, DeterministicPerSeed) {
  NumberStringGenerator a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 1000; ++i) {
    const std::string x = a.next();
    ASSERT_EQ(x, b.next());
    differs = differs || x != c.next();
  }
  EXPECT_TRUE(differs);
}

TEST(Generator, ProducesScannableStratifiedStrings) {
  NumberStringGenerator g(1);
  std::size_t longest = 0, shortest = 100, truncated = 0;
  std::int64_t min_q = 0, max_q = 0;
  for (int i = 0; i < 100000; ++i) {
    const std::string s = g.next();
    const ScanResult r = scan(s);
    ASSERT_NE(r.kind, ScanKind::error) << s;
    ASSERT_EQ(r.consumed, s.size()) << s;
    std::size_t digits = static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; }));
    const auto e = s.find_first_of("eE");
    if (e != std::string::npos) {
      digits -= static_cast<std::size_t>(std::count_if(
          s.begin() + static_cast<long>(e), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; }));
    }
    longest = std::max(longest, digits);
    shortest = std::min(shortest, digits);
    truncated += r.number.truncated;
    min_q = std::min(min_q, r.number.q);
    max_q = std::max(max_q, r.number.q);
  }
  EXPECT_EQ(shortest, 1u);
  EXPECT_GE(longest, 25u);
  EXPECT_GT(truncated, 1000u);
  EXPECT_LE(min_q, -360);
  EXPECT_GT(max_q, 290);
}

TEST(Corpus, ContainsRequiredCases) {
  const std::vector<std::string> c = builtin_corpus();
  for (const char* needle : {"1e-343", "9007199254740993", "1e309", "5e-324", "16777217"}) {
    EXPECT_NE(std::find(c.begin(), c.end(), needle), c.end()) << needle;
  }
  EXPECT_GT(c.size(), 1000u);
}

TEST(DiffTester, CorpusAndSampleAreClean) {
  DiffTester t(42);
  t.run_builtin_corpus();
  t.run_random(20000);
  const DifftestStats& s = t.stats();
  EXPECT_EQ(s.mismatches, 0u) << t.first_mismatch().value_or("");
  EXPECT_EQ(s.check_fired, 0u) << t.first_firing().value_or("");
  EXPECT_EQ(s.scan_errors, 0u) << t.first_scan_error().value_or("");
  EXPECT_EQ(s.comparisons, 2 * s.inputs);
  EXPECT_GT(s.check_evaluated, 0u);
}

TEST(DiffTester, RecordsScanErrors) {
  DiffTester t(0);
  t.check("abc");
  t.check("1.5");
  EXPECT_EQ(t.stats().scan_errors, 1u);
  EXPECT_EQ(t.stats().inputs, 2u);
  ASSERT_TRUE(t.first_scan_error().has_value());
  EXPECT_NE(t.first_scan_error()->find("offset 0"), std::string::npos);
}

TEST(Batch, VariantsAgree) {
  std::string data;
  NumberStringGenerator g(3);
  for (int i = 0; i < 5000; ++i) data += g.next() + (i % 7 == 0 ? "\r\n" : "\n");
  data += "\n\n1.5";
  const std::size_t n = count_lines(data);
  EXPECT_EQ(n, 5001u);
  std::vector<std::uint64_t> a(n), b(n), c(n);
  const BatchResult ra = parse_lines(Variant::no_check, data, a);
  const BatchResult rb = parse_lines(Variant::with_check, data, b);
  const BatchResult rc = parse_lines(Variant::oracle, data, c);
  EXPECT_EQ(ra.count, n);
  EXPECT_FALSE(ra.error_line.has_value());
  EXPECT_EQ(rb.count, n);
  EXPECT_EQ(rc.count, n);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  EXPECT_EQ(a.back(), 0x3FF8000000000000u);
}

TEST(Batch, ReportsFirstBadLine) {
  std::vector<std::uint64_t> out(4);
  const BatchResult r = parse_lines(Variant::no_check, "1\n2\n\n3x\n4\n", out);
  ASSERT_TRUE(r.error_line.has_value());
  EXPECT_EQ(*r.error_line, 4u);
  EXPECT_EQ(r.count, 2u);
  EXPECT_STREQ(variant_name(Variant::with_check), "with_check");
}

TEST(Batch, StopsAtCapacity) {
  std::vector<std::uint64_t> out(2);
  const BatchResult r = parse_lines(Variant::no_check, "1\n2\n3\n", out);
  EXPECT_EQ(r.count, 2u);
  EXPECT_FALSE(r.error_line.has_value());
}

}  // namespace
}  // namespace decbin
