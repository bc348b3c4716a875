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

#include "decbin/scanner.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "test_support.hpp"

namespace decbin {
namespace {

DecimalNumber number(const char* text) {
  const ScanResult r = scan(text);
  EXPECT_EQ(r.kind, ScanKind::number) << text;
  EXPECT_EQ(r.consumed, std::string_view(text).size()) << text;
  return r.number;
}

TEST(Scanner, SignedDecomposition) {
  const DecimalNumber n = number("-3.14E+12");
  EXPECT_TRUE(n.negative);
  EXPECT_EQ(n.w, 314u);
  EXPECT_EQ(n.q, 10);
  EXPECT_FALSE(n.truncated);
}

TEST(Scanner, DecimalPointCountsTowardExponent) {
  const DecimalNumber n = number("3.1416");
  EXPECT_FALSE(n.negative);
  EXPECT_EQ(n.w, 31416u);
  EXPECT_EQ(n.q, -4);
}

TEST(Scanner, AllZeroDigitsAreZeroToken) {
  for (const char* text : {"0", "0.000", "-0", "000e99", "0.0e-9999999999"}) {
    const ScanResult r = scan(text);
    EXPECT_EQ(r.kind, ScanKind::zero) << text;
    EXPECT_EQ(r.consumed, std::string_view(text).size()) << text;
  }
  EXPECT_TRUE(scan("-0.0").number.negative);
}

TEST(Scanner, TwentyDigitsTruncate) {
  const DecimalNumber n = number("12345678901234567890");
  EXPECT_EQ(n.w, 1234567890123456789u);
  EXPECT_EQ(n.q, 1);
  EXPECT_TRUE(n.truncated);
}

TEST(Scanner, TruncationKeepsAtLeastNineteenDigits) {
  const DecimalNumber n = number("0.000123456789012345678901234e5");
  EXPECT_TRUE(n.truncated);
  EXPECT_GE(n.w, 1000000000000000000u);
  EXPECT_EQ(n.w, 1234567890123456789u);
  EXPECT_EQ(n.q, -18 - 4 + 5);
}

TEST(Scanner, NineteenDigitsDoNotTruncate) {
  const DecimalNumber n = number("9999999999999999999");
  EXPECT_FALSE(n.truncated);
  EXPECT_EQ(n.w, 9999999999999999999u);
  EXPECT_EQ(n.q, 0);
}

TEST(Scanner, LeadingZerosAreIgnored) {
  EXPECT_EQ(number("0001.5"), number("1.5"));
  EXPECT_EQ(number("000.00015e4"), number("1.5"));
}

TEST(Scanner, TrailingBytesAreReportedNotConsumed) {
  const ScanResult r = scan("1.5x");
  EXPECT_EQ(r.kind, ScanKind::number);
  EXPECT_EQ(r.consumed, 3u);
  EXPECT_EQ(scan("1.").consumed, 2u);
  // An 'e' without digits is a malformed exponent, not a trailing byte.
  EXPECT_EQ(scan("1e").kind, ScanKind::error);
}

TEST(Scanner, Errors) {
  struct Case {
    const char* text;
    ScanError error;
    std::size_t offset;
  };
  const Case cases[] = {
      {"", ScanError::empty, 0},
      {"-", ScanError::no_digits, 1},
      {"+", ScanError::no_digits, 1},
      {"abc", ScanError::no_digits, 0},
      {".5", ScanError::no_digits, 0},
      {"1e", ScanError::malformed_exponent, 2},
      {"1e+", ScanError::malformed_exponent, 3},
      {"2.5E-x", ScanError::malformed_exponent, 5},
      {"\xC3\xA9", ScanError::non_ascii, 0},
      {"12\xFF", ScanError::non_ascii, 2},
  };
  for (const Case& c : cases) {
    const ScanResult r = scan(c.text);
    EXPECT_EQ(r.kind, ScanKind::error) << c.text;
    EXPECT_EQ(r.error, c.error) << c.text;
    EXPECT_EQ(r.consumed, c.offset) << c.text;
    EXPECT_NE(std::string(scan_error_message(r.error)), "");
  }
}

TEST(Scanner, ExponentSaturates) {
  EXPECT_EQ(number("1e99999999999999999999").q, kExponentSaturation);
  EXPECT_EQ(number("1e-99999999999999999999").q, -kExponentSaturation);
  EXPECT_EQ(number("1e2147483647").q, kExponentSaturation);
}

// w * 10^q must equal the written digits exactly.
TEST(Scanner, ReconstructionMatchesWrittenValue) {
  using testing::Big;
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20000; ++i) {
    const int n = 1 + static_cast<int>(rng() % 19);
    std::string digits(1, static_cast<char>('1' + rng() % 9));
    for (int k = 1; k < n; ++k) digits += static_cast<char>('0' + rng() % 10);
    const int point = static_cast<int>(rng() % (n + 1));
    const int exp = static_cast<int>(rng() % 81) - 40;
    std::string text = digits.substr(0, point);
    if (text.empty()) text = "0";
    text += "." + digits.substr(point) + "e" + std::to_string(exp);

    const DecimalNumber num = number(text.c_str());
    ASSERT_FALSE(num.truncated);
    // Written value = digits * 10^(exp - (n - point)).
    const long written_exp = exp - (n - point);
    Big lhs = Big(num.w);
    Big rhs = Big(digits);
    const long shift = num.q - written_exp;
    if (shift >= 0) {
      lhs *= testing::big_pow(10, static_cast<unsigned>(shift));
    } else {
      rhs *= testing::big_pow(10, static_cast<unsigned>(-shift));
    }
    ASSERT_EQ(lhs, rhs) << text;
  }
}

TEST(Scanner, TotalOverArbitraryBytes) {
  std::mt19937_64 rng(11);
  const char alphabet[] = "0123456789+-.eE x\x80";
  for (int i = 0; i < 200000; ++i) {
    std::string s;
    const int len = static_cast<int>(rng() % 12);
    for (int k = 0; k < len; ++k) s += alphabet[rng() % (sizeof alphabet - 1)];
    const ScanResult r = scan(s);
    ASSERT_LE(r.consumed, s.size());
    if (r.kind == ScanKind::error) {
      ASSERT_NE(r.error, ScanError::none);
    } else {
      ASSERT_EQ(r.error, ScanError::none);
      ASSERT_GT(r.consumed, 0u);
      if (r.kind == ScanKind::number) ASSERT_GT(r.number.w, 0u);
    }
  }
}

}  // namespace
}  // namespace decbin
