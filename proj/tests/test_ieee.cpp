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

#include "decbin/ieee.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <limits>
#include <random>

namespace decbin {
namespace {

TEST(Ieee, Classes) {
  EXPECT_EQ(decode(0, Target::binary64).cls, FloatClass::zero);
  EXPECT_EQ(decode(1, Target::binary64).cls, FloatClass::subnormal);
  EXPECT_EQ(decode(0x0010000000000000u, Target::binary64).cls, FloatClass::normal);
  EXPECT_EQ(decode(0x7FF0000000000000u, Target::binary64).cls, FloatClass::infinity);
  EXPECT_EQ(decode(0x7FF8000000000000u, Target::binary64).cls, FloatClass::nan);
  EXPECT_EQ(decode(0x80000000u, Target::binary32).cls, FloatClass::zero);
  EXPECT_TRUE(decode(0x80000000u, Target::binary32).negative);
  EXPECT_EQ(decode(0x7F800000u, Target::binary32).cls, FloatClass::infinity);
  EXPECT_EQ(decode(0x007FFFFFu, Target::binary32).cls, FloatClass::subnormal);
}

TEST(Ieee, FieldsOfOnePointFive) {
  const IeeeComponents c = from_double(1.5);
  EXPECT_FALSE(c.negative);
  EXPECT_EQ(c.cls, FloatClass::normal);
  EXPECT_EQ(c.biased_exponent, 1023u);
  EXPECT_EQ(c.significand, std::uint64_t{1} << 51);
  EXPECT_EQ(hex_encoding(c, Target::binary64), "0x3FF8000000000000");
  EXPECT_EQ(hex_encoding(from_float(1.5f), Target::binary32), "0x3FC00000");
}

TEST(Ieee, SpecialConstructors) {
  EXPECT_EQ(encode(signed_zero(true), Target::binary64), 0x8000000000000000u);
  EXPECT_EQ(encode(signed_infinity(true, Target::binary32), Target::binary32), 0xFF800000u);
  EXPECT_EQ(make_components(false, 0, 0, Target::binary64).cls, FloatClass::zero);
  EXPECT_EQ(make_components(false, 0, 3, Target::binary64).cls, FloatClass::subnormal);
  EXPECT_EQ(make_components(false, 0xFF, 0, Target::binary32).cls, FloatClass::infinity);
}

TEST(Ieee, RoundTripsEveryEncoding) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200000; ++i) {
    const std::uint64_t b64 = rng();
    ASSERT_EQ(encode(decode(b64, Target::binary64), Target::binary64), b64);
    const std::uint64_t b32 = b64 >> 32;
    ASSERT_EQ(encode(decode(b32, Target::binary32), Target::binary32), b32);
    const double d = std::bit_cast<double>(b64);
    if (d == d) {
      ASSERT_EQ(std::bit_cast<std::uint64_t>(to_double(from_double(d))), b64);
    }
  }
}

}  // namespace
}  // namespace decbin
