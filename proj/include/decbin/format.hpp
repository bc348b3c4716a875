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

#ifndef DECBIN_FORMAT_HPP_
#define DECBIN_FORMAT_HPP_

#include <cstdint>
#include <limits>

namespace decbin {

using uint128 = unsigned __int128;

enum class Target : std::uint8_t { binary64, binary32 };

// Split of the 128-bit truncated product into the bits kept for the binary
// significand (including one rounding bit and a possible leading zero) and the
// low margin whose all-ones pattern is the historical fallback trigger.
struct MarginConfig {
  int extract_bits;
  int margin_bits;

  friend constexpr bool operator==(MarginConfig, MarginConfig) = default;
};

inline constexpr MarginConfig kBinary64Margin{55, 73};
inline constexpr MarginConfig kBinary32Margin{26, 102};

static_assert(kBinary64Margin.extract_bits + kBinary64Margin.margin_bits == 128);
static_assert(kBinary32Margin.extract_bits + kBinary32Margin.margin_bits == 128);

constexpr MarginConfig margin_config(Target target) noexcept {
  return target == Target::binary64 ? kBinary64Margin : kBinary32Margin;
}

// Modulus used by the residue formulation of the fallback condition: the 64
// discarded low bits of the 192-bit product plus the margin.
constexpr unsigned modulus_bits(Target target) noexcept {
  return 64u + static_cast<unsigned>(margin_config(target).margin_bits);
}

constexpr const char* target_name(Target target) noexcept {
  return target == Target::binary64 ? "binary64" : "binary32";
}

struct Binary64 {
  using bits_type = std::uint64_t;
  using native_type = double;

  static constexpr Target kTarget = Target::binary64;
  static constexpr MarginConfig kMargin = kBinary64Margin;
  static constexpr int kExplicitBits = 52;
  static constexpr int kExponentBits = 11;
  static constexpr int kMinimumExponent = -1023;
  static constexpr int kInfinitePower = 0x7FF;
  // Exact midpoints between two doubles can only be written as w * 10^q with
  // w < 2^64 when q lies in this window.
  static constexpr int kMinRoundToEven = -4;
  static constexpr int kMaxRoundToEven = 23;
  static constexpr int kFastPathMaxPower = 22;
  static constexpr std::uint64_t kFastPathSignificandLimit = std::uint64_t{1} << 53;

  static_assert(std::numeric_limits<native_type>::is_iec559 &&
                std::numeric_limits<native_type>::digits == kExplicitBits + 1);
};

struct Binary32 {
  using bits_type = std::uint32_t;
  using native_type = float;

  static constexpr Target kTarget = Target::binary32;
  static constexpr MarginConfig kMargin = kBinary32Margin;
  static constexpr int kExplicitBits = 23;
  static constexpr int kExponentBits = 8;
  static constexpr int kMinimumExponent = -127;
  static constexpr int kInfinitePower = 0xFF;
  static constexpr int kMinRoundToEven = -17;
  static constexpr int kMaxRoundToEven = 10;
  static constexpr int kFastPathMaxPower = 10;
  static constexpr std::uint64_t kFastPathSignificandLimit = std::uint64_t{1} << 24;

  static_assert(std::numeric_limits<native_type>::is_iec559 &&
                std::numeric_limits<native_type>::digits == kExplicitBits + 1);
};


}  // namespace decbin

#endif  // DECBIN_FORMAT_HPP_
