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

#ifndef DECBIN_BINARY_CONVERSION_HPP_
#define DECBIN_BINARY_CONVERSION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "decbin/format.hpp"
#include "decbin/ieee.hpp"
#include "decbin/pow5_table.hpp"
#include "decbin/scanner.hpp"

namespace decbin {

// Below this decimal exponent every 64-bit significand rounds to zero; above
// kMaxDecimalExponent every nonzero significand overflows.
inline constexpr std::int64_t kMinDecimalExponent = kPow5MinQ;
inline constexpr std::int64_t kMaxDecimalExponent = kPow5MaxQ;

// The all-ones margin check is skipped for these exponents, where the table
// product is exact enough that it cannot misfire.
inline constexpr std::int64_t kCheckExemptMinQ = -27;
inline constexpr std::int64_t kCheckExemptMaxQ = 55;

struct NormalizedSignificand {
  std::uint64_t scaled_w = 0;  // top bit set
  int shift = 0;               // leading zeros removed from w
};

struct Product128 {
  uint128 z = 0;
  int top_bit = 0;
};

/// Requires w != 0.
NormalizedSignificand normalize(std::uint64_t w) noexcept;

/// Most significant 128 bits of the 192-bit product entry.value * scaled_w.
Product128 truncated_product(std::uint64_t scaled_w, const PowerEntry& entry) noexcept;

/// floor(z / 2^(128 - extract_bits)).
std::uint64_t extract_significand(const Product128& product, MarginConfig cfg) noexcept;

/// floor(q * log2(10)) for q in [-350, 350], integer arithmetic only.
constexpr int floor_log2_pow10(int q) noexcept { return (217706 * q) >> 16; }

/// Exact single-operation conversion when both w and 10^|q| are exactly
/// representable in the target; std::nullopt otherwise (or when truncated).
std::optional<IeeeComponents> clinger_fast_path(const DecimalNumber& num, Target target) noexcept;

/// Correctly rounded (nearest, ties to even) value of num. A zero w yields a
/// signed zero. Truncated inputs are resolved exactly from their text.
IeeeComponents convert(const DecimalNumber& num, Target target);

/// convert(), with the historical fallback check evaluated on the table path.
struct CheckedConversion {
  IeeeComponents result;
  bool check_fired = false;
  bool check_evaluated = false;
};
CheckedConversion convert_with_check(const DecimalNumber& num, Target target);

/// convert_from_parts: (-1)^negative * w * 10^q.
IeeeComponents convert_parts(bool negative, std::uint64_t w, std::int64_t q, Target target);

struct ParseResult {
  IeeeComponents value;
  ScanKind kind = ScanKind::error;
  std::size_t consumed = 0;  // error offset when kind == error
  ScanError error = ScanError::none;
};

/// Scans a prefix of text and converts it.
ParseResult parse(std::string_view text, Target target);

}  // namespace decbin

#endif  // DECBIN_BINARY_CONVERSION_HPP_
