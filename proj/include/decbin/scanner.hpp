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

#ifndef DECBIN_SCANNER_HPP_
#define DECBIN_SCANNER_HPP_

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace decbin {

// Number of decimal digits that always fit in an unsigned 64-bit word.
inline constexpr int kMaxSignificandDigits = 19;

// Explicit exponents are saturated to this magnitude while scanning.
inline constexpr std::int64_t kExponentSaturation = 2147483647;

// A number string decomposed as (-1)^negative * w * 10^q.
//
// When `truncated` is set, w holds only the leading 19 significant digits and
// the exact value must be recovered from `significand_text`, whose digits
// (with the decimal point removed) scaled by 10^text_exponent give the input.
struct DecimalNumber {
  bool negative = false;
  std::uint64_t w = 0;
  std::int64_t q = 0;
  bool truncated = false;
  std::string_view significand_text;
  std::int64_t text_exponent = 0;

  // Compares the numeric decomposition only; the text view is provenance.
  friend bool operator==(const DecimalNumber& a, const DecimalNumber& b) noexcept {
    return a.negative == b.negative && a.w == b.w && a.q == b.q && a.truncated == b.truncated;
  }
};

enum class ScanKind : std::uint8_t { number, zero, error };

enum class ScanError : std::uint8_t {
  none,
  empty,               // no input at all
  no_digits,           // lone sign or a non-digit where the significand must start
  malformed_exponent,  // 'e' not followed by digits
  non_ascii,           // byte >= 0x80 where scanning stopped
};

const char* scan_error_message(ScanError error) noexcept;

// Result of scanning a prefix of the input.
//
// For `number` and `zero`, `consumed` is the length of the recognized prefix;
// callers decide whether trailing bytes are acceptable. For `zero`, only
// `number.negative` is meaningful and `number.w` is 0. For `error`, `consumed`
// is the byte offset of the first offending character.
struct ScanResult {
  ScanKind kind = ScanKind::error;
  DecimalNumber number;
  std::size_t consumed = 0;
  ScanError error = ScanError::none;
};

// Grammar: [+-]? digit+ ('.' digit*)? ([eE] [+-]? digit+)?
ScanResult scan(std::string_view text) noexcept;

}  // namespace decbin

#endif  // DECBIN_SCANNER_HPP_
