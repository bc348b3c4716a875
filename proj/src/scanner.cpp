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

namespace decbin {
namespace {

constexpr bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }

ScanResult fail(std::size_t offset, ScanError error) noexcept {
  ScanResult r;
  r.kind = ScanKind::error;
  r.consumed = offset;
  r.error = error;
  return r;
}

ScanError stop_error(std::string_view text, std::size_t pos, ScanError otherwise) noexcept {
  if (pos < text.size() && static_cast<unsigned char>(text[pos]) >= 0x80) return ScanError::non_ascii;
  return otherwise;
}

}  // namespace

const char* scan_error_message(ScanError error) noexcept {
  switch (error) {
    case ScanError::none: return "ok";
    case ScanError::empty: return "empty input";
    case ScanError::no_digits: return "expected a digit";
    case ScanError::malformed_exponent: return "malformed exponent";
    case ScanError::non_ascii: return "non-ASCII byte";
  }
  return "unknown error";
}

ScanResult scan(std::string_view text) noexcept {
  if (text.empty()) return fail(0, ScanError::empty);

  std::size_t pos = 0;
  DecimalNumber num;
  if (text[pos] == '+' || text[pos] == '-') {
    num.negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size() || !is_digit(text[pos])) {
    return fail(pos, stop_error(text, pos, ScanError::no_digits));
  }

  const std::size_t significand_begin = pos;
  int significant = 0;
  std::int64_t adjust = 0;
  std::int64_t fraction_digits = 0;

  while (pos < text.size() && is_digit(text[pos])) {
    const int d = text[pos] - '0';
    if (significant > 0 || d != 0) {
      if (significant < kMaxSignificandDigits) {
        num.w = num.w * 10 + static_cast<std::uint64_t>(d);
      } else {
        num.truncated = true;
        ++adjust;
      }
      ++significant;
    }
    ++pos;
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && is_digit(text[pos])) {
      const int d = text[pos] - '0';
      ++fraction_digits;
      if (significant > 0 || d != 0) {
        if (significant < kMaxSignificandDigits) {
          num.w = num.w * 10 + static_cast<std::uint64_t>(d);
          --adjust;
        } else {
          num.truncated = true;
        }
        ++significant;
      } else {
        --adjust;
      }
      ++pos;
    }
  }
  num.significand_text = text.substr(significand_begin, pos - significand_begin);

  std::int64_t exponent = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    bool negative_exponent = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      negative_exponent = text[pos] == '-';
      ++pos;
    }
    if (pos == text.size() || !is_digit(text[pos])) {
      return fail(pos, stop_error(text, pos, ScanError::malformed_exponent));
    }
    while (pos < text.size() && is_digit(text[pos])) {
      if (exponent < kExponentSaturation) {
        exponent = exponent * 10 + (text[pos] - '0');
        if (exponent > kExponentSaturation) exponent = kExponentSaturation;
      }
      ++pos;
    }
    if (negative_exponent) exponent = -exponent;
  }
  if (pos < text.size() && static_cast<unsigned char>(text[pos]) >= 0x80) {
    return fail(pos, ScanError::non_ascii);
  }

  ScanResult r;
  r.consumed = pos;
  r.error = ScanError::none;
  if (significant == 0) {
    r.kind = ScanKind::zero;
    r.number.negative = num.negative;
    r.number.significand_text = num.significand_text;
    return r;
  }
  num.q = adjust + exponent;
  num.text_exponent = exponent - fraction_digits;
  r.kind = ScanKind::number;
  r.number = num;
  return r;
}

}  // namespace decbin
