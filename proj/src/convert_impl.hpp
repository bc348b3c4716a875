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

// Inline conversion kernels shared by the public conversion functions and the
// batch parser. Not installed.

#ifndef DECBIN_SRC_CONVERT_IMPL_HPP_
#define DECBIN_SRC_CONVERT_IMPL_HPP_

#include <bit>
#include <cstdint>
#include <optional>

#include "decbin/binary_conversion.hpp"
#include "decbin/format.hpp"
#include "decbin/ieee.hpp"
#include "decbin/pow5_table.hpp"
#include "decbin/reference_oracle.hpp"
#include "decbin/scanner.hpp"

namespace decbin::detail {

inline constexpr double kExactPow10Double[] = {
    1e0,  1e1,  1e2,  1e3,  1e4,  1e5,  1e6,  1e7,  1e8,  1e9,  1e10, 1e11,
    1e12, 1e13, 1e14, 1e15, 1e16, 1e17, 1e18, 1e19, 1e20, 1e21, 1e22};
inline constexpr float kExactPow10Float[] = {1e0f, 1e1f, 1e2f, 1e3f, 1e4f, 1e5f,
                                             1e6f, 1e7f, 1e8f, 1e9f, 1e10f};

template <class Format>
constexpr IeeeComponents finite(bool negative, int biased_exponent, std::uint64_t mantissa) noexcept {
  constexpr std::uint64_t kMask = (std::uint64_t{1} << Format::kExplicitBits) - 1;
  IeeeComponents c;
  c.negative = negative;
  c.biased_exponent = static_cast<std::uint32_t>(biased_exponent);
  c.significand = mantissa & kMask;
  if (biased_exponent != 0) {
    c.cls = FloatClass::normal;
  } else {
    c.cls = c.significand == 0 ? FloatClass::zero : FloatClass::subnormal;
  }
  return c;
}

template <class Format>
constexpr IeeeComponents infinite(bool negative) noexcept {
  return IeeeComponents{negative, FloatClass::infinity,
                        static_cast<std::uint32_t>(Format::kInfinitePower), 0};
}

inline Product128 multiply(std::uint64_t scaled_w, uint128 t) noexcept {
  const uint128 lo = static_cast<uint128>(static_cast<std::uint64_t>(t)) * scaled_w;
  const uint128 hi = static_cast<uint128>(static_cast<std::uint64_t>(t >> 64)) * scaled_w;
  const uint128 z = hi + (lo >> 64);
  return Product128{z, static_cast<int>(z >> 127)};
}

template <class Format>
std::optional<IeeeComponents> fast_path(bool negative, std::uint64_t w, std::int64_t q) noexcept {
  if (w >= Format::kFastPathSignificandLimit || q < -Format::kFastPathMaxPower ||
      q > Format::kFastPathMaxPower) {
    return std::nullopt;
  }
  using Native = typename Format::native_type;
  Native value = static_cast<Native>(w);
  const auto index = static_cast<std::size_t>(q < 0 ? -q : q);
  Native power;
  if constexpr (Format::kTarget == Target::binary64) {
    power = kExactPow10Double[index];
  } else {
    power = kExactPow10Float[index];
  }
  value = q < 0 ? value / power : value * power;
  if (negative) value = -value;
  if constexpr (Format::kTarget == Target::binary64) {
    return from_double(value);
  } else {
    return from_float(value);
  }
}

// The table algorithm without fallback: normalize, multiply by T[q], keep the
// top extract_bits of the truncated product, then derive the exponent and
// round to nearest, ties to even. Requires q within the table and w != 0.
template <class Format, bool kCheck>
IeeeComponents table_path(bool negative, std::uint64_t w, int q, bool* fired) noexcept {
  const int lz = std::countl_zero(w);
  const Product128 product = multiply(w << lz, embedded_pow5(q));

  if constexpr (kCheck) {
    constexpr uint128 kMarginMask = (uint128{1} << Format::kMargin.margin_bits) - 1;
    *fired = (product.z & kMarginMask) == kMarginMask &&
             (q < kCheckExemptMinQ || q > kCheckExemptMaxQ);
  }

  const auto upper = static_cast<std::uint64_t>(product.z >> 64);
  const auto lower = static_cast<std::uint64_t>(product.z);
  const int upperbit = product.top_bit;
  // `mantissa` keeps explicit bits + hidden bit + one rounding bit.
  const int shift = upperbit + 64 - Format::kExplicitBits - 3;
  std::uint64_t mantissa = upper >> shift;
  int power2 = floor_log2_pow10(q) + 63 + upperbit - lz - Format::kMinimumExponent;

  if (power2 <= 0) {
    // No exact midpoint can land in the subnormal range.
    if (-power2 + 1 >= 64) return finite<Format>(negative, 0, 0);
    mantissa >>= -power2 + 1;
    mantissa += mantissa & 1;
    mantissa >>= 1;
    power2 = mantissa < (std::uint64_t{1} << Format::kExplicitBits) ? 0 : 1;
    return finite<Format>(negative, power2, mantissa);
  }

  if (lower <= 1 && q >= Format::kMinRoundToEven && q <= Format::kMaxRoundToEven &&
      (mantissa & 3) == 1 && (mantissa << shift) == upper) {
    mantissa &= ~std::uint64_t{1};
  }
  mantissa += mantissa & 1;
  mantissa >>= 1;
  if (mantissa >= (std::uint64_t{2} << Format::kExplicitBits)) {
    mantissa = std::uint64_t{1} << Format::kExplicitBits;
    ++power2;
  }
  if (power2 >= Format::kInfinitePower) return infinite<Format>(negative);
  return finite<Format>(negative, power2, mantissa);
}

struct ConvertTrace {
  bool check_evaluated = false;
  bool check_fired = false;
};

template <class Format, bool kCheck>
IeeeComponents convert_number(const DecimalNumber& num, ConvertTrace* trace) {
  if (num.w == 0) return finite<Format>(num.negative, 0, 0);
  if (num.q < kMinDecimalExponent) return finite<Format>(num.negative, 0, 0);
  if (num.q > kMaxDecimalExponent) return infinite<Format>(num.negative);
  if (num.truncated) return exact_convert(num, Format::kTarget);
  if (auto fast = fast_path<Format>(num.negative, num.w, num.q)) return *fast;
  if constexpr (kCheck) {
    trace->check_evaluated = true;
    return table_path<Format, true>(num.negative, num.w, static_cast<int>(num.q),
                                    &trace->check_fired);
  } else {
    return table_path<Format, false>(num.negative, num.w, static_cast<int>(num.q), nullptr);
  }
}

}  // namespace decbin::detail

#endif  // DECBIN_SRC_CONVERT_IMPL_HPP_
