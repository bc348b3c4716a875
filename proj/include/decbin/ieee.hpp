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

#ifndef DECBIN_IEEE_HPP_
#define DECBIN_IEEE_HPP_

#include <cstdint>
#include <string>

#include "decbin/format.hpp"

namespace decbin {

enum class FloatClass : std::uint8_t { zero, subnormal, normal, infinity, nan };

// Field-level view of a binary64 or binary32 encoding. The significand holds
// the stored bits only (no implicit leading one).
struct IeeeComponents {
  bool negative = false;
  FloatClass cls = FloatClass::zero;
  std::uint32_t biased_exponent = 0;
  std::uint64_t significand = 0;

  friend bool operator==(const IeeeComponents&, const IeeeComponents&) = default;
};

/// Builds components from raw fields, deriving the class.
IeeeComponents make_components(bool negative, std::uint32_t biased_exponent,
                               std::uint64_t significand, Target target) noexcept;

IeeeComponents signed_zero(bool negative) noexcept;
IeeeComponents signed_infinity(bool negative, Target target) noexcept;

/// Raw encoding; binary32 values occupy the low 32 bits.
std::uint64_t encode(const IeeeComponents& value, Target target) noexcept;
IeeeComponents decode(std::uint64_t bits, Target target) noexcept;

double to_double(const IeeeComponents& value) noexcept;
float to_float(const IeeeComponents& value) noexcept;
IeeeComponents from_double(double value) noexcept;
IeeeComponents from_float(float value) noexcept;

/// "0x3FF8000000000000" for binary64, "0x3FC00000" for binary32.
std::string hex_encoding(const IeeeComponents& value, Target target);

}  // namespace decbin

#endif  // DECBIN_IEEE_HPP_
