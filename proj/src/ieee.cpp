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

#include <bit>
#include <cstdio>

namespace decbin {
namespace {

struct Layout {
  int explicit_bits;
  std::uint32_t max_exponent;
};

constexpr Layout layout(Target target) noexcept {
  return target == Target::binary64 ? Layout{Binary64::kExplicitBits, Binary64::kInfinitePower}
                                    : Layout{Binary32::kExplicitBits, Binary32::kInfinitePower};
}

}  // namespace

IeeeComponents make_components(bool negative, std::uint32_t biased_exponent,
                               std::uint64_t significand, Target target) noexcept {
  const Layout l = layout(target);
  IeeeComponents c;
  c.negative = negative;
  c.biased_exponent = biased_exponent;
  c.significand = significand;
  if (biased_exponent == 0) {
    c.cls = significand == 0 ? FloatClass::zero : FloatClass::subnormal;
  } else if (biased_exponent == l.max_exponent) {
    c.cls = significand == 0 ? FloatClass::infinity : FloatClass::nan;
  } else {
    c.cls = FloatClass::normal;
  }
  return c;
}

IeeeComponents signed_zero(bool negative) noexcept {
  return IeeeComponents{negative, FloatClass::zero, 0, 0};
}

IeeeComponents signed_infinity(bool negative, Target target) noexcept {
  return IeeeComponents{negative, FloatClass::infinity, layout(target).max_exponent, 0};
}

std::uint64_t encode(const IeeeComponents& value, Target target) noexcept {
  const Layout l = layout(target);
  const int sign_shift = target == Target::binary64 ? 63 : 31;
  const std::uint64_t mask = (std::uint64_t{1} << l.explicit_bits) - 1;
  return (std::uint64_t{value.negative} << sign_shift) |
         (std::uint64_t{value.biased_exponent} << l.explicit_bits) | (value.significand & mask);
}

IeeeComponents decode(std::uint64_t bits, Target target) noexcept {
  const Layout l = layout(target);
  const int sign_shift = target == Target::binary64 ? 63 : 31;
  const std::uint64_t mask = (std::uint64_t{1} << l.explicit_bits) - 1;
  const auto exponent =
      static_cast<std::uint32_t>((bits >> l.explicit_bits) & l.max_exponent);
  return make_components(((bits >> sign_shift) & 1) != 0, exponent, bits & mask, target);
}

double to_double(const IeeeComponents& value) noexcept {
  return std::bit_cast<double>(encode(value, Target::binary64));
}

float to_float(const IeeeComponents& value) noexcept {
  return std::bit_cast<float>(static_cast<std::uint32_t>(encode(value, Target::binary32)));
}

IeeeComponents from_double(double value) noexcept {
  return decode(std::bit_cast<std::uint64_t>(value), Target::binary64);
}

IeeeComponents from_float(float value) noexcept {
  return decode(std::bit_cast<std::uint32_t>(value), Target::binary32);
}

std::string hex_encoding(const IeeeComponents& value, Target target) {
  char buf[24];
  const std::uint64_t bits = encode(value, target);
  if (target == Target::binary64) {
    std::snprintf(buf, sizeof buf, "0x%016llX", static_cast<unsigned long long>(bits));
  } else {
    std::snprintf(buf, sizeof buf, "0x%08llX", static_cast<unsigned long long>(bits));
  }
  return buf;
}

}  // namespace decbin
