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

#include "decbin/binary_conversion.hpp"

#include <bit>
#include <cassert>

#include "convert_impl.hpp"

namespace decbin {

NormalizedSignificand normalize(std::uint64_t w) noexcept {
  assert(w != 0);
  const int shift = std::countl_zero(w);
  return NormalizedSignificand{w << shift, shift};
}

Product128 truncated_product(std::uint64_t scaled_w, const PowerEntry& entry) noexcept {
  return detail::multiply(scaled_w, entry.value);
}

std::uint64_t extract_significand(const Product128& product, MarginConfig cfg) noexcept {
  return static_cast<std::uint64_t>(product.z >> (128 - cfg.extract_bits));
}

std::optional<IeeeComponents> clinger_fast_path(const DecimalNumber& num, Target target) noexcept {
  if (num.truncated) return std::nullopt;
  if (target == Target::binary64) return detail::fast_path<Binary64>(num.negative, num.w, num.q);
  return detail::fast_path<Binary32>(num.negative, num.w, num.q);
}

IeeeComponents convert(const DecimalNumber& num, Target target) {
  if (target == Target::binary64) return detail::convert_number<Binary64, false>(num, nullptr);
  return detail::convert_number<Binary32, false>(num, nullptr);
}

CheckedConversion convert_with_check(const DecimalNumber& num, Target target) {
  detail::ConvertTrace trace;
  CheckedConversion out;
  out.result = target == Target::binary64 ? detail::convert_number<Binary64, true>(num, &trace)
                                          : detail::convert_number<Binary32, true>(num, &trace);
  out.check_evaluated = trace.check_evaluated;
  out.check_fired = trace.check_fired;
  return out;
}

IeeeComponents convert_parts(bool negative, std::uint64_t w, std::int64_t q, Target target) {
  DecimalNumber num;
  num.negative = negative;
  num.w = w;
  num.q = q;
  return convert(num, target);
}

ParseResult parse(std::string_view text, Target target) {
  const ScanResult scanned = scan(text);
  ParseResult r;
  r.kind = scanned.kind;
  r.consumed = scanned.consumed;
  r.error = scanned.error;
  if (scanned.kind != ScanKind::error) r.value = convert(scanned.number, target);
  return r;
}

}  // namespace decbin
