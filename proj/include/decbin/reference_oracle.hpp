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

#ifndef DECBIN_REFERENCE_ORACLE_HPP_
#define DECBIN_REFERENCE_ORACLE_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include "decbin/format.hpp"
#include "decbin/ieee.hpp"
#include "decbin/scanner.hpp"

namespace decbin {

// Exact, slow decimal to binary conversion. Everything is integer arithmetic
// on arbitrary-precision values: the input is scaled to a ratio of integers,
// divided by the candidate ulp, and the remainder decides the rounding.

/// Correctly rounded value of (-1)^negative * digits * 10^q. `digits` is a
/// non-empty run of '0'..'9' of any length. Throws std::invalid_argument
/// otherwise.
IeeeComponents exact_convert(bool negative, std::string_view digits, std::int64_t q, Target target);

/// Same, for a scanned number; truncated numbers use their full text.
IeeeComponents exact_convert(const DecimalNumber& num, Target target);

/// Scans and converts text exactly. Returns std::nullopt-like error through
/// the ScanResult kind; value is meaningful only when kind != error.
struct ExactParse {
  ScanResult scanned;
  IeeeComponents value;
};
ExactParse exact_parse(std::string_view text, Target target);

/// "d.dddddddddddddddde<exp>" with 17 significant digits, correctly rounded
/// (ties to even) from the exact binary value, optionally prefixed by '-'.
/// Requires a finite value; throws std::invalid_argument otherwise.
std::string format_17(const IeeeComponents& value, Target target);

}  // namespace decbin

#endif  // DECBIN_REFERENCE_ORACLE_HPP_
