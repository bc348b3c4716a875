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

#ifndef DECBIN_BATCH_HPP_
#define DECBIN_BATCH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace decbin {

enum class Variant : std::uint8_t {
  no_check,    // table path as shipped
  with_check,  // table path with the all-ones margin check and an exact fallback
  oracle,      // exact arithmetic for every line
};

const char* variant_name(Variant v) noexcept;

struct BatchResult {
  std::size_t count = 0;
  std::optional<std::size_t> error_line;  // 1-based
};

/// Number of non-empty lines.
std::size_t count_lines(std::string_view data) noexcept;

/// Parses one number per line ('\n' or "\r\n"; empty lines skipped) to
/// binary64 bit patterns. Every line must be consumed entirely. Stops at the
/// first bad line or when `out` is full.
BatchResult parse_lines(Variant variant, std::string_view data, std::span<std::uint64_t> out);

}  // namespace decbin

#endif  // DECBIN_BATCH_HPP_
