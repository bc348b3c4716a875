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

#include "decbin/batch.hpp"

#include "convert_impl.hpp"

namespace decbin {
namespace {

template <Variant kVariant>
BatchResult parse_all(std::string_view data, std::span<std::uint64_t> out) {
  BatchResult r;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < data.size()) {
    std::size_t end = data.find('\n', pos);
    if (end == std::string_view::npos) end = data.size();
    std::string_view line = data.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (r.count == out.size()) break;

    const ScanResult s = scan(line);
    if (s.kind == ScanKind::error || s.consumed != line.size()) {
      r.error_line = line_no;
      return r;
    }
    IeeeComponents value;
    if constexpr (kVariant == Variant::no_check) {
      value = detail::convert_number<Binary64, false>(s.number, nullptr);
    } else if constexpr (kVariant == Variant::with_check) {
      detail::ConvertTrace trace;
      value = detail::convert_number<Binary64, true>(s.number, &trace);
      if (trace.check_fired) value = exact_convert(s.number, Target::binary64);
    } else {
      DecimalNumber full = s.number;
      full.truncated = true;
      value = exact_convert(full, Target::binary64);
    }
    out[r.count++] = encode(value, Target::binary64);
  }
  return r;
}

}  // namespace

const char* variant_name(Variant v) noexcept {
  switch (v) {
    case Variant::no_check: return "no_check";
    case Variant::with_check: return "with_check";
    case Variant::oracle: return "oracle";
  }
  return "unknown";
}

std::size_t count_lines(std::string_view data) noexcept {
  std::size_t n = 0;
  std::size_t pos = 0;
  while (pos < data.size()) {
    std::size_t end = data.find('\n', pos);
    if (end == std::string_view::npos) end = data.size();
    std::string_view line = data.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) ++n;
    pos = end + 1;
  }
  return n;
}

BatchResult parse_lines(Variant variant, std::string_view data, std::span<std::uint64_t> out) {
  switch (variant) {
    case Variant::no_check: return parse_all<Variant::no_check>(data, out);
    case Variant::with_check: return parse_all<Variant::with_check>(data, out);
    case Variant::oracle: return parse_all<Variant::oracle>(data, out);
  }
  return {};
}

}  // namespace decbin
