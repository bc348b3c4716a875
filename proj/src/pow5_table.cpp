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

#include <stdexcept>
#include <utility>

#include "decbin/pow5_table.hpp"

namespace decbin {

PowerTable::PowerTable(std::vector<PowerEntry> entries) : entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(kPow5Count)) {
    throw std::invalid_argument("power table must hold exactly 651 entries");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].q != kPow5MinQ + static_cast<int>(i)) {
      throw std::invalid_argument("power table entries must be ordered by q");
    }
  }
}

const PowerTable& PowerTable::embedded() {
  static const PowerTable table = [] {
    std::vector<PowerEntry> entries;
    entries.reserve(kPow5Count);
    for (int q = kPow5MinQ; q <= kPow5MaxQ; ++q) {
      entries.push_back(PowerEntry{q, detail::embedded_pow5(q)});
    }
    return PowerTable(std::move(entries));
  }();
  return table;
}

PowerTable generate_table() {
  std::vector<PowerEntry> entries;
  entries.reserve(kPow5Count);
  for (int q = kPow5MinQ; q <= kPow5MaxQ; ++q) entries.push_back(generate_entry(q));
  return PowerTable(std::move(entries));
}

std::string dump(const PowerTable& table) {
  std::string out;
  out.reserve(table.size() * 38);
  for (const PowerEntry& e : table.entries()) {
    out += dump_line(e);
    out += '\n';
  }
  return out;
}

std::uint64_t checksum(const PowerTable& table) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const PowerEntry& e : table.entries()) {
    for (int shift = 120; shift >= 0; shift -= 8) {
      h ^= static_cast<std::uint8_t>(e.value >> shift);
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

}  // namespace decbin
