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

#ifndef DECBIN_POW5_TABLE_HPP_
#define DECBIN_POW5_TABLE_HPP_

#include <cassert>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "decbin/format.hpp"

namespace decbin {

inline constexpr int kPow5MinQ = -342;
inline constexpr int kPow5MaxQ = 308;
inline constexpr int kPow5Count = kPow5MaxQ - kPow5MinQ + 1;

// Reciprocals for q in [kReciprocalCeilingMinQ, -1] are rounded up; smaller q
// are truncated like the positive powers above 5^55.
inline constexpr int kReciprocalCeilingMinQ = -27;

// T[q]: 5^q (or 5^-q's reciprocal) scaled into [2^127, 2^128).
struct PowerEntry {
  int q = 0;
  uint128 value = 0;

  std::uint64_t high() const noexcept { return static_cast<std::uint64_t>(value >> 64); }
  std::uint64_t low() const noexcept { return static_cast<std::uint64_t>(value); }

  friend bool operator==(const PowerEntry&, const PowerEntry&) = default;
};

class PowerTable {
 public:
  explicit PowerTable(std::vector<PowerEntry> entries);

  /// The table compiled into the library.
  static const PowerTable& embedded();

  const PowerEntry& lookup(int q) const noexcept {
    assert(q >= kPow5MinQ && q <= kPow5MaxQ);
    return entries_[static_cast<std::size_t>(q - kPow5MinQ)];
  }

  std::span<const PowerEntry> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  friend bool operator==(const PowerTable&, const PowerTable&) = default;

 private:
  std::vector<PowerEntry> entries_;
};

/// Computes T[q] from scratch with arbitrary-precision arithmetic.
/// Throws std::out_of_range outside [kPow5MinQ, kPow5MaxQ].
PowerEntry generate_entry(int q);

/// All entries, q ascending.
PowerTable generate_table();

/// "q<TAB>32 uppercase hex digits", no newline.
std::string dump_line(const PowerEntry& entry);

/// One dump_line per entry, each terminated by '\n'.
std::string dump(const PowerTable& table);

/// FNV-1a (64-bit) over each entry's 16 big-endian value bytes, q ascending.
std::uint64_t checksum(const PowerTable& table) noexcept;

namespace detail {
// Generated at build time.
extern const std::uint64_t kEmbeddedPow5[kPow5Count][2];

inline uint128 embedded_pow5(int q) noexcept {
  assert(q >= kPow5MinQ && q <= kPow5MaxQ);
  const std::uint64_t* e = kEmbeddedPow5[q - kPow5MinQ];
  return (uint128{e[0]} << 64) | e[1];
}
}  // namespace detail

}  // namespace decbin

#endif  // DECBIN_POW5_TABLE_HPP_
