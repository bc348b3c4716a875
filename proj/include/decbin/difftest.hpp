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

#ifndef DECBIN_DIFFTEST_HPP_
#define DECBIN_DIFFTEST_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "decbin/format.hpp"

namespace decbin {

// Seeded generator of number strings for differential testing.
//
// Recipe (stable across platforms): std::mt19937_64 seeded with the seed;
// uniform(n) = (next() * n) >> 64 in 128-bit arithmetic. Each string picks a
// stratum with uniform(10):
//   0-6  random decimal: 1-25 digits (first nonzero, up to 3 leading zeros
//        with probability 1/8), value exponent in [-360, 320], a decimal
//        point at a random position, random sign and exponent spelling;
//   7-8  near-midpoint: a random finite binary64 (or binary32, by coin)
//        and the exact midpoint to its successor, rounded to 17-19
//        significant digits and nudged by -1, 0 or +1 in the last digit;
//   9    round trip: format_17 of a random finite binary64 bit pattern.
class NumberStringGenerator {
 public:
  explicit NumberStringGenerator(std::uint64_t seed) : rng_(seed) {}

  std::string next();

 private:
  std::uint64_t uniform(std::uint64_t n);
  std::string random_decimal();
  std::string near_midpoint();
  std::string round_trip();

  std::mt19937_64 rng_;
};

/// Boundary values, exact midpoints, subnormal edges, clamp thresholds and
/// long (>19 digit) strings.
std::vector<std::string> builtin_corpus();

struct DifftestStats {
  std::uint64_t inputs = 0;
  std::uint64_t comparisons = 0;  // one per input and target
  std::uint64_t mismatches = 0;
  std::uint64_t check_evaluated = 0;
  std::uint64_t check_fired = 0;
  std::uint64_t scan_errors = 0;
};

// Compares convert() and convert_with_check() against exact_convert() for
// binary64 and binary32, bit for bit (signed zeros included).
class DiffTester {
 public:
  explicit DiffTester(std::uint64_t seed) : generator_(seed) {}

  void check(std::string_view text);
  void run_random(std::uint64_t count);
  void run_builtin_corpus();

  const DifftestStats& stats() const noexcept { return stats_; }
  const std::optional<std::string>& first_mismatch() const noexcept { return first_mismatch_; }
  const std::optional<std::string>& first_firing() const noexcept { return first_firing_; }
  const std::optional<std::string>& first_scan_error() const noexcept { return first_scan_error_; }

 private:
  void check_target(std::string_view text, Target target);

  NumberStringGenerator generator_;
  DifftestStats stats_;
  std::optional<std::string> first_mismatch_;
  std::optional<std::string> first_firing_;
  std::optional<std::string> first_scan_error_;
};

}  // namespace decbin

#endif  // DECBIN_DIFFTEST_HPP_
