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

#ifndef DECBIN_CF_PROVER_HPP_
#define DECBIN_CF_PROVER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "decbin/bigint.hpp"
#include "decbin/format.hpp"
#include "decbin/pow5_table.hpp"

namespace decbin {

// Proves, per table entry T[q], that no significand w < 2^64 makes the low
// margin bits of the truncated product all ones. The condition is
//
//   (T[q] * w) mod 2^k >= 2^k - 2^64,     k = 64 + margin bits,
//
// and any such w, reduced by a gcd, is the denominator of a continued-fraction
// convergent of T[q] / 2^k (Legendre). Enumerating the convergents with
// denominators below 2^64 therefore decides the question exactly.
//
// All arithmetic here is arbitrary precision.

struct CFExpansion {
  BigInt numerator;
  BigInt denominator;
  std::vector<BigInt> coefficients;  // a0; a1, a2, ...
};

/// Euclidean expansion of numerator/denominator in canonical form (last
/// coefficient >= 2 when there is more than one). Requires denominator > 0;
/// throws std::invalid_argument otherwise.
CFExpansion cf_expansion(const BigInt& numerator, const BigInt& denominator);

/// Evaluates a0 + 1/(a1 + 1/(... + 1/an)) as a reduced fraction.
std::pair<BigInt, BigInt> evaluate_nested(std::span<const BigInt> coefficients);

struct Convergent {
  std::size_t index = 0;
  BigInt p;
  BigInt q_den;
};

/// c0 .. c_last via p_n = a_n p_{n-1} + p_{n-2}, q_n = a_n q_{n-1} + q_{n-2}.
std::vector<Convergent> convergents(const CFExpansion& expansion);

/// True iff p/q_den in lowest terms is a convergent of numerator/denominator.
bool is_convergent(const BigInt& p, const BigInt& q_den, const BigInt& numerator,
                   const BigInt& denominator);

/// (t * w) mod 2^modulus_bits.
BigInt residue(const BigInt& t, const BigInt& w, unsigned modulus_bits);

// Violation: residue(t, w, modulus_bits) >= 2^modulus_bits - 2^gap_bits for
// some 1 <= w < 2^bound_bits. The full-scale problem uses 64/64; reduced
// instances let the method be cross-checked by exhaustive search.
struct ResidueCondition {
  unsigned modulus_bits = 0;
  unsigned bound_bits = 64;
  unsigned gap_bits = 64;
};

constexpr ResidueCondition full_scale_condition(Target target) noexcept {
  return ResidueCondition{modulus_bits(target), 64, 64};
}

struct ResidueWitness {
  int q_power = 0;
  BigInt denom;       // w
  BigInt residue;     // (T * w) mod 2^k
  BigInt margin_gap;  // 2^k - residue
  BigInt gcd_d;       // gcd(w, 1 + floor(T * w / 2^k))
};

struct PowerCheck {
  int q_power = 0;
  unsigned modulus_bits = 0;
  std::size_t convergents_examined = 0;
  BigInt max_residue;
  BigInt max_denominator;
  std::vector<BigInt> denominators;  // examined, strictly increasing
  std::optional<ResidueWitness> witness;

  bool clear() const noexcept { return !witness.has_value(); }
};

/// Checks every convergent denominator of multiplier / 2^k below the bound.
/// Requires bound_bits + gap_bits + 1 <= modulus_bits (the window in which
/// every violator is a convergent); throws std::invalid_argument otherwise.
PowerCheck check_power(const BigInt& multiplier, const ResidueCondition& condition,
                       int q_power = 0);

/// Full-scale check of one table entry.
PowerCheck check_power(const PowerEntry& entry, unsigned modulus_bits);

struct SmallWitness {
  std::uint64_t denom = 0;
  std::uint64_t residue = 0;
};

/// Exhaustive search over 1 <= w < 2^bound_bits with gap 2^bound_bits, in
/// native integers. Requires modulus_bits <= 40 and bound_bits <= 20.
std::optional<SmallWitness> brute_force_check(std::uint64_t t, unsigned modulus_bits,
                                              unsigned bound_bits);

struct RescaleIdentity {
  BigInt d;
  BigInt lhs;
  BigInt rhs;
  bool exact_division = false;
};

/// Both sides of: (a * (w/d)) mod 2^k = 2^k + ((a*w) mod 2^k - 2^k) / d,
/// d = gcd(w, 1 + floor(a*w / 2^k)). Requires a, w > 0.
RescaleIdentity rescale_by_gcd(const BigInt& a, const BigInt& w, unsigned modulus_bits);

struct VerificationReport {
  Target target = Target::binary64;
  unsigned modulus_bits = 0;
  std::vector<PowerCheck> per_power;  // q ascending
  bool all_clear = false;
  std::uint64_t table_checksum = 0;

  std::size_t clear_count() const noexcept;
};

VerificationReport verify_all(const PowerTable& table, Target target);

/// Human-readable report: a summary line followed by one line per q.
std::string report_text(const VerificationReport& report);

/// Machine-readable document with one section per report.
std::string report_json(std::span<const VerificationReport> reports);

}  // namespace decbin

#endif  // DECBIN_CF_PROVER_HPP_
