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

#include <cstdio>
#include <stdexcept>
#include <string>

#include "decbin/bigint.hpp"
#include "decbin/pow5_table.hpp"

namespace decbin {

PowerEntry generate_entry(int q) {
  if (q < kPow5MinQ || q > kPow5MaxQ) {
    throw std::out_of_range("power table exponent out of range: " + std::to_string(q));
  }
  const auto magnitude = static_cast<unsigned long>(q < 0 ? -q : q);
  const BigInt power = pow5(magnitude);
  const std::size_t bits = bit_length(power);

  BigInt value;
  if (q >= 0) {
    if (bits <= 128) {
      value = power << static_cast<mp_bitcnt_t>(128 - bits);
    } else {
      value = power >> static_cast<mp_bitcnt_t>(bits - 128);
    }
  } else {
    const BigInt numerator = pow2(static_cast<unsigned long>(127 + bits));
    if (q >= kReciprocalCeilingMinQ) {
      mpz_cdiv_q(value.get_mpz_t(), numerator.get_mpz_t(), power.get_mpz_t());
    } else {
      mpz_fdiv_q(value.get_mpz_t(), numerator.get_mpz_t(), power.get_mpz_t());
    }
  }
  if (bit_length(value) != 128) {
    throw std::logic_error("power table entry not normalized for q=" + std::to_string(q));
  }
  return PowerEntry{q, to_uint128(value)};
}

std::string dump_line(const PowerEntry& entry) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%d\t%016llX%016llX", entry.q,
                static_cast<unsigned long long>(entry.high()),
                static_cast<unsigned long long>(entry.low()));
  return buf;
}

}  // namespace decbin
