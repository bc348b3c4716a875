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

#include "decbin/bigint.hpp"

#include <algorithm>
#include <cctype>

namespace decbin {

BigInt from_uint64(std::uint64_t value) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof value, 0, 0, &value);
  return r;
}

BigInt from_uint128(uint128 value) {
  const std::uint64_t words[2] = {static_cast<std::uint64_t>(value >> 64),
                                  static_cast<std::uint64_t>(value)};
  BigInt r;
  mpz_import(r.get_mpz_t(), 2, 1, sizeof words[0], 0, 0, words);
  return r;
}

uint128 to_uint128(const BigInt& value) {
  BigInt low = value;
  mpz_fdiv_r_2exp(low.get_mpz_t(), value.get_mpz_t(), 128);
  std::uint64_t words[2] = {0, 0};
  std::size_t count = 0;
  mpz_export(words, &count, -1, sizeof words[0], 0, 0, low.get_mpz_t());
  return (uint128{words[1]} << 64) | words[0];
}

BigInt pow2(unsigned long exponent) {
  BigInt r;
  mpz_setbit(r.get_mpz_t(), exponent);
  return r;
}

BigInt pow5(unsigned long exponent) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 5, exponent);
  return r;
}

std::size_t bit_length(const BigInt& value) {
  if (sgn(value) == 0) return 0;
  return mpz_sizeinbase(value.get_mpz_t(), 2);
}

std::string to_hex(const BigInt& value) {
  std::string s = value.get_str(16);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
    return static_cast<char>(std::toupper(c));
  });
  if (!s.empty() && s[0] == '-') return "-0x" + s.substr(1);
  return "0x" + s;
}

}  // namespace decbin
