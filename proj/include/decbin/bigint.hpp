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

#ifndef DECBIN_BIGINT_HPP_
#define DECBIN_BIGINT_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>

#include "decbin/format.hpp"

namespace decbin {

using BigInt = mpz_class;

BigInt from_uint64(std::uint64_t value);
BigInt from_uint128(uint128 value);

/// Low 128 bits of a non-negative value.
uint128 to_uint128(const BigInt& value);

/// 2^exponent.
BigInt pow2(unsigned long exponent);
BigInt pow5(unsigned long exponent);

/// Number of significant bits; 0 for zero.
std::size_t bit_length(const BigInt& value);

/// Uppercase hex with a 0x prefix.
std::string to_hex(const BigInt& value);

}  // namespace decbin

#endif  // DECBIN_BIGINT_HPP_
