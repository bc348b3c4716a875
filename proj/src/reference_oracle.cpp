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

#include "decbin/reference_oracle.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

#include "decbin/bigint.hpp"

namespace decbin {
namespace {

struct FormatParams {
  int precision;     // significand bits including the hidden bit
  int min_exponent;  // exponent of the smallest normal, value = 1.f * 2^e
  int max_exponent;
  int bias;
};

constexpr FormatParams params(Target target) noexcept {
  return target == Target::binary64 ? FormatParams{53, -1022, 1023, 1023}
                                    : FormatParams{24, -126, 127, 127};
}

constexpr unsigned long kCachedPowers = 800;

// 5^k, cached for the exponents the oracle meets most often.
const BigInt& cached_pow5(unsigned long k, BigInt& scratch) {
  static const std::vector<BigInt> cache = [] {
    std::vector<BigInt> v(kCachedPowers);
    v[0] = 1;
    for (unsigned long i = 1; i < kCachedPowers; ++i) v[i] = v[i - 1] * 5;
    return v;
  }();
  if (k < kCachedPowers) return cache[k];
  mpz_ui_pow_ui(scratch.get_mpz_t(), 5, k);
  return scratch;
}

// Rounds num/den to the nearest integer, ties to even.
BigInt round_quotient(const BigInt& num, const BigInt& den) {
  BigInt quotient;
  BigInt remainder;
  mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  remainder <<= 1;
  const int c = cmp(remainder, den);
  if (c > 0 || (c == 0 && mpz_odd_p(quotient.get_mpz_t()))) ++quotient;
  return quotient;
}

IeeeComponents round_ratio(bool negative, BigInt num, BigInt den, std::int64_t binary_exponent,
                           Target target) {
  // value = num / den * 2^binary_exponent, num > 0.
  const FormatParams p = params(target);

  // floor(log2(value)): start from the bit-length difference and correct once.
  std::int64_t e = static_cast<std::int64_t>(bit_length(num)) -
                   static_cast<std::int64_t>(bit_length(den)) + binary_exponent;
  {
    const std::int64_t diff = static_cast<std::int64_t>(bit_length(num)) -
                              static_cast<std::int64_t>(bit_length(den));
    BigInt lhs = num;
    BigInt rhs = den;
    if (diff >= 0) {
      rhs <<= static_cast<mp_bitcnt_t>(diff);
    } else {
      lhs <<= static_cast<mp_bitcnt_t>(-diff);
    }
    if (cmp(lhs, rhs) < 0) --e;
  }

  if (e > p.max_exponent) return signed_infinity(negative, target);
  // Exponent of one unit in the last place of the result.
  std::int64_t ulp = (e < p.min_exponent ? p.min_exponent : e) - (p.precision - 1);
  const std::int64_t scale = binary_exponent - ulp;
  if (scale >= 0) {
    num <<= static_cast<mp_bitcnt_t>(scale);
  } else {
    den <<= static_cast<mp_bitcnt_t>(-scale);
  }
  BigInt m = round_quotient(num, den);

  const BigInt limit = pow2(static_cast<unsigned long>(p.precision));
  if (cmp(m, limit) >= 0) {
    m >>= 1;
    ++ulp;
  }
  const std::int64_t top = ulp + p.precision - 1;
  if (top > p.max_exponent) return signed_infinity(negative, target);

  const std::uint64_t mantissa = mpz_get_ui(m.get_mpz_t());
  const std::uint64_t hidden = std::uint64_t{1} << (p.precision - 1);
  if (mantissa == 0) return signed_zero(negative);
  if (mantissa < hidden) {
    return make_components(negative, 0, mantissa, target);
  }
  return make_components(negative, static_cast<std::uint32_t>(top + p.bias), mantissa - hidden,
                         target);
}

}  // namespace

IeeeComponents exact_convert(bool negative, std::string_view digits, std::int64_t q, Target target) {
  if (digits.empty()) throw std::invalid_argument("exact_convert: empty digit string");
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("exact_convert: non-digit character");
  }
  while (!digits.empty() && digits.front() == '0') digits.remove_prefix(1);
  while (!digits.empty() && digits.back() == '0') {
    digits.remove_suffix(1);
    ++q;
  }
  if (digits.empty()) return signed_zero(negative);

  const auto n = static_cast<std::int64_t>(digits.size());
  // value < 10^(q+n) <= 10^-326, far below half the smallest subnormal.
  if (q + n <= -326) return signed_zero(negative);
  // value >= 10^(q+n-1) >= 10^310, beyond every finite value.
  if (q + n - 1 >= 310) return signed_infinity(negative, target);

  BigInt d;
  if (digits.size() <= 19) {
    std::uint64_t v = 0;
    for (char c : digits) v = v * 10 + static_cast<std::uint64_t>(c - '0');
    d = from_uint64(v);
  } else {
    d.set_str(std::string(digits), 10);
  }

  // value = d * 5^q * 2^q
  BigInt scratch;
  if (q >= 0) {
    d *= cached_pow5(static_cast<unsigned long>(q), scratch);
    return round_ratio(negative, std::move(d), BigInt(1), q, target);
  }
  BigInt den = cached_pow5(static_cast<unsigned long>(-q), scratch);
  return round_ratio(negative, std::move(d), std::move(den), q, target);
}

IeeeComponents exact_convert(const DecimalNumber& num, Target target) {
  if (num.w == 0) return signed_zero(num.negative);
  if (!num.truncated || num.significand_text.empty()) {
    const std::string digits = std::to_string(num.w);
    return exact_convert(num.negative, digits, num.q, target);
  }
  std::string digits;
  digits.reserve(num.significand_text.size());
  for (char c : num.significand_text) {
    if (c != '.') digits.push_back(c);
  }
  return exact_convert(num.negative, digits, num.text_exponent, target);
}

ExactParse exact_parse(std::string_view text, Target target) {
  ExactParse r;
  r.scanned = scan(text);
  if (r.scanned.kind == ScanKind::zero) {
    r.value = signed_zero(r.scanned.number.negative);
  } else if (r.scanned.kind == ScanKind::number) {
    DecimalNumber full = r.scanned.number;
    // Always go through the full text so the oracle never relies on the
    // scanner's 19-digit accumulation.
    full.truncated = true;
    r.value = exact_convert(full, target);
  }
  return r;
}

std::string format_17(const IeeeComponents& value, Target target) {
  if (value.cls == FloatClass::infinity || value.cls == FloatClass::nan) {
    throw std::invalid_argument("format_17: value is not finite");
  }
  std::string out = value.negative ? "-" : "";
  if (value.cls == FloatClass::zero) return out + "0.0000000000000000e0";

  const FormatParams p = params(target);
  const std::uint64_t hidden = std::uint64_t{1} << (p.precision - 1);
  std::uint64_t m = value.significand;
  std::int64_t e;
  if (value.cls == FloatClass::subnormal) {
    e = p.min_exponent - (p.precision - 1);
  } else {
    m |= hidden;
    e = static_cast<std::int64_t>(value.biased_exponent) - p.bias - (p.precision - 1);
  }
  // value = m * 2^e. Estimate floor(log10(value)) from the bit length
  // (78913 / 2^18 ~ log10(2)) and correct by exact comparison below.
  const std::int64_t log2_floor = 63 - std::countl_zero(m) + e;
  std::int64_t exp10 = (log2_floor * 78913) >> 18;

  const BigInt low("10000000000000000");  // 10^16
  const BigInt high = low * 10;
  BigInt digits;
  for (int attempt = 0; attempt < 4; ++attempt) {
    // digits = round(m * 2^e * 10^(16 - exp10))
    const std::int64_t s = 16 - exp10;
    BigInt num = from_uint64(m);
    BigInt den = 1;
    if (e >= 0) {
      num <<= static_cast<mp_bitcnt_t>(e);
    } else {
      den <<= static_cast<mp_bitcnt_t>(-e);
    }
    BigInt scratch;
    if (s >= 0) {
      num *= cached_pow5(static_cast<unsigned long>(s), scratch);
      num <<= static_cast<mp_bitcnt_t>(s);
    } else {
      den *= cached_pow5(static_cast<unsigned long>(-s), scratch);
      den <<= static_cast<mp_bitcnt_t>(-s);
    }
    digits = round_quotient(num, den);
    if (cmp(digits, low) < 0) {
      --exp10;
    } else if (cmp(digits, high) >= 0) {
      if (cmp(digits, high) == 0) {
        digits = low;
        ++exp10;
        break;
      }
      ++exp10;
    } else {
      break;
    }
  }
  const std::string text = digits.get_str(10);
  out += text[0];
  out += '.';
  out += text.substr(1);
  out += 'e';
  out += std::to_string(exp10);
  return out;
}

}  // namespace decbin
