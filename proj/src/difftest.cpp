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

#include "decbin/difftest.hpp"

#include <cinttypes>
#include <cstdio>

#include "decbin/bigint.hpp"
#include "decbin/binary_conversion.hpp"
#include "decbin/ieee.hpp"
#include "decbin/reference_oracle.hpp"
#include "decbin/scanner.hpp"

namespace decbin {
namespace {

// Integer-form decimal "<D>e<exp>" for num/den (> 0) with `digits`
// significant digits, rounded to nearest, then D += nudge.
std::string decimal_string(const BigInt& num, const BigInt& den, int digits, int nudge) {
  const BigInt low = [&] {
    BigInt v;
    mpz_ui_pow_ui(v.get_mpz_t(), 10, static_cast<unsigned long>(digits - 1));
    return v;
  }();
  const BigInt high = low * 10;
  // 1233 / 4096 ~ log10(2)
  const auto diff = static_cast<long>(bit_length(num)) - static_cast<long>(bit_length(den));
  long exp10 = (diff * 1233) >> 12;
  BigInt d;
  for (int attempt = 0; attempt < 6; ++attempt) {
    const long s = digits - 1 - exp10;
    BigInt n = num;
    BigInt m = den;
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(s < 0 ? -s : s));
    if (s >= 0) {
      n *= p;
    } else {
      m *= p;
    }
    BigInt r;
    mpz_fdiv_qr(d.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
    if (cmp(BigInt(r * 2), m) >= 0) ++d;
    if (cmp(d, low) < 0) {
      --exp10;
    } else if (cmp(d, high) >= 0) {
      ++exp10;
    } else {
      break;
    }
  }
  d += nudge;
  if (sgn(d) <= 0) d = 1;
  return d.get_str(10) + "e" + std::to_string(exp10 - (digits - 1));
}

}  // namespace

std::uint64_t NumberStringGenerator::uniform(std::uint64_t n) {
  return static_cast<std::uint64_t>((static_cast<uint128>(rng_()) * n) >> 64);
}

std::string NumberStringGenerator::next() {
  const std::uint64_t stratum = uniform(10);
  if (stratum <= 6) return random_decimal();
  if (stratum <= 8) return near_midpoint();
  return round_trip();
}

std::string NumberStringGenerator::random_decimal() {
  const int n = 1 + static_cast<int>(uniform(25));
  std::string digits;
  digits.push_back(static_cast<char>('1' + uniform(9)));
  for (int i = 1; i < n; ++i) digits.push_back(static_cast<char>('0' + uniform(10)));
  const std::int64_t value_exponent = -360 + static_cast<std::int64_t>(uniform(681));
  const int before_point = 1 + static_cast<int>(uniform(static_cast<std::uint64_t>(n)));

  std::string out;
  const std::uint64_t sign = uniform(8);
  if (sign < 4) {
    out.push_back('-');
  } else if (sign == 4) {
    out.push_back('+');
  }
  if (uniform(8) == 0) out.append(1 + uniform(3), '0');
  out.append(digits, 0, static_cast<std::size_t>(before_point));
  if (before_point < n) {
    out.push_back('.');
    out.append(digits, static_cast<std::size_t>(before_point), std::string::npos);
  }
  const std::int64_t written = value_exponent + (n - before_point);
  if (written != 0 || uniform(2) == 0) {
    out.push_back(uniform(2) == 0 ? 'e' : 'E');
    if (written >= 0 && uniform(4) == 0) out.push_back('+');
    out += std::to_string(written);
  }
  return out;
}

std::string NumberStringGenerator::near_midpoint() {
  const bool single = uniform(2) == 1;
  std::uint64_t m;
  std::int64_t e;
  if (single) {
    const std::uint64_t exponent = uniform(0xFF);
    const std::uint64_t fraction = rng_() & ((std::uint64_t{1} << 23) - 1);
    m = exponent == 0 ? fraction : (fraction | (std::uint64_t{1} << 23));
    e = exponent == 0 ? -149 : static_cast<std::int64_t>(exponent) - 150;
  } else {
    const std::uint64_t exponent = uniform(0x7FF);
    const std::uint64_t fraction = rng_() & ((std::uint64_t{1} << 52) - 1);
    m = exponent == 0 ? fraction : (fraction | (std::uint64_t{1} << 52));
    e = exponent == 0 ? -1074 : static_cast<std::int64_t>(exponent) - 1075;
  }
  // midpoint = (2m + 1) * 2^(e - 1)
  BigInt num = from_uint64(m);
  num = num * 2 + 1;
  BigInt den = 1;
  if (e - 1 >= 0) {
    num <<= static_cast<mp_bitcnt_t>(e - 1);
  } else {
    den <<= static_cast<mp_bitcnt_t>(1 - e);
  }
  const int digits = 17 + static_cast<int>(uniform(3));
  const int nudge = static_cast<int>(uniform(3)) - 1;
  std::string out = uniform(2) == 0 ? "" : "-";
  return out + decimal_string(num, den, digits, nudge);
}

std::string NumberStringGenerator::round_trip() {
  for (;;) {
    const IeeeComponents v = decode(rng_(), Target::binary64);
    if (v.cls != FloatClass::infinity && v.cls != FloatClass::nan) {
      return format_17(v, Target::binary64);
    }
  }
}

std::vector<std::string> builtin_corpus() {
  std::vector<std::string> c = {
      // decomposition and grammar samples
      "-3.14E+12", "3.1416", "1.0e10", "4E3", "0", "-0", "0.000", "-0.0e-999", "0e999999999999",
      "1.5", "10", "0001.5", "1.", "+2.5e-3",
      // clamp thresholds
      "1e-343", "-1e-343", "1e-342", "9e-343", "18446744073709551615e-343", "1e308", "1e309",
      "-1e309", "1.8e308", "0.1e309", "999999999999999999e291",
      // binary64 extremes
      "1.7976931348623157e308", "1.7976931348623158e308", "1.7976931348623159e308",
      "2.2250738585072011e-308", "2.2250738585072012e-308", "2.2250738585072013e-308",
      "2.2250738585072014e-308", "2.225073858507201136057409796709131975934819546351645648e-308",
      "4.9406564584124654e-324", "5e-324", "2.4703282292062327e-324",
      "2.4703282292062328e-324",
      // ties to even
      "9007199254740993", "9007199254740992", "9007199254740994", "9007199254740995",
      "9007199254740993.0000000000000000000001", "9007199254740992.9999999999999999999",
      "4503599627370496.5", "4503599627370497.5", "2251799813685248.25", "2251799813685248.75",
      "1152921504606846976", "1152921504606847104", "1152921504606847232",
      // binary32 extremes and ties
      "16777217", "16777216", "16777218", "16777219", "33554434", "33554438",
      "3.4028234e38", "3.4028235e38", "3.40282356779733661637539395458142568448e38",
      "3.4028236e38", "1.17549435e-38", "1.1754942e-38", "1.4e-45", "1.401298464324817e-45",
      "7e-46", "7.006492321624086e-46", "7.0064923216240862e-46",
      // classic hard cases
      "1e23", "8.589973e9", "0.1", "0.2", "0.3", "123456789012345678901234567890",
      "12345678901234567890", "1.00000000000000011102230246251565404236316680908203125",
      "1.00000000000000011102230246251565404236316680908203124",
      "1.00000000000000011102230246251565404236316680908203126", "7.038531e-26",
      "9.1e-5", "3.0517578125e-5", "4.35667929515e-28", "2.2250738585072012e-308",
      "1448997445238699", "18446744073709551615", "18446744073709551616", "1e19",
      "10000000000000000000", "100000000000000000000", "0.000000000000000000000000001",
  };
  for (int q = -350; q <= 320; ++q) {
    c.push_back("1e" + std::to_string(q));
    c.push_back("9.999999999999999999e" + std::to_string(q));
  }
  // Exact midpoints with at most 19 digits: odd * 2^j for binary64 (54-bit
  // odd) and binary32 (25-bit odd), written in full.
  const std::uint64_t odd64[] = {(std::uint64_t{1} << 53) + 1, (std::uint64_t{1} << 53) + 3,
                                 (std::uint64_t{1} << 54) - 1, 0x2D6A3C1E5F7B9ULL | (std::uint64_t{1} << 53)};
  const std::uint64_t odd32[] = {(1u << 24) + 1, (1u << 24) + 3, (1u << 25) - 1, 0x1A2B3C5u | (1u << 24)};
  auto emit = [&c](std::uint64_t odd, int j) {
    BigInt v = from_uint64(odd);
    if (j >= 0) {
      v <<= static_cast<mp_bitcnt_t>(j);
      if (bit_length(v) <= 63) c.push_back(v.get_str(10));
    } else {
      BigInt five;
      mpz_ui_pow_ui(five.get_mpz_t(), 5, static_cast<unsigned long>(-j));
      v *= five;
      if (v.get_str(10).size() <= 19) c.push_back(v.get_str(10) + "e" + std::to_string(j));
    }
  };
  for (std::uint64_t odd : odd64) {
    for (int j = -4; j <= 10; ++j) emit(odd, j);
  }
  for (std::uint64_t odd : odd32) {
    for (int j = -17; j <= 38; ++j) emit(odd, j);
  }
  // Exact decimal expansions (hundreds of digits) of midpoints (2m+1) * 2^(e-1)
  // around the subnormal range, the normal threshold and the overflow edge.
  struct Mid {
    std::uint64_t m;
    std::int64_t e;
  };
  const Mid mids[] = {
      {0, -1074}, {1, -1074}, {2, -1074}, {(std::uint64_t{1} << 52) - 1, -1074},
      {std::uint64_t{1} << 52, -1074}, {(std::uint64_t{1} << 53) - 1, 971},
      {0, -149}, {1, -149}, {(1u << 23) - 1, -149}, {(1u << 24) - 1, 104},
  };
  for (const Mid& mid : mids) {
    BigInt odd = from_uint64(2 * mid.m + 1);
    const std::int64_t e = mid.e - 1;
    if (e >= 0) {
      odd <<= static_cast<mp_bitcnt_t>(e);
      c.push_back(odd.get_str(10));
      c.push_back(odd.get_str(10) + "1e-3");
    } else {
      BigInt five;
      mpz_ui_pow_ui(five.get_mpz_t(), 5, static_cast<unsigned long>(-e));
      odd *= five;
      const std::string digits = odd.get_str(10);
      c.push_back(digits + "e" + std::to_string(e));
      c.push_back(digits + "1e" + std::to_string(e - 1));
      c.push_back(digits.substr(0, digits.size() - 1) + "e" + std::to_string(e + 1));
    }
  }
  return c;
}

void DiffTester::check_target(std::string_view text, Target target) {
  const ExactParse exact = exact_parse(text, target);
  const DecimalNumber& num = exact.scanned.number;
  const IeeeComponents fast = convert(num, target);
  const CheckedConversion checked = convert_with_check(num, target);
  ++stats_.comparisons;
  if (checked.check_evaluated) ++stats_.check_evaluated;
  if (checked.check_fired) {
    ++stats_.check_fired;
    if (!first_firing_) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "w=%" PRIu64 " q=%" PRId64 " target=%s", num.w, num.q,
                    target_name(target));
      first_firing_ = std::string(text) + " " + buf;
    }
  }
  const std::uint64_t a = encode(fast, target);
  const std::uint64_t b = encode(exact.value, target);
  const std::uint64_t c = encode(checked.result, target);
  if (a != b || a != c) {
    ++stats_.mismatches;
    if (!first_mismatch_) {
      first_mismatch_ = "input='" + std::string(text) + "' target=" + target_name(target) +
                        " convert=" + hex_encoding(fast, target) +
                        " convert_with_check=" + hex_encoding(checked.result, target) +
                        " exact=" + hex_encoding(exact.value, target) +
                        " | reproduce: decbin parse -- '" + std::string(text) + "'";
    }
  }
}

void DiffTester::check(std::string_view text) {
  ++stats_.inputs;
  const ScanResult s = scan(text);
  if (s.kind == ScanKind::error || s.consumed != text.size()) {
    ++stats_.scan_errors;
    if (!first_scan_error_) {
      first_scan_error_ = "'" + std::string(text) + "' at offset " + std::to_string(s.consumed);
    }
    return;
  }
  check_target(text, Target::binary64);
  check_target(text, Target::binary32);
}

void DiffTester::run_random(std::uint64_t count) {
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::string s = generator_.next();
    check(s);
  }
}

void DiffTester::run_builtin_corpus() {
  for (const std::string& s : builtin_corpus()) check(s);
}

}  // namespace decbin
