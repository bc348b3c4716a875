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

#include "decbin/decbin.h"

#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "decbin/batch.hpp"
#include "decbin/binary_conversion.hpp"
#include "decbin/cf_prover.hpp"
#include "decbin/difftest.hpp"
#include "decbin/ieee.hpp"
#include "decbin/pow5_table.hpp"
#include "decbin/reference_oracle.hpp"
#include "decbin/scanner.hpp"

struct decbin_report {
  decbin::VerificationReport report;
  std::optional<std::string> text;
};

struct decbin_difftest {
  explicit decbin_difftest(std::uint64_t seed) : tester(seed) {}
  decbin::DiffTester tester;
};

namespace {

using decbin::Target;

template <class F>
decbin_status guarded(F&& f) noexcept {
  try {
    return f();
  } catch (const std::bad_alloc&) {
    return DECBIN_ERR_INTERNAL;
  } catch (const std::invalid_argument&) {
    return DECBIN_ERR_ARGUMENT;
  } catch (const std::out_of_range&) {
    return DECBIN_ERR_ARGUMENT;
  } catch (...) {
    return DECBIN_ERR_INTERNAL;
  }
}

bool to_target(decbin_target t, Target* out) noexcept {
  if (t == DECBIN_BINARY64) {
    *out = Target::binary64;
  } else if (t == DECBIN_BINARY32) {
    *out = Target::binary32;
  } else {
    return false;
  }
  return true;
}

decbin_class to_class(decbin::FloatClass c) noexcept {
  switch (c) {
    case decbin::FloatClass::zero: return DECBIN_CLASS_ZERO;
    case decbin::FloatClass::subnormal: return DECBIN_CLASS_SUBNORMAL;
    case decbin::FloatClass::normal: return DECBIN_CLASS_NORMAL;
    case decbin::FloatClass::infinity: return DECBIN_CLASS_INFINITY;
    case decbin::FloatClass::nan: return DECBIN_CLASS_NAN;
  }
  return DECBIN_CLASS_NAN;
}

decbin_scan_reason to_reason(decbin::ScanError e) noexcept {
  switch (e) {
    case decbin::ScanError::none: return DECBIN_SCAN_NONE;
    case decbin::ScanError::empty: return DECBIN_SCAN_EMPTY;
    case decbin::ScanError::no_digits: return DECBIN_SCAN_NO_DIGITS;
    case decbin::ScanError::malformed_exponent: return DECBIN_SCAN_MALFORMED_EXPONENT;
    case decbin::ScanError::non_ascii: return DECBIN_SCAN_NON_ASCII;
  }
  return DECBIN_SCAN_NONE;
}

decbin_value to_value(const decbin::IeeeComponents& v, Target target) noexcept {
  decbin_value out{};
  out.bits = decbin::encode(v, target);
  out.cls = to_class(v.cls);
  return out;
}

enum class Route { fast, checked, exact };

decbin_status parse_impl(Route route, const char* text, std::size_t len, decbin_target t,
                         int strict, decbin_value* out, std::size_t* consumed) {
  Target target;
  if ((text == nullptr && len != 0) || out == nullptr || !to_target(t, &target)) {
    return DECBIN_ERR_ARGUMENT;
  }
  return guarded([&]() -> decbin_status {
    const std::string_view sv(text == nullptr ? "" : text, len);
    const decbin::ScanResult s = decbin::scan(sv);
    if (s.kind == decbin::ScanKind::error) {
      if (consumed) *consumed = s.consumed;
      return DECBIN_ERR_SCAN;
    }
    if (strict && s.consumed != len) {
      if (consumed) *consumed = s.consumed;
      return DECBIN_ERR_SCAN;
    }
    if (consumed) *consumed = s.consumed;
    switch (route) {
      case Route::fast:
        *out = to_value(decbin::convert(s.number, target), target);
        break;
      case Route::checked: {
        const decbin::CheckedConversion c = decbin::convert_with_check(s.number, target);
        *out = to_value(c.result, target);
        out->check_evaluated = c.check_evaluated ? 1 : 0;
        out->check_fired = c.check_fired ? 1 : 0;
        break;
      }
      case Route::exact:
        *out = to_value(decbin::exact_parse(sv.substr(0, s.consumed), target).value, target);
        break;
    }
    return DECBIN_OK;
  });
}

decbin_status copy_out(const std::string& s, char* buf, std::size_t capacity, std::size_t* needed) {
  if (needed) *needed = s.size() + 1;
  if (buf == nullptr) return capacity == 0 ? DECBIN_OK : DECBIN_ERR_ARGUMENT;
  if (capacity < s.size() + 1) return DECBIN_ERR_BUFFER;
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return DECBIN_OK;
}

}  // namespace

extern "C" {

const char* decbin_version(void) { return "0.1.0"; }

const char* decbin_status_message(decbin_status status) {
  switch (status) {
    case DECBIN_OK: return "ok";
    case DECBIN_ERR_SCAN: return "not a number";
    case DECBIN_ERR_ARGUMENT: return "invalid argument";
    case DECBIN_ERR_BUFFER: return "buffer too small";
    case DECBIN_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* decbin_scan_reason_message(decbin_scan_reason reason) {
  switch (reason) {
    case DECBIN_SCAN_NONE: return decbin::scan_error_message(decbin::ScanError::none);
    case DECBIN_SCAN_EMPTY: return decbin::scan_error_message(decbin::ScanError::empty);
    case DECBIN_SCAN_NO_DIGITS: return decbin::scan_error_message(decbin::ScanError::no_digits);
    case DECBIN_SCAN_MALFORMED_EXPONENT:
      return decbin::scan_error_message(decbin::ScanError::malformed_exponent);
    case DECBIN_SCAN_NON_ASCII: return decbin::scan_error_message(decbin::ScanError::non_ascii);
  }
  return "unknown reason";
}

decbin_status decbin_scan(const char* text, size_t len, decbin_decimal* out) {
  if ((text == nullptr && len != 0) || out == nullptr) return DECBIN_ERR_ARGUMENT;
  const decbin::ScanResult s = decbin::scan(std::string_view(text == nullptr ? "" : text, len));
  *out = decbin_decimal{};
  out->consumed = s.consumed;
  out->reason = to_reason(s.error);
  if (s.kind == decbin::ScanKind::error) return DECBIN_ERR_SCAN;
  out->negative = s.number.negative ? 1 : 0;
  out->is_zero = s.kind == decbin::ScanKind::zero ? 1 : 0;
  out->truncated = s.number.truncated ? 1 : 0;
  out->w = s.number.w;
  out->q = s.number.q;
  return DECBIN_OK;
}

decbin_status decbin_parse(const char* text, size_t len, decbin_target target, int strict,
                           decbin_value* out, size_t* consumed) {
  return parse_impl(Route::fast, text, len, target, strict, out, consumed);
}

decbin_status decbin_parse_with_check(const char* text, size_t len, decbin_target target,
                                      int strict, decbin_value* out, size_t* consumed) {
  return parse_impl(Route::checked, text, len, target, strict, out, consumed);
}

decbin_status decbin_parse_exact(const char* text, size_t len, decbin_target target, int strict,
                                 decbin_value* out, size_t* consumed) {
  return parse_impl(Route::exact, text, len, target, strict, out, consumed);
}

decbin_status decbin_parse_double(const char* text, size_t len, double* out) {
  if (out == nullptr) return DECBIN_ERR_ARGUMENT;
  decbin_value v;
  const decbin_status st = decbin_parse(text, len, DECBIN_BINARY64, 1, &v, nullptr);
  if (st == DECBIN_OK) *out = decbin::to_double(decbin::decode(v.bits, Target::binary64));
  return st;
}

decbin_status decbin_parse_float(const char* text, size_t len, float* out) {
  if (out == nullptr) return DECBIN_ERR_ARGUMENT;
  decbin_value v;
  const decbin_status st = decbin_parse(text, len, DECBIN_BINARY32, 1, &v, nullptr);
  if (st == DECBIN_OK) *out = decbin::to_float(decbin::decode(v.bits, Target::binary32));
  return st;
}

decbin_status decbin_convert_parts(int negative, uint64_t w, int64_t q, decbin_target t,
                                   decbin_value* out) {
  Target target;
  if (out == nullptr || !to_target(t, &target)) return DECBIN_ERR_ARGUMENT;
  return guarded([&]() -> decbin_status {
    *out = to_value(decbin::convert_parts(negative != 0, w, q, target), target);
    return DECBIN_OK;
  });
}

decbin_status decbin_format17(uint64_t bits, decbin_target t, char* buf, size_t capacity,
                              size_t* written) {
  Target target;
  if (!to_target(t, &target)) return DECBIN_ERR_ARGUMENT;
  return guarded([&]() -> decbin_status {
    const std::string s = decbin::format_17(decbin::decode(bits, target), target);
    const decbin_status st = copy_out(s, buf, capacity, nullptr);
    if (written) *written = s.size();
    return st;
  });
}

decbin_status decbin_pow5_entry(int q, uint64_t* high, uint64_t* low) {
  if (q < decbin::kPow5MinQ || q > decbin::kPow5MaxQ || high == nullptr || low == nullptr) {
    return DECBIN_ERR_ARGUMENT;
  }
  const decbin::uint128 v = decbin::detail::embedded_pow5(q);
  *high = static_cast<uint64_t>(v >> 64);
  *low = static_cast<uint64_t>(v);
  return DECBIN_OK;
}

decbin_status decbin_pow5_regenerate(int q, uint64_t* high, uint64_t* low) {
  if (high == nullptr || low == nullptr) return DECBIN_ERR_ARGUMENT;
  return guarded([&]() -> decbin_status {
    const decbin::PowerEntry e = decbin::generate_entry(q);
    *high = e.high();
    *low = e.low();
    return DECBIN_OK;
  });
}

uint64_t decbin_pow5_checksum(void) { return decbin::checksum(decbin::PowerTable::embedded()); }

size_t decbin_count_lines(const char* data, size_t len) {
  if (data == nullptr) return 0;
  return decbin::count_lines(std::string_view(data, len));
}

decbin_status decbin_parse_lines(decbin_variant variant, const char* data, size_t len,
                                 uint64_t* out, size_t capacity, size_t* count,
                                 size_t* error_line) {
  if ((data == nullptr && len != 0) || (out == nullptr && capacity != 0) || count == nullptr) {
    return DECBIN_ERR_ARGUMENT;
  }
  decbin::Variant v;
  switch (variant) {
    case DECBIN_VARIANT_NO_CHECK: v = decbin::Variant::no_check; break;
    case DECBIN_VARIANT_WITH_CHECK: v = decbin::Variant::with_check; break;
    case DECBIN_VARIANT_ORACLE: v = decbin::Variant::oracle; break;
    default: return DECBIN_ERR_ARGUMENT;
  }
  return guarded([&]() -> decbin_status {
    const decbin::BatchResult r = decbin::parse_lines(
        v, std::string_view(data == nullptr ? "" : data, len), std::span<std::uint64_t>(out, capacity));
    *count = r.count;
    if (r.error_line) {
      if (error_line) *error_line = *r.error_line;
      return DECBIN_ERR_SCAN;
    }
    return DECBIN_OK;
  });
}

decbin_status decbin_verify(decbin_target t, decbin_report** out) {
  Target target;
  if (out == nullptr || !to_target(t, &target)) return DECBIN_ERR_ARGUMENT;
  *out = nullptr;
  return guarded([&]() -> decbin_status {
    auto report = std::make_unique<decbin_report>();
    report->report = decbin::verify_all(decbin::PowerTable::embedded(), target);
    *out = report.release();
    return DECBIN_OK;
  });
}

void decbin_report_free(decbin_report* report) { delete report; }

int decbin_report_all_clear(const decbin_report* report) {
  return report != nullptr && report->report.all_clear ? 1 : 0;
}

size_t decbin_report_size(const decbin_report* report) {
  return report == nullptr ? 0 : report->report.per_power.size();
}

size_t decbin_report_clear_count(const decbin_report* report) {
  return report == nullptr ? 0 : report->report.clear_count();
}

unsigned decbin_report_modulus_bits(const decbin_report* report) {
  return report == nullptr ? 0 : report->report.modulus_bits;
}

decbin_status decbin_report_entry(const decbin_report* report, size_t index,
                                  decbin_power_summary* out) {
  if (report == nullptr || out == nullptr || index >= report->report.per_power.size()) {
    return DECBIN_ERR_ARGUMENT;
  }
  const decbin::PowerCheck& c = report->report.per_power[index];
  *out = decbin_power_summary{};
  out->q = c.q_power;
  out->modulus_bits = c.modulus_bits;
  out->convergents_examined = c.convergents_examined;
  out->has_witness = c.witness ? 1 : 0;
  out->max_denominator = mpz_get_ui(c.max_denominator.get_mpz_t());
  out->witness_denominator = c.witness ? mpz_get_ui(c.witness->denom.get_mpz_t()) : 0;
  return DECBIN_OK;
}

const char* decbin_report_text(decbin_report* report) {
  if (report == nullptr) return nullptr;
  try {
    if (!report->text) report->text = decbin::report_text(report->report);
    return report->text->c_str();
  } catch (...) {
    return nullptr;
  }
}

decbin_status decbin_reports_json(const decbin_report* const* reports, size_t count, char* buf,
                                  size_t capacity, size_t* needed) {
  if (reports == nullptr || count == 0) return DECBIN_ERR_ARGUMENT;
  return guarded([&]() -> decbin_status {
    std::vector<decbin::VerificationReport> copies;
    copies.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      if (reports[i] == nullptr) return DECBIN_ERR_ARGUMENT;
      copies.push_back(reports[i]->report);
    }
    return copy_out(decbin::report_json(copies), buf, capacity, needed);
  });
}

decbin_status decbin_difftest_create(uint64_t seed, decbin_difftest** out) {
  if (out == nullptr) return DECBIN_ERR_ARGUMENT;
  *out = nullptr;
  return guarded([&]() -> decbin_status {
    *out = new decbin_difftest(seed);
    return DECBIN_OK;
  });
}

void decbin_difftest_free(decbin_difftest* dt) { delete dt; }

decbin_status decbin_difftest_run_random(decbin_difftest* dt, uint64_t count) {
  if (dt == nullptr) return DECBIN_ERR_ARGUMENT;
  return guarded([&]() -> decbin_status {
    dt->tester.run_random(count);
    return DECBIN_OK;
  });
}

decbin_status decbin_difftest_run_corpus(decbin_difftest* dt) {
  if (dt == nullptr) return DECBIN_ERR_ARGUMENT;
  return guarded([&]() -> decbin_status {
    dt->tester.run_builtin_corpus();
    return DECBIN_OK;
  });
}

decbin_status decbin_difftest_check(decbin_difftest* dt, const char* text, size_t len) {
  if (dt == nullptr || (text == nullptr && len != 0)) return DECBIN_ERR_ARGUMENT;
  return guarded([&]() -> decbin_status {
    dt->tester.check(std::string_view(text == nullptr ? "" : text, len));
    return DECBIN_OK;
  });
}

decbin_status decbin_difftest_get_stats(const decbin_difftest* dt, decbin_difftest_stats* out) {
  if (dt == nullptr || out == nullptr) return DECBIN_ERR_ARGUMENT;
  const decbin::DifftestStats& s = dt->tester.stats();
  *out = decbin_difftest_stats{s.inputs,          s.comparisons, s.mismatches,
                               s.check_evaluated, s.check_fired, s.scan_errors};
  return DECBIN_OK;
}

const char* decbin_difftest_first_mismatch(const decbin_difftest* dt) {
  if (dt == nullptr || !dt->tester.first_mismatch()) return nullptr;
  return dt->tester.first_mismatch()->c_str();
}

const char* decbin_difftest_first_firing(const decbin_difftest* dt) {
  if (dt == nullptr || !dt->tester.first_firing()) return nullptr;
  return dt->tester.first_firing()->c_str();
}

const char* decbin_difftest_first_scan_error(const decbin_difftest* dt) {
  if (dt == nullptr || !dt->tester.first_scan_error()) return nullptr;
  return dt->tester.first_scan_error()->c_str();
}

}  // extern "C"
