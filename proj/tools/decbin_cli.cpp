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

// Command-line front end. Talks to the library only through the C API.

#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "decbin/decbin.h"

namespace {

enum Exit : int {
  kOk = 0,
  kInputError = 1,
  kWitness = 2,
  kMismatch = 3,
  kTableMismatch = 4,
};

std::string hex_bits(std::uint64_t bits, int digits) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%0*" PRIX64, digits, bits);
  return buf;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

bool read_file(const std::string& path, std::string* out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  out->assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  return !in.bad();
}

// ---------------------------------------------------------------- parse

int parse_one(const std::string& text) {
  decbin_decimal dec;
  const decbin_status st = decbin_scan(text.data(), text.size(), &dec);
  if (st != DECBIN_OK || dec.consumed != text.size()) {
    const char* why = st != DECBIN_OK ? decbin_scan_reason_message(dec.reason) : "trailing characters";
    std::fprintf(stderr, "error: '%s': %s at offset %zu\n", text.c_str(), why, dec.consumed);
    return kInputError;
  }
  decbin_value v64, v32;
  if (decbin_parse_with_check(text.data(), text.size(), DECBIN_BINARY64, 1, &v64, nullptr) != DECBIN_OK ||
      decbin_parse_with_check(text.data(), text.size(), DECBIN_BINARY32, 1, &v32, nullptr) != DECBIN_OK) {
    std::fprintf(stderr, "error: '%s': conversion failed\n", text.c_str());
    return kInputError;
  }
  std::printf("%s sign=%c w=%" PRIu64 " q=%" PRId64 "%s f64=%s f32=%s check_fired=%s\n",
              text.c_str(), dec.negative ? '-' : '+', dec.w, dec.q,
              dec.truncated ? " truncated=true" : "", hex_bits(v64.bits, 16).c_str(),
              hex_bits(v32.bits, 8).c_str(), yes_no(v64.check_fired || v32.check_fired));
  return kOk;
}

int cmd_parse(const std::vector<std::string>& inputs) {
  int status = kOk;
  if (!inputs.empty()) {
    for (const std::string& s : inputs) status = std::max(status, parse_one(s));
    return status;
  }
  std::string line;
  while (std::getline(std::cin, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    status = std::max(status, parse_one(line));
  }
  return status;
}

// ---------------------------------------------------------------- verify

struct ReportDeleter {
  void operator()(decbin_report* r) const { decbin_report_free(r); }
};
using ReportPtr = std::unique_ptr<decbin_report, ReportDeleter>;

int cmd_verify(const std::string& target, const std::string& json_path, bool verbose) {
  std::vector<decbin_target> targets;
  if (target == "f64" || target == "both") targets.push_back(DECBIN_BINARY64);
  if (target == "f32" || target == "both") targets.push_back(DECBIN_BINARY32);

  std::vector<ReportPtr> reports;
  bool all_clear = true;
  for (decbin_target t : targets) {
    decbin_report* raw = nullptr;
    const decbin_status st = decbin_verify(t, &raw);
    if (st != DECBIN_OK) {
      std::fprintf(stderr, "error: verification failed: %s\n", decbin_status_message(st));
      return kInputError;
    }
    reports.emplace_back(raw);
    const char* text = decbin_report_text(raw);
    const std::string body = text ? text : "";
    if (verbose) {
      std::fputs(body.c_str(), stdout);
    } else {
      std::fwrite(body.data(), 1, body.find('\n') + 1, stdout);
    }
    if (!decbin_report_all_clear(raw)) {
      all_clear = false;
      std::istringstream lines(body);
      std::string line;
      bool show_next = false;
      while (std::getline(lines, line)) {
        const bool hit = line.find("WITNESS") != std::string::npos && line.rfind("  q=", 0) == 0;
        if (hit || show_next) std::fprintf(stderr, "%s\n", line.c_str());
        show_next = hit;
      }
    }
  }

  if (!json_path.empty()) {
    std::vector<const decbin_report*> ptrs;
    for (const ReportPtr& r : reports) ptrs.push_back(r.get());
    std::size_t needed = 0;
    decbin_reports_json(ptrs.data(), ptrs.size(), nullptr, 0, &needed);
    std::string json(needed, '\0');
    if (decbin_reports_json(ptrs.data(), ptrs.size(), json.data(), json.size(), &needed) != DECBIN_OK) {
      std::fprintf(stderr, "error: could not render the JSON report\n");
      return kInputError;
    }
    json.resize(needed - 1);
    std::ofstream out(json_path, std::ios::binary);
    if (!(out << json)) {
      std::fprintf(stderr, "error: cannot write %s\n", json_path.c_str());
      return kInputError;
    }
  }
  return all_clear ? kOk : kWitness;
}

// ---------------------------------------------------------------- difftest

int cmd_difftest(std::uint64_t count, std::uint64_t seed, const std::string& corpus_path) {
  decbin_difftest* raw = nullptr;
  if (decbin_difftest_create(seed, &raw) != DECBIN_OK) return kInputError;
  std::unique_ptr<decbin_difftest, void (*)(decbin_difftest*)> dt(raw, decbin_difftest_free);

  if (!corpus_path.empty()) {
    std::string data;
    if (!read_file(corpus_path, &data)) {
      std::fprintf(stderr, "error: cannot read %s\n", corpus_path.c_str());
      return kInputError;
    }
    std::istringstream lines(data);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(lines, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      decbin_decimal dec;
      if (decbin_scan(line.data(), line.size(), &dec) != DECBIN_OK || dec.consumed != line.size()) {
        std::fprintf(stderr, "error: %s:%zu: not a number: '%s'\n", corpus_path.c_str(), lineno,
                     line.c_str());
        return kInputError;
      }
      decbin_difftest_check(dt.get(), line.data(), line.size());
    }
  }
  if (decbin_difftest_run_corpus(dt.get()) != DECBIN_OK ||
      decbin_difftest_run_random(dt.get(), count) != DECBIN_OK) {
    std::fprintf(stderr, "error: difftest aborted\n");
    return kInputError;
  }

  decbin_difftest_stats s;
  decbin_difftest_get_stats(dt.get(), &s);
  std::printf("difftest seed=%" PRIu64 ": %" PRIu64 " inputs, %" PRIu64 " comparisons, %" PRIu64
              " mismatches, check evaluated %" PRIu64 " fired %" PRIu64 "\n",
              seed, s.inputs, s.comparisons, s.mismatches, s.check_evaluated, s.check_fired);
  if (s.mismatches != 0) {
    std::fprintf(stderr, "first mismatch: %s\n", decbin_difftest_first_mismatch(dt.get()));
    return kMismatch;
  }
  if (s.check_fired != 0) {
    std::fprintf(stderr, "check fired: %s\n", decbin_difftest_first_firing(dt.get()));
    return kWitness;
  }
  return kOk;
}

// ---------------------------------------------------------------- bench

struct VariantSpec {
  const char* name;
  decbin_variant variant;
};

constexpr VariantSpec kVariants[] = {
    {"no_check", DECBIN_VARIANT_NO_CHECK},
    {"with_check", DECBIN_VARIANT_WITH_CHECK},
    {"oracle", DECBIN_VARIANT_ORACLE},
};

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

int cmd_bench(const std::string& path, const std::string& variant_list, int reps, double min_time) {
  std::string data;
  if (!read_file(path, &data)) {
    std::fprintf(stderr, "error: cannot read %s\n", path.c_str());
    return kInputError;
  }
  std::vector<VariantSpec> chosen;
  std::stringstream names(variant_list);
  std::string name;
  while (std::getline(names, name, ',')) {
    const auto it = std::find_if(std::begin(kVariants), std::end(kVariants),
                                 [&](const VariantSpec& v) { return name == v.name; });
    if (it == std::end(kVariants)) {
      std::fprintf(stderr, "error: unknown variant '%s'\n", name.c_str());
      return kInputError;
    }
    chosen.push_back(*it);
  }

  const std::size_t lines = decbin_count_lines(data.data(), data.size());
  std::vector<std::vector<std::uint64_t>> results(chosen.size(), std::vector<std::uint64_t>(lines));
  std::size_t count = 0;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    std::size_t error_line = 0;
    if (decbin_parse_lines(chosen[i].variant, data.data(), data.size(), results[i].data(), lines,
                           &count, &error_line) != DECBIN_OK) {
      std::fprintf(stderr, "error: %s:%zu: not a number\n", path.c_str(), error_line);
      return kInputError;
    }
    results[i].resize(count);
    if (i > 0 && results[i] != results[0]) {
      const auto diff = std::mismatch(results[i].begin(), results[i].end(), results[0].begin());
      std::fprintf(stderr, "error: %s and %s disagree on number %td; no timings reported\n",
                   chosen[0].name, chosen[i].name, diff.first - results[i].begin() + 1);
      return kMismatch;
    }
  }

  std::vector<std::uint64_t> sink(lines);
  auto time_pass = [&](decbin_variant v) {
    const auto t0 = std::chrono::steady_clock::now();
    decbin_parse_lines(v, data.data(), data.size(), sink.data(), lines, &count, nullptr);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  // A repetition is a run of interleaved passes lasting about min_time per
  // variant. Pass order alternates forward and backward (ABBA) so drift and
  // background noise are shared by all variants.
  double slowest = 0;
  for (const VariantSpec& v : chosen) slowest = std::max(slowest, time_pass(v.variant));
  const int passes = std::max(2, static_cast<int>(min_time / std::max(slowest, 1e-9))) & ~1;

  std::vector<std::vector<double>> rates(chosen.size());
  for (int r = 0; r < reps; ++r) {
    std::vector<double> seconds(chosen.size(), 0.0);
    for (int p = 0; p < passes; ++p) {
      for (std::size_t j = 0; j < chosen.size(); ++j) {
        const std::size_t i = p % 2 == 0 ? j : chosen.size() - 1 - j;
        seconds[i] += time_pass(chosen[i].variant);
      }
    }
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      rates[i].push_back(static_cast<double>(count) * passes / seconds[i]);
    }
  }

  std::printf("dataset=%s numbers=%zu bytes=%zu reps=%d\n", path.c_str(), count, data.size(), reps);
  std::printf("%-12s %16s %12s\n", "variant", "numbers/s", "MB/s");
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    const double nps = median(rates[i]);
    const double bps = nps * static_cast<double>(data.size()) / static_cast<double>(count);
    std::printf("%-12s %16.0f %12.2f\n", chosen[i].name, nps, bps / 1e6);
  }
  return kOk;
}

// ---------------------------------------------------------------- dump-table

int cmd_dump_table(const std::string& out_path) {
  std::string text;
  int mismatches = 0;
  char line[64];
  for (int q = DECBIN_POW5_MIN_Q; q <= DECBIN_POW5_MAX_Q; ++q) {
    std::uint64_t hi = 0, lo = 0, rhi = 0, rlo = 0;
    decbin_pow5_entry(q, &hi, &lo);
    if (decbin_pow5_regenerate(q, &rhi, &rlo) != DECBIN_OK || hi != rhi || lo != rlo) {
      if (mismatches++ == 0) {
        std::fprintf(stderr, "error: embedded entry for q=%d differs from regenerated value\n", q);
      }
    }
    std::snprintf(line, sizeof line, "%d\t%016" PRIX64 "%016" PRIX64 "\n", q, hi, lo);
    text += line;
  }
  if (out_path.empty() || out_path == "-") {
    std::fputs(text.c_str(), stdout);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!(out << text)) {
      std::fprintf(stderr, "error: cannot write %s\n", out_path.c_str());
      return kInputError;
    }
  }
  if (mismatches) {
    std::fprintf(stderr, "error: %d of %d entries differ\n", mismatches, DECBIN_POW5_COUNT);
    return kTableMismatch;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decbin: correctly rounded decimal to binary conversion"};
  app.set_version_flag("--version", std::string(decbin_version()));
  app.require_subcommand(1);

  std::vector<std::string> parse_inputs;
  auto* parse = app.add_subcommand("parse", "Decompose and convert numbers (arguments or stdin lines)");
  parse->add_option("numbers", parse_inputs, "Number strings; use -- before negative values");

  std::string verify_target = "both", verify_json;
  bool verify_verbose = false;
  auto* verify = app.add_subcommand("verify", "Prove the table never triggers the fallback check");
  verify->add_option("--target", verify_target, "f64, f32 or both")
      ->check(CLI::IsMember({"f64", "f32", "both"}))
      ->capture_default_str();
  verify->add_option("--json", verify_json, "Write the machine-readable report here");
  verify->add_flag("-v,--verbose", verify_verbose, "Print one line per table entry");

  std::uint64_t diff_count = 100000, diff_seed = 42;
  std::string diff_corpus;
  auto* difftest = app.add_subcommand("difftest", "Compare fast conversion with the exact oracle");
  difftest->add_option("--count", diff_count, "Random strings to generate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  difftest->add_option("--seed", diff_seed, "Generator seed")->capture_default_str();
  difftest->add_option("--corpus", diff_corpus, "Extra inputs, one per line");

  std::string bench_path, bench_variants = "no_check,with_check";
  int bench_reps = 5;
  double bench_min_time = 0.25;
  auto* bench = app.add_subcommand("bench", "Measure throughput of the conversion variants");
  bench->add_option("dataset", bench_path, "Text file with one number per line")->required();
  bench->add_option("--variant", bench_variants, "Comma list of no_check, with_check, oracle")
      ->capture_default_str();
  bench->add_option("--reps", bench_reps, "Timed repetitions (median reported)")
      ->check(CLI::Range(3, 1000))
      ->capture_default_str();
  bench->add_option("--min-time", bench_min_time, "Seconds per repetition")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string dump_out;
  auto* dump = app.add_subcommand("dump-table", "Write the table and check it against a fresh build");
  dump->add_option("--out", dump_out, "Output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  if (*parse) return cmd_parse(parse_inputs);
  if (*verify) return cmd_verify(verify_target, verify_json, verify_verbose);
  if (*difftest) return cmd_difftest(diff_count, diff_seed, diff_corpus);
  if (*bench) return cmd_bench(bench_path, bench_variants, bench_reps, bench_min_time);
  if (*dump) return cmd_dump_table(dump_out);
  return kInputError;
}
