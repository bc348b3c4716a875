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
#include <string>

#include "decbin/cf_prover.hpp"
#include "json.hpp"

namespace decbin {
namespace {

std::string checksum_hex(std::uint64_t value) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%016llX", static_cast<unsigned long long>(value));
  return buf;
}

nlohmann::json witness_json(const ResidueWitness& w) {
  return {
      {"denominator", w.denom.get_str(10)},
      {"residue", to_hex(w.residue)},
      {"margin_gap", w.margin_gap.get_str(10)},
      {"gcd_d", w.gcd_d.get_str(10)},
  };
}

}  // namespace

std::string report_text(const VerificationReport& report) {
  std::string out;
  out += std::string(target_name(report.target)) + ": " + std::to_string(report.clear_count()) +
         "/" + std::to_string(report.per_power.size()) + " clear, k=" +
         std::to_string(report.modulus_bits) + ", table checksum " +
         checksum_hex(report.table_checksum) + (report.all_clear ? "" : ", WITNESS FOUND") + "\n";
  char line[512];
  for (const PowerCheck& c : report.per_power) {
    std::snprintf(line, sizeof line, "  q=%4d convergents=%3zu max_denominator=%s %s\n", c.q_power,
                  c.convergents_examined, c.max_denominator.get_str(10).c_str(),
                  c.clear() ? "clear" : "WITNESS");
    out += line;
    if (c.witness) {
      out += "    w=" + c.witness->denom.get_str(10) + " residue=" + to_hex(c.witness->residue) +
             " gap=" + c.witness->margin_gap.get_str(10) + " d=" + c.witness->gcd_d.get_str(10) +
             "\n";
    }
  }
  return out;
}

std::string report_json(std::span<const VerificationReport> reports) {
  nlohmann::json sections = nlohmann::json::array();
  bool all_clear = true;
  for (const VerificationReport& r : reports) {
    nlohmann::json entries = nlohmann::json::array();
    for (const PowerCheck& c : r.per_power) {
      entries.push_back({
          {"q", c.q_power},
          {"modulus_bits", c.modulus_bits},
          {"convergents_examined", c.convergents_examined},
          {"max_residue", to_hex(c.max_residue)},
          {"max_denominator", c.max_denominator.get_str(10)},
          {"witness", c.witness ? witness_json(*c.witness) : nlohmann::json(nullptr)},
      });
    }
    sections.push_back({
        {"target", target_name(r.target)},
        {"modulus_bits", r.modulus_bits},
        {"all_clear", r.all_clear},
        {"table_checksum", checksum_hex(r.table_checksum)},
        {"entry_count", r.per_power.size()},
        {"entries", std::move(entries)},
    });
    all_clear = all_clear && r.all_clear;
  }
  const nlohmann::json doc = {
      {"schema", "decbin.verify/1"},
      {"all_clear", all_clear},
      {"sections", std::move(sections)},
  };
  return doc.dump(2) + "\n";
}

}  // namespace decbin
