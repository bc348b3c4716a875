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

// Build-time generator for the embedded power-of-five table.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>

#include "decbin/pow5_table.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: " << argv[0] << " <output.cpp>\n";
    return 1;
  }
  try {
    std::ofstream out(argv[1]);
    out << "// Generated by pow5_gen. Do not edit.\n\n"
        << "#include \"decbin/pow5_table.hpp\"\n\n"
        << "namespace decbin::detail {\n\n"
        << "alignas(64) const std::uint64_t kEmbeddedPow5[kPow5Count][2] = {\n";
    char buf[96];
    for (int q = decbin::kPow5MinQ; q <= decbin::kPow5MaxQ; ++q) {
      const decbin::PowerEntry e = decbin::generate_entry(q);
      std::snprintf(buf, sizeof buf, "    {0x%016llXULL, 0x%016llXULL},  // %d\n",
                    static_cast<unsigned long long>(e.high()),
                    static_cast<unsigned long long>(e.low()), q);
      out << buf;
    }
    out << "};\n\n}  // namespace decbin::detail\n";
    if (!out) {
      std::cerr << "failed to write " << argv[1] << "\n";
      return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "pow5_gen: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
