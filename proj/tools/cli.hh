// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace gfg::cli {

struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, digest
  std::string verdict;
  std::vector<std::pair<std::string, std::string>> details;
  std::vector<std::string> warnings;

  bool operator==(const RunReport&) const = default;
};

// Text form:
//   report-version 1
//   command <name>
//   input <path> <digest>
//   verdict <VERDICT>
//   detail <key> <value>
//   warning <text>
// Values escape '\\' and newlines as "\\\\" and "\\n".
std::string serialize_report(const RunReport& r);
RunReport parse_report(const std::string& text);
nlohmann::json report_to_json(const RunReport& r);

// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string digest(const std::string& bytes);

inline constexpr int exit_affirmative = 0;
inline constexpr int exit_negative = 1;
inline constexpr int exit_error = 2;

// args excludes the program name. The report goes to `out`, usage text and
// warnings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gfg::cli
