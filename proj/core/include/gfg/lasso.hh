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

#include <string>
#include <vector>

#include "gfg/automaton.hh"

namespace gfg {

// The ultimately periodic word prefix · period^ω. The period is non-empty.
struct LassoWord {
  std::vector<std::string> prefix;
  std::vector<std::string> period;

  std::size_t length() const { return prefix.size() + period.size(); }
  // Letter at position i of the infinite word.
  const std::string& at(std::size_t i) const;

  bool operator==(const LassoWord&) const = default;
};

std::string to_string(const LassoWord& w);

/// Does some run of `aut` on `w` have an even dominating priority?
/// Searches the product of the automaton with the lasso's position graph for
/// a reachable cycle, trying even candidate priorities from the top.
/// Throws gfg::Error for symbols outside the alphabet or an empty period.
bool accepts_lasso(const ParityAutomaton& aut, const LassoWord& w);

// Same, with the word already mapped to symbol indices.
bool accepts_lasso(const ParityAutomaton& aut, const std::vector<SymbolId>& prefix,
                   const std::vector<SymbolId>& period);

bool is_empty(const ParityAutomaton& aut);

// Every lasso with 1 <= |prefix| + |period| <= max_length over `alphabet`,
// ordered by total length, then prefix length, then lexicographically.
std::vector<LassoWord> all_lassos(const Alphabet& alphabet, std::size_t max_length);

}  // namespace gfg
