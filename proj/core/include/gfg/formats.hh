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
//
// \file
// Plain-text formats. One declaration per line; a line whose first
// non-blank character is '#' is a comment. Inline comments are not
// supported because "#" is also the stop symbol.
//
// Automaton:
//   alphabet a b #
//   states 2
//   kind buchi|cobuchi|parity
//   initial 0|TOP|BOT
//   priority 0 2          (also "priority TOP p" / "priority BOT p")
//   trans 0 a -> 0 1      (or "-> TOP" / "-> BOT")
//
// Graph:
//   vertices 5
//   initial 0
//   edge 0 1
//
// Lasso word: "u ; v" with whitespace-separated symbols, v non-empty.

#pragma once

#include <string>
#include <string_view>

#include "gfg/automaton.hh"
#include "gfg/lasso.hh"
#include "gfg/reduction.hh"

namespace gfg {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Structural invariants (missing transitions, priorities outside the kind's
// range, ...) are left to validate().
ParityAutomaton parse_automaton(std::string_view text);
std::string serialize_automaton(const ParityAutomaton& aut);

// Throws ParseError on malformed lines and gfg::Error if the graph is not nice.
NiceGraph parse_graph(std::string_view text);
std::string serialize_graph(const NiceGraph& g);

LassoWord parse_lasso(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace gfg
