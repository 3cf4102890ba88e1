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

// Shared fixtures for the unit and acceptance suites.

#pragma once

#include <string>
#include <vector>

#include "gfg/automaton.hh"
#include "gfg/reduction.hh"

namespace gfg::testing {

std::string data_path(const std::string& name);

NiceGraph path_graph(std::size_t n);   // v0 - v1 - ... - v(n-1)
NiceGraph cycle_graph(std::size_t n);  // path plus the edge v(n-1) - v0
NiceGraph star_graph(std::size_t n);   // centre v0, leaves v1..v(n-1)

struct NamedGraph {
  std::string name;
  NiceGraph graph;
};

// P2, P3, P4, P5, C4, S4.
std::vector<NamedGraph> fixture_graphs();

// The five-vertex path with the two-vertex cover {v1, v3}.
NiceGraph figure_graph();
VertexCover figure_cover();

// Deterministic Büchi automaton over {a, b} for "infinitely many a".
ParityAutomaton infinitely_many_a();

// Small hand-written automata over {a, b}, some nondeterministic.
std::vector<ParityAutomaton> small_automata();

// Seeded random automata over {a, b} with 1..max_states states.
std::vector<ParityAutomaton> random_automata(std::size_t count, std::size_t max_states, unsigned seed);

// Lowers the priority of every (v,f) state of a Büchi cover automaton to 1.
ParityAutomaton flip_final_states(const ParityAutomaton& cover_automaton, const NiceGraph& g, const VertexCover& c);
// Raises the priority of every (v,n) state of a coBüchi cover automaton to 3.
ParityAutomaton flip_nonfinal_states(const ParityAutomaton& cover_automaton, const NiceGraph& g);

}  // namespace gfg::testing
