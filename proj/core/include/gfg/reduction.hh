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
// Vertex cover to automaton reduction. A nice graph is a simple connected
// undirected graph with at least two vertices and a distinguished initial
// vertex. Its vertices v0..v(n-1) together with the stop symbol "#" form the
// alphabet of the characteristic and adjusted languages.

#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gfg/automaton.hh"
#include "gfg/lasso.hh"

namespace gfg {

using Vertex = std::uint32_t;

class NiceGraph {
 public:
  NiceGraph() = default;
  NiceGraph(std::size_t vertex_count, std::vector<std::pair<Vertex, Vertex>> edges, Vertex initial);

  std::size_t vertex_count() const { return vertex_count_; }
  Vertex initial_vertex() const { return initial_; }
  // Normalised (min, max) pairs in input order, duplicates kept for validation.
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  bool has_edge(Vertex u, Vertex v) const;
  const std::vector<Vertex>& neighbours(Vertex v) const { return adjacency_.at(v); }

  // "v<i>"; the symbol of vertex i.
  static std::string vertex_name(Vertex v);
  // v0..v(n-1) followed by "#".
  Alphabet alphabet() const;
  SymbolId natural_id() const { return static_cast<SymbolId>(vertex_count_); }

 private:
  std::size_t vertex_count_ = 0;
  Vertex initial_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// Empty iff the graph is nice.
std::vector<std::string> validate_nice(const NiceGraph& g);

struct VertexCover {
  std::set<Vertex> vertices;

  std::size_t size() const { return vertices.size(); }
  bool contains(Vertex v) const { return vertices.contains(v); }
  bool operator==(const VertexCover&) const = default;
};

std::string to_string(const VertexCover& c);

bool is_vertex_cover(const NiceGraph& g, const VertexCover& c);

// Smallest cover, ties broken by the lexicographically smallest sorted
// vertex list. Throws for graphs that are not nice or exceed 20 vertices.
VertexCover min_vertex_cover_bruteforce(const NiceGraph& g);

// All covers of g, ordered by size then lexicographically.
std::vector<VertexCover> all_vertex_covers(const NiceGraph& g);

// Membership oracles working on the word itself.
bool characteristic_contains(const NiceGraph& g, const LassoWord& w);
bool adjusted_contains(const NiceGraph& g, const LassoWord& w);

enum class CoverReading : std::uint8_t { buchi, cobuchi };

// State numbering of the cover automaton: (v,n) is v, (v,#) is n + v and the
// final copies (v,f) follow in increasing vertex order.
struct CoverLayout {
  std::size_t n = 0;
  std::vector<Vertex> cover;  // sorted

  StateId nonfinal(Vertex v) const { return static_cast<StateId>(v); }
  StateId stopped(Vertex v) const { return static_cast<StateId>(n + v); }
  StateId final(Vertex v) const;
  std::size_t state_count() const { return 2 * n + cover.size(); }
};

/// The deterministic automaton with 2|V| + |C| states recognising the
/// characteristic language (Büchi reading) or the adjusted language
/// (co-Büchi reading). Throws gfg::Error if c is not a cover of g.
ParityAutomaton build_cover_automaton(const NiceGraph& g, const VertexCover& c, CoverReading reading);

struct StateClassification {
  // vertex_states[v]: states reachable on a path word ending in v.
  std::vector<std::set<StateRef>> vertex_states;
  // natural_states[v]: states reachable from a v-state by reading "#".
  std::vector<std::set<StateRef>> natural_states;
};

StateClassification classify_states(const ParityAutomaton& aut, const NiceGraph& g);

// Vertices with an even-priority vertex state.
VertexCover extract_cover(const ParityAutomaton& aut, const NiceGraph& g);

enum class LanguageMode : std::uint8_t { characteristic, adjusted };

struct CoreStructureReport {
  // items[i] holds the verdict for structural property i + 1.
  std::array<bool, 6> items{};
  std::vector<std::set<StateRef>> core_vertex_states;
  std::vector<std::set<StateRef>> core_natural_states;
  std::vector<std::string> notes;

  bool all_hold() const;
};

/// Checks the six structural properties every good-for-games automaton for
/// the graph's language has: core v-states exist (1) with the mode's
/// priority parity (2); v-states reject "#w..." for w != v (3); core
/// #v-states exist (4); #v-states reject "w..." for w != v (5); every edge
/// has an endpoint with a core state of the mode's other parity (6).
/// Limits: at most 30 states and 8 vertices, else gfg::Error.
CoreStructureReport check_core_structure(const ParityAutomaton& aut, const NiceGraph& g, LanguageMode mode);

// Automaton accepting exactly the words that start with `prefix`.
ParityAutomaton prefix_automaton(const Alphabet& alphabet, const std::vector<SymbolId>& prefix);

}  // namespace gfg
