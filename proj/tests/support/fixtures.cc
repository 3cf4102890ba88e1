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

#include "fixtures.hh"

#include <array>
#include <random>

namespace gfg::testing {

std::string data_path(const std::string& name) { return std::string(GFG_TEST_DATA) + "/" + name; }

NiceGraph path_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return NiceGraph(n, edges, 0);
}

NiceGraph cycle_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(static_cast<Vertex>(n - 1), 0);
  return NiceGraph(n, edges, 0);
}

NiceGraph star_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return NiceGraph(n, edges, 0);
}

std::vector<NamedGraph> fixture_graphs() {
  return {{"P2", path_graph(2)}, {"P3", path_graph(3)}, {"P4", path_graph(4)},
          {"P5", path_graph(5)}, {"C4", cycle_graph(4)}, {"S4", star_graph(4)}};
}

NiceGraph figure_graph() { return path_graph(5); }

VertexCover figure_cover() { return VertexCover{{1, 3}}; }

namespace {

Alphabet ab() { return Alphabet({"a", "b"}); }

}  // namespace

ParityAutomaton infinitely_many_a() {
  ParityAutomaton aut(ab(), 2, AcceptanceKind::buchi);
  for (StateId q = 0; q < 2; ++q) {
    aut.set_transition(q, 0, TransitionTarget::state(1));
    aut.set_transition(q, 1, TransitionTarget::state(0));
  }
  aut.set_priority(0, 1);
  aut.set_priority(1, 2);
  return aut;
}

std::vector<ParityAutomaton> small_automata() {
  std::vector<ParityAutomaton> out;
  out.push_back(infinitely_many_a());

  // Finitely many a: nondeterministic Büchi, guesses the last a.
  {
    ParityAutomaton aut(ab(), 2, AcceptanceKind::buchi);
    aut.set_transition(0, 0, TransitionTarget::state(0));
    aut.set_transition(0, 1, TransitionTarget::states({0, 1}));
    aut.set_transition(1, 0, TransitionTarget::bottom());
    aut.set_transition(1, 1, TransitionTarget::state(1));
    aut.set_priority(1, 2);
    out.push_back(aut);
  }
  // Finitely many a: deterministic coBüchi.
  {
    ParityAutomaton aut(ab(), 2, AcceptanceKind::cobuchi);
    for (StateId q = 0; q < 2; ++q) {
      aut.set_transition(q, 0, TransitionTarget::state(1));
      aut.set_transition(q, 1, TransitionTarget::state(0));
    }
    aut.set_priority(1, 3);
    out.push_back(aut);
  }
  // Words containing an a: first letter loops, a goes to TOP.
  {
    ParityAutomaton aut(ab(), 1, AcceptanceKind::buchi);
    aut.set_transition(0, 0, TransitionTarget::top());
    aut.set_transition(0, 1, TransitionTarget::state(0));
    out.push_back(aut);
  }
  // Universal and empty single-state automata.
  {
    ParityAutomaton aut(ab(), 1, AcceptanceKind::buchi);
    aut.set_transition(0, 0, TransitionTarget::state(0));
    aut.set_transition(0, 1, TransitionTarget::state(0));
    aut.set_priority(0, 2);
    out.push_back(aut);
    aut.set_priority(0, 1);
    out.push_back(aut);
  }
  // Nondeterministic, not good-for-games in general: two guesses on b.
  {
    ParityAutomaton aut(ab(), 3, AcceptanceKind::parity);
    aut.set_transition(0, 0, TransitionTarget::state(0));
    aut.set_transition(0, 1, TransitionTarget::states({1, 2}));
    aut.set_transition(1, 0, TransitionTarget::state(1));
    aut.set_transition(1, 1, TransitionTarget::state(0));
    aut.set_transition(2, 0, TransitionTarget::state(0));
    aut.set_transition(2, 1, TransitionTarget::state(2));
    aut.set_priority(0, 1);
    aut.set_priority(1, 2);
    aut.set_priority(2, 3);
    out.push_back(aut);
  }
  return out;
}

std::vector<ParityAutomaton> random_automata(std::size_t count, std::size_t max_states, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<ParityAutomaton> out;
  const std::array kinds{AcceptanceKind::buchi, AcceptanceKind::cobuchi, AcceptanceKind::parity};
  while (out.size() < count) {
    const std::size_t n = 1 + rng() % max_states;
    const auto kind = kinds[rng() % kinds.size()];
    ParityAutomaton aut(ab(), n, kind);
    for (StateId q = 0; q < n; ++q) {
      for (SymbolId a = 0; a < 2; ++a) {
        const unsigned roll = rng() % 10;
        if (roll == 0) {
          aut.set_transition(q, a, TransitionTarget::top());
        } else if (roll == 1) {
          aut.set_transition(q, a, TransitionTarget::bottom());
        } else {
          std::vector<StateId> targets;
          for (StateId r = 0; r < n; ++r) {
            if (rng() % 3 == 0) targets.push_back(r);
          }
          if (targets.empty()) targets.push_back(static_cast<StateId>(rng() % n));
          aut.set_transition(q, a, TransitionTarget::states(targets));
        }
      }
      const unsigned lo = min_priority(kind);
      const unsigned span = kind == AcceptanceKind::parity ? 4 : 2;
      aut.set_priority(q, lo + rng() % span);
    }
    out.push_back(std::move(aut));
  }
  return out;
}

ParityAutomaton flip_final_states(const ParityAutomaton& cover_automaton, const NiceGraph& g, const VertexCover& c) {
  CoverLayout layout{g.vertex_count(), std::vector<Vertex>(c.vertices.begin(), c.vertices.end())};
  auto out = cover_automaton;
  for (Vertex v : layout.cover) out.set_priority(layout.final(v), 1);
  return out;
}

ParityAutomaton flip_nonfinal_states(const ParityAutomaton& cover_automaton, const NiceGraph& g) {
  auto out = cover_automaton;
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.set_priority(static_cast<StateId>(v), 3);
  return out;
}

}  // namespace gfg::testing
