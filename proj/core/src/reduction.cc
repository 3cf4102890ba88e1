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

#include "gfg/reduction.hh"

#include <algorithm>
#include <deque>

#include "gfg/gfg_check.hh"

namespace gfg {

NiceGraph::NiceGraph(std::size_t vertex_count, std::vector<std::pair<Vertex, Vertex>> edges, Vertex initial)
    : vertex_count_(vertex_count), initial_(initial), adjacency_(vertex_count) {
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
    if (v < vertex_count && u != v) {
      auto& nu = adjacency_[u];
      if (std::find(nu.begin(), nu.end(), v) == nu.end()) {
        nu.push_back(v);
        adjacency_[v].push_back(u);
      }
    }
  }
  for (auto& n : adjacency_) std::sort(n.begin(), n.end());
}

bool NiceGraph::has_edge(Vertex u, Vertex v) const {
  if (u >= vertex_count_ || v >= vertex_count_) return false;
  const auto& nu = adjacency_[u];
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::string NiceGraph::vertex_name(Vertex v) { return "v" + std::to_string(v); }

Alphabet NiceGraph::alphabet() const {
  std::vector<std::string> symbols;
  symbols.reserve(vertex_count_ + 1);
  for (Vertex v = 0; v < vertex_count_; ++v) symbols.push_back(vertex_name(v));
  symbols.emplace_back(natural_symbol);
  return Alphabet(std::move(symbols));
}

std::vector<std::string> validate_nice(const NiceGraph& g) {
  std::vector<std::string> out;
  const auto n = g.vertex_count();
  if (n < 2) out.push_back("graph needs at least two vertices");
  if (g.initial_vertex() >= n) out.push_back("initial vertex " + std::to_string(g.initial_vertex()) + " out of range");
  std::set<std::pair<Vertex, Vertex>> seen;
  for (auto [u, v] : g.edges()) {
    const std::string name = "edge " + std::to_string(u) + " " + std::to_string(v);
    if (v >= n) out.push_back(name + ": vertex out of range");
    if (u == v) out.push_back(name + ": self-loop");
    if (!seen.insert({u, v}).second) out.push_back(name + ": duplicate edge");
  }
  if (n >= 1) {
    std::vector<char> reached(n, 0);
    std::vector<Vertex> todo{0};
    reached[0] = 1;
    while (!todo.empty()) {
      const Vertex v = todo.back();
      todo.pop_back();
      for (Vertex w : g.neighbours(v)) {
        if (!reached[w]) {
          reached[w] = 1;
          todo.push_back(w);
        }
      }
    }
    if (std::find(reached.begin(), reached.end(), 0) != reached.end()) out.push_back("graph is not connected");
  }
  return out;
}

std::string to_string(const VertexCover& c) {
  std::string out;
  for (Vertex v : c.vertices) {
    if (!out.empty()) out += ',';
    out += NiceGraph::vertex_name(v);
  }
  return out;
}

bool is_vertex_cover(const NiceGraph& g, const VertexCover& c) {
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const auto& e) { return c.contains(e.first) || c.contains(e.second); });
}

namespace {

void require_nice(const NiceGraph& g) {
  auto diags = validate_nice(g);
  if (!diags.empty()) throw Error("graph is not nice: " + diags.front());
}

// Visits every k-subset of {0..n-1} in lexicographic order until f returns true.
template <typename F>
bool for_each_subset_of_size(std::size_t n, std::size_t k, F&& f) {
  std::vector<Vertex> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<Vertex>(i);
  for (;;) {
    if (f(pick)) return true;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

VertexCover min_vertex_cover_bruteforce(const NiceGraph& g) {
  require_nice(g);
  if (g.vertex_count() > 20) throw Error("brute-force cover search is limited to 20 vertices");
  VertexCover best;
  for (std::size_t k = 0; k <= g.vertex_count(); ++k) {
    const bool found = for_each_subset_of_size(g.vertex_count(), k, [&](const std::vector<Vertex>& pick) {
      VertexCover c{{pick.begin(), pick.end()}};
      if (!is_vertex_cover(g, c)) return false;
      best = std::move(c);
      return true;
    });
    if (found) break;
  }
  return best;
}

std::vector<VertexCover> all_vertex_covers(const NiceGraph& g) {
  require_nice(g);
  if (g.vertex_count() > 20) throw Error("cover enumeration is limited to 20 vertices");
  std::vector<VertexCover> out;
  for (std::size_t k = 0; k <= g.vertex_count(); ++k) {
    for_each_subset_of_size(g.vertex_count(), k, [&](const std::vector<Vertex>& pick) {
      VertexCover c{{pick.begin(), pick.end()}};
      if (is_vertex_cover(g, c)) out.push_back(std::move(c));
      return false;
    });
  }
  return out;
}

namespace {

struct WordView {
  std::vector<SymbolId> prefix;
  std::vector<SymbolId> period;

  SymbolId at(std::size_t i) const {
    return i < prefix.size() ? prefix[i] : period[(i - prefix.size()) % period.size()];
  }
  std::size_t length() const { return prefix.size() + period.size(); }
};

WordView view_of(const NiceGraph& g, const LassoWord& w) {
  if (w.period.empty()) throw Error("lasso period must not be empty");
  const auto sigma = g.alphabet();
  WordView out;
  for (const auto& s : w.prefix) out.prefix.push_back(sigma.at(s));
  for (const auto& s : w.period) out.period.push_back(sigma.at(s));
  return out;
}

// Walks v0 followed by `letters`, collapsing repeats; false as soon as a
// change of vertex is not an edge. `last` receives the final vertex.
template <typename Letters>
bool walk_is_path(const NiceGraph& g, const Letters& letters, Vertex& last) {
  Vertex prev = g.initial_vertex();
  for (SymbolId x : letters) {
    if (x != prev && !g.has_edge(prev, x)) return false;
    prev = x;
  }
  last = prev;
  return true;
}

enum class TraceRule { infinite_path, finite_path };

bool language_contains(const NiceGraph& g, const LassoWord& w, TraceRule rule) {
  const auto word = view_of(g, w);
  const SymbolId stop = g.natural_id();

  std::optional<std::size_t> first_stop;
  for (std::size_t i = 0; i < word.length(); ++i) {
    if (word.at(i) == stop) {
      first_stop = i;
      break;
    }
  }

  Vertex last = 0;
  if (first_stop) {
    std::vector<SymbolId> before;
    for (std::size_t i = 0; i < *first_stop; ++i) before.push_back(word.at(i));
    if (!walk_is_path(g, before, last)) return false;
    return word.at(*first_stop + 1) == last;
  }

  // Trace word: v0 u v v covers every vertex change of v0 u v^ω.
  std::vector<SymbolId> letters = word.prefix;
  letters.insert(letters.end(), word.period.begin(), word.period.end());
  letters.insert(letters.end(), word.period.begin(), word.period.end());
  if (!walk_is_path(g, letters, last)) return false;
  const bool constant_period =
      std::all_of(word.period.begin(), word.period.end(), [&](SymbolId x) { return x == word.period.front(); });
  return rule == TraceRule::infinite_path ? !constant_period : constant_period;
}

}  // namespace

bool characteristic_contains(const NiceGraph& g, const LassoWord& w) {
  return language_contains(g, w, TraceRule::infinite_path);
}

bool adjusted_contains(const NiceGraph& g, const LassoWord& w) {
  return language_contains(g, w, TraceRule::finite_path);
}

StateId CoverLayout::final(Vertex v) const {
  auto it = std::lower_bound(cover.begin(), cover.end(), v);
  if (it == cover.end() || *it != v) throw Error("vertex " + std::to_string(v) + " is not in the cover");
  return static_cast<StateId>(2 * n + (it - cover.begin()));
}

ParityAutomaton build_cover_automaton(const NiceGraph& g, const VertexCover& c, CoverReading reading) {
  require_nice(g);
  if (!is_vertex_cover(g, c)) throw Error("{" + to_string(c) + "} is not a vertex cover");
  for (Vertex v : c.vertices) {
    if (v >= g.vertex_count()) throw Error("cover vertex " + std::to_string(v) + " out of range");
  }

  const std::size_t n = g.vertex_count();
  const CoverLayout layout{n, {c.vertices.begin(), c.vertices.end()}};
  const auto kind = reading == CoverReading::buchi ? AcceptanceKind::buchi : AcceptanceKind::cobuchi;
  ParityAutomaton aut(g.alphabet(), layout.state_count(), kind);
  aut.set_initial(StateRef::regular(layout.nonfinal(g.initial_vertex())));

  const SymbolId stop = g.natural_id();
  auto vertex_step = [&](Vertex v, SymbolId x) {
    if (x == stop) return TransitionTarget::state(layout.stopped(v));
    if (x == v) return TransitionTarget::state(layout.nonfinal(v));
    if (g.has_edge(v, x)) {
      return TransitionTarget::state(c.contains(x) ? layout.final(x) : layout.nonfinal(x));
    }
    return TransitionTarget::bottom();
  };

  for (Vertex v = 0; v < n; ++v) {
    for (SymbolId x = 0; x <= stop; ++x) {
      aut.set_transition(layout.nonfinal(v), x, vertex_step(v, x));
      if (c.contains(v)) aut.set_transition(layout.final(v), x, vertex_step(v, x));
      aut.set_transition(layout.stopped(v), x, x == v ? TransitionTarget::top() : TransitionTarget::bottom());
    }
  }

  const unsigned low = reading == CoverReading::buchi ? 1 : 2;
  const unsigned high = reading == CoverReading::buchi ? 2 : 3;
  for (StateId q = 0; q < aut.state_count(); ++q) aut.set_priority(q, low);
  for (Vertex v : c.vertices) aut.set_priority(layout.final(v), high);
  aut.set_top_priority(2);
  aut.set_bottom_priority(reading == CoverReading::buchi ? 1 : 3);
  return aut;
}

namespace {

void require_graph_alphabet(const ParityAutomaton& aut, const NiceGraph& g) {
  if (!(aut.alphabet() == g.alphabet())) {
    throw Error("automaton alphabet does not match the graph's vertices plus '#'");
  }
}

std::set<StateRef> post(const ParityAutomaton& aut, const std::set<StateRef>& from, SymbolId a) {
  std::set<StateRef> out;
  for (StateRef q : from) {
    for (StateRef r : aut.successors(q, a)) out.insert(r);
  }
  return out;
}

}  // namespace

StateClassification classify_states(const ParityAutomaton& aut, const NiceGraph& g) {
  require_graph_alphabet(aut, g);
  const std::size_t n = g.vertex_count();
  StateClassification out;
  out.vertex_states.resize(n);
  out.natural_states.resize(n);

  std::deque<std::pair<Vertex, StateRef>> todo;
  auto add = [&](Vertex v, StateRef q) {
    if (out.vertex_states[v].insert(q).second) todo.emplace_back(v, q);
  };
  add(g.initial_vertex(), aut.initial());
  while (!todo.empty()) {
    const auto [v, q] = todo.front();
    todo.pop_front();
    for (StateRef r : aut.successors(q, v)) add(v, r);
    for (Vertex w : g.neighbours(v)) {
      for (StateRef r : aut.successors(q, w)) add(w, r);
    }
  }
  for (Vertex v = 0; v < n; ++v) out.natural_states[v] = post(aut, out.vertex_states[v], g.natural_id());
  return out;
}

VertexCover extract_cover(const ParityAutomaton& aut, const NiceGraph& g) {
  const auto cls = classify_states(aut, g);
  VertexCover out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& states = cls.vertex_states[v];
    if (std::any_of(states.begin(), states.end(), [&](StateRef q) { return aut.priority(q) % 2 == 0; })) {
      out.vertices.insert(v);
    }
  }
  return out;
}

ParityAutomaton prefix_automaton(const Alphabet& alphabet, const std::vector<SymbolId>& prefix) {
  ParityAutomaton aut(alphabet, prefix.size(), AcceptanceKind::buchi);
  aut.set_initial(prefix.empty() ? StateRef::top() : StateRef::regular(0));
  for (StateId q = 0; q < prefix.size(); ++q) {
    for (SymbolId a = 0; a < alphabet.size(); ++a) {
      if (a != prefix[q]) {
        aut.set_transition(q, a, TransitionTarget::bottom());
      } else if (q + 1 == prefix.size()) {
        aut.set_transition(q, a, TransitionTarget::top());
      } else {
        aut.set_transition(q, a, TransitionTarget::state(q + 1));
      }
    }
  }
  return aut;
}

bool CoreStructureReport::all_hold() const {
  return std::all_of(items.begin(), items.end(), [](bool b) { return b; });
}

namespace {

// No word starting with `prefix` is accepted from q.
bool rejects_prefix(const ParityAutomaton& aut, StateRef q, const std::vector<SymbolId>& prefix) {
  std::set<StateRef> states{q};
  for (SymbolId a : prefix) states = post(aut, states, a);
  return std::all_of(states.begin(), states.end(), [&](StateRef r) { return is_empty(rebase(aut, r)); });
}

}  // namespace

CoreStructureReport check_core_structure(const ParityAutomaton& aut, const NiceGraph& g, LanguageMode mode) {
  if (aut.state_count() > 30) throw Error("structure check is limited to 30 states");
  if (g.vertex_count() > 8) throw Error("structure check is limited to 8 vertices");
  require_nice(g);
  require_graph_alphabet(aut, g);

  const std::size_t n = g.vertex_count();
  const SymbolId stop = g.natural_id();
  const auto& sigma = aut.alphabet();
  const auto cls = classify_states(aut, g);
  // Parity of the priority the core v-states must show (item 2); item 6
  // asks for the other one.
  const unsigned item2_parity = mode == LanguageMode::characteristic ? 1 : 0;
  const unsigned item6_parity = 1 - item2_parity;

  CoreStructureReport report;
  report.core_vertex_states.resize(n);
  report.core_natural_states.resize(n);
  report.items.fill(true);

  for (Vertex v = 0; v < n; ++v) {
    const auto accepts_all_after_stop = prefix_automaton(sigma, {stop, v});
    for (StateRef q : cls.vertex_states[v]) {
      if (includes(accepts_all_after_stop, rebase(aut, q))) report.core_vertex_states[v].insert(q);
    }
    const auto accepts_all_after_v = prefix_automaton(sigma, {v});
    for (StateRef q : cls.natural_states[v]) {
      if (includes(accepts_all_after_v, rebase(aut, q))) report.core_natural_states[v].insert(q);
    }
  }

  for (Vertex v = 0; v < n; ++v) {
    const auto& core = report.core_vertex_states[v];
    if (core.empty()) report.items[0] = false;
    if (std::none_of(core.begin(), core.end(), [&](StateRef q) { return aut.priority(q) % 2 == item2_parity; })) {
      report.items[1] = false;
    }
    if (report.core_natural_states[v].empty()) report.items[3] = false;

    for (SymbolId w = 0; w <= stop; ++w) {
      if (w == v) continue;
      for (StateRef q : cls.vertex_states[v]) {
        if (!rejects_prefix(aut, q, {stop, w})) report.items[2] = false;
      }
      for (StateRef q : cls.natural_states[v]) {
        if (!rejects_prefix(aut, q, {w})) report.items[4] = false;
      }
    }
  }

  for (auto [u, v] : g.edges()) {
    auto has = [&](Vertex x) {
      const auto& core = report.core_vertex_states[x];
      return std::any_of(core.begin(), core.end(), [&](StateRef q) { return aut.priority(q) % 2 == item6_parity; });
    };
    if (!has(u) && !has(v)) report.items[5] = false;
  }

  report.notes.push_back("item 5 quantifies over #v-states, not v-states");
  report.notes.push_back("items 2 and 6 are checked over core v-states");
  return report;
}

}  // namespace gfg
