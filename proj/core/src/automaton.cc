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

#include "gfg/automaton.hh"

#include <algorithm>
#include <set>
#include <sstream>

namespace gfg {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  for (auto& s : symbols_) {
    if (s == natural_alias) s = std::string(natural_symbol);
  }
}

std::optional<SymbolId> Alphabet::find(std::string_view symbol) const {
  if (symbol == natural_alias) symbol = natural_symbol;
  auto it = std::find(symbols_.begin(), symbols_.end(), symbol);
  if (it == symbols_.end()) return std::nullopt;
  return static_cast<SymbolId>(it - symbols_.begin());
}

SymbolId Alphabet::at(std::string_view symbol) const {
  if (auto id = find(symbol)) return *id;
  throw Error("symbol '" + std::string(symbol) + "' is not in the alphabet");
}

std::string to_string(StateRef state) {
  switch (state.kind()) {
    case StateRef::Kind::top:
      return "TOP";
    case StateRef::Kind::bottom:
      return "BOT";
    case StateRef::Kind::regular:
      break;
  }
  return std::to_string(state.index());
}

TransitionTarget TransitionTarget::states(std::vector<StateId> states) {
  std::sort(states.begin(), states.end());
  states.erase(std::unique(states.begin(), states.end()), states.end());
  TransitionTarget t(Kind::states);
  t.states_ = std::move(states);
  return t;
}

TransitionTarget TransitionTarget::of(StateRef ref) {
  if (ref.is_top()) return top();
  if (ref.is_bottom()) return bottom();
  return state(ref.index());
}

std::vector<StateRef> TransitionTarget::successors() const {
  switch (kind_) {
    case Kind::top:
      return {StateRef::top()};
    case Kind::bottom:
      return {StateRef::bottom()};
    case Kind::states:
      break;
  }
  std::vector<StateRef> out;
  out.reserve(states_.size());
  for (StateId q : states_) out.push_back(StateRef::regular(q));
  return out;
}

std::string_view to_string(AcceptanceKind kind) {
  switch (kind) {
    case AcceptanceKind::buchi:
      return "buchi";
    case AcceptanceKind::cobuchi:
      return "cobuchi";
    case AcceptanceKind::parity:
      return "parity";
  }
  return "parity";
}

std::optional<AcceptanceKind> parse_acceptance_kind(std::string_view text) {
  if (text == "buchi") return AcceptanceKind::buchi;
  if (text == "cobuchi") return AcceptanceKind::cobuchi;
  if (text == "parity") return AcceptanceKind::parity;
  return std::nullopt;
}

unsigned min_priority(AcceptanceKind kind) {
  switch (kind) {
    case AcceptanceKind::buchi:
      return 1;
    case AcceptanceKind::cobuchi:
      return 2;
    case AcceptanceKind::parity:
      break;
  }
  return 0;
}

unsigned default_top_priority(AcceptanceKind kind) {
  return kind == AcceptanceKind::parity ? 0 : 2;
}

unsigned default_bottom_priority(AcceptanceKind kind) {
  switch (kind) {
    case AcceptanceKind::buchi:
      return 1;
    case AcceptanceKind::cobuchi:
      return 3;
    case AcceptanceKind::parity:
      break;
  }
  return 1;
}

ParityAutomaton::ParityAutomaton(Alphabet alphabet, std::size_t state_count,
                                 AcceptanceKind kind)
    : alphabet_(std::move(alphabet)),
      state_count_(state_count),
      initial_(state_count > 0 ? StateRef::regular(0) : StateRef::bottom()),
      kind_(kind),
      delta_(state_count * alphabet_.size()),
      priorities_(state_count, min_priority(kind)),
      top_priority_(default_top_priority(kind)),
      bottom_priority_(default_bottom_priority(kind)) {}

const TransitionTarget& ParityAutomaton::transition(StateId q, SymbolId a) const {
  if (q >= state_count_ || a >= alphabet_.size()) {
    throw Error("transition (" + std::to_string(q) + ", " + std::to_string(a) +
                ") out of range");
  }
  return delta_[static_cast<std::size_t>(q) * alphabet_.size() + a];
}

void ParityAutomaton::set_transition(StateId q, SymbolId a, TransitionTarget target) {
  if (q >= state_count_ || a >= alphabet_.size()) {
    throw Error("transition (" + std::to_string(q) + ", " + std::to_string(a) +
                ") out of range");
  }
  delta_[static_cast<std::size_t>(q) * alphabet_.size() + a] = std::move(target);
}

unsigned ParityAutomaton::priority(StateRef q) const {
  if (q.is_top()) return top_priority_;
  if (q.is_bottom()) return bottom_priority_;
  return priorities_.at(q.index());
}

std::vector<StateRef> ParityAutomaton::successors(StateRef q, SymbolId a) const {
  if (q.is_sink()) return {q};
  return transition(q.index(), a).successors();
}

std::string to_string(const Diagnostic& d) { return d.location + ": " + d.message; }

namespace {

bool priority_allowed(AcceptanceKind kind, unsigned p) {
  switch (kind) {
    case AcceptanceKind::buchi:
      return p == 1 || p == 2;
    case AcceptanceKind::cobuchi:
      return p == 2 || p == 3;
    case AcceptanceKind::parity:
      break;
  }
  return true;
}

std::string slot_name(const ParityAutomaton& aut, StateId q, SymbolId a) {
  return "(" + std::to_string(q) + ", " + aut.alphabet().name(a) + ")";
}

}  // namespace

std::vector<Diagnostic> validate(const ParityAutomaton& aut) {
  std::vector<Diagnostic> out;
  const auto& sigma = aut.alphabet();
  if (sigma.empty()) out.push_back({"alphabet", "alphabet is empty"});
  {
    std::set<std::string> seen;
    for (const auto& s : sigma.symbols()) {
      if (s.empty()) out.push_back({"alphabet", "empty symbol name"});
      if (!seen.insert(s).second) out.push_back({"alphabet", "duplicate symbol '" + s + "'"});
    }
  }
  if (aut.initial().is_regular() && aut.initial().index() >= aut.state_count()) {
    out.push_back({"initial", "initial state " + std::to_string(aut.initial().index()) +
                                  " is not a state"});
  }
  for (StateId q = 0; q < aut.state_count(); ++q) {
    for (SymbolId a = 0; a < sigma.size(); ++a) {
      const auto& t = aut.transition(q, a);
      if (t.kind() != TransitionTarget::Kind::states) continue;
      if (t.state_set().empty()) {
        out.push_back({slot_name(aut, q, a), "empty target set"});
        continue;
      }
      for (StateId r : t.state_set()) {
        if (r >= aut.state_count()) {
          out.push_back({slot_name(aut, q, a), "target " + std::to_string(r) + " is not a state"});
        }
      }
    }
  }
  if (aut.top_priority() % 2 != 0) out.push_back({"TOP", "priority of TOP must be even"});
  if (aut.bottom_priority() % 2 != 1) out.push_back({"BOT", "priority of BOT must be odd"});

  const auto kind = aut.kind();
  const std::string kind_name(to_string(kind));
  for (StateId q = 0; q < aut.state_count(); ++q) {
    if (!priority_allowed(kind, aut.priority(q))) {
      out.push_back({"state " + std::to_string(q),
                     "priority " + std::to_string(aut.priority(q)) + " not allowed for " +
                         kind_name + " automata"});
    }
  }
  if (!priority_allowed(kind, aut.top_priority())) {
    out.push_back({"TOP", "priority " + std::to_string(aut.top_priority()) +
                              " not allowed for " + kind_name + " automata"});
  }
  if (!priority_allowed(kind, aut.bottom_priority())) {
    out.push_back({"BOT", "priority " + std::to_string(aut.bottom_priority()) +
                              " not allowed for " + kind_name + " automata"});
  }
  return out;
}

void require_valid(const ParityAutomaton& aut) {
  auto diags = validate(aut);
  if (!diags.empty()) throw Error("invalid automaton: " + to_string(diags.front()));
}

bool is_deterministic(const ParityAutomaton& aut) {
  for (StateId q = 0; q < aut.state_count(); ++q) {
    for (SymbolId a = 0; a < aut.alphabet().size(); ++a) {
      if (!aut.transition(q, a).is_singleton()) return false;
    }
  }
  return true;
}

ParityAutomaton normalize_priorities(const ParityAutomaton& aut) {
  ParityAutomaton out = aut;
  if (out.kind() == AcceptanceKind::parity) {
    out.set_top_priority(0);
    out.set_bottom_priority(1);
  }

  auto collect = [&] {
    std::set<unsigned> used(out.priorities().begin(), out.priorities().end());
    used.insert(out.top_priority());
    used.insert(out.bottom_priority());
    return used;
  };
  auto lower = [](unsigned p, unsigned gap) { return p > gap ? p - 2 : p; };

  for (;;) {
    auto used = collect();
    const unsigned max = *used.rbegin();
    std::optional<unsigned> gap;
    for (unsigned p = 2; p < max; ++p) {
      if (!used.contains(p)) {
        gap = p;
        break;
      }
    }
    if (!gap) break;
    for (StateId q = 0; q < out.state_count(); ++q) out.set_priority(q, lower(out.priority(q), *gap));
    out.set_top_priority(lower(out.top_priority(), *gap));
    out.set_bottom_priority(lower(out.bottom_priority(), *gap));
  }
  return out;
}

std::size_t state_count(const ParityAutomaton& aut) { return aut.state_count(); }

std::size_t transition_table_size(const ParityAutomaton& aut) {
  std::size_t total = 0;
  for (StateId q = 0; q < aut.state_count(); ++q) {
    for (SymbolId a = 0; a < aut.alphabet().size(); ++a) total += aut.transition(q, a).size();
  }
  return total;
}

ParityAutomaton rebase(const ParityAutomaton& aut, StateRef q) {
  if (q.is_regular() && q.index() >= aut.state_count()) {
    throw Error("cannot rebase to unknown state " + std::to_string(q.index()));
  }
  ParityAutomaton out = aut;
  out.set_initial(q);
  return out;
}

}  // namespace gfg
