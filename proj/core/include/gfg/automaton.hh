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
// State-based parity automata over a finite alphabet, with the accepting
// and rejecting sinks TOP and BOT kept outside the state count.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gfg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using SymbolId = std::uint32_t;
using StateId = std::uint32_t;

// Plain-text spelling of the stop symbol; "♮" is accepted as an alias.
inline constexpr std::string_view natural_symbol = "#";
inline constexpr std::string_view natural_alias = "♮";

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  const std::string& name(SymbolId id) const { return symbols_.at(id); }
  const std::vector<std::string>& symbols() const { return symbols_; }

  std::optional<SymbolId> find(std::string_view symbol) const;
  // Throws gfg::Error for unknown symbols.
  SymbolId at(std::string_view symbol) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> symbols_;
};

// An element of Q ∪ {TOP, BOT}.
class StateRef {
 public:
  enum class Kind : std::uint8_t { regular, top, bottom };

  constexpr StateRef() = default;
  static constexpr StateRef regular(StateId index) { return StateRef(Kind::regular, index); }
  static constexpr StateRef top() { return StateRef(Kind::top, 0); }
  static constexpr StateRef bottom() { return StateRef(Kind::bottom, 0); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_regular() const { return kind_ == Kind::regular; }
  constexpr bool is_top() const { return kind_ == Kind::top; }
  constexpr bool is_bottom() const { return kind_ == Kind::bottom; }
  constexpr bool is_sink() const { return kind_ != Kind::regular; }
  constexpr StateId index() const { return index_; }

  // Regular states sort first by index, then TOP, then BOT.
  constexpr auto operator<=>(const StateRef&) const = default;

 private:
  constexpr StateRef(Kind kind, StateId index) : kind_(kind), index_(index) {}

  Kind kind_ = Kind::regular;
  StateId index_ = 0;
};

std::string to_string(StateRef state);

// The value of δ(q, a): a non-empty set of regular states or one of the sinks.
class TransitionTarget {
 public:
  enum class Kind : std::uint8_t { states, top, bottom };

  // A default target is an empty state set, which validate() rejects.
  TransitionTarget() = default;
  static TransitionTarget states(std::vector<StateId> states);
  static TransitionTarget state(StateId state) { return states({state}); }
  static TransitionTarget top() { return TransitionTarget(Kind::top); }
  static TransitionTarget bottom() { return TransitionTarget(Kind::bottom); }
  static TransitionTarget of(StateRef ref);

  Kind kind() const { return kind_; }
  bool is_sink() const { return kind_ != Kind::states; }
  std::span<const StateId> state_set() const { return states_; }
  bool is_singleton() const { return is_sink() || states_.size() == 1; }
  // Contribution to the transition-table size: sinks count as one entry.
  std::size_t size() const { return is_sink() ? 1 : states_.size(); }
  std::vector<StateRef> successors() const;

  bool operator==(const TransitionTarget&) const = default;

 private:
  explicit TransitionTarget(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::states;
  std::vector<StateId> states_;
};

enum class AcceptanceKind : std::uint8_t { buchi, cobuchi, parity };

std::string_view to_string(AcceptanceKind kind);
std::optional<AcceptanceKind> parse_acceptance_kind(std::string_view text);

// Lowest and highest priority a regular state may carry under a kind
// (parity kinds are unbounded above).
unsigned min_priority(AcceptanceKind kind);
unsigned default_top_priority(AcceptanceKind kind);
unsigned default_bottom_priority(AcceptanceKind kind);

class ParityAutomaton {
 public:
  ParityAutomaton() = default;
  // All transitions start as empty targets and all priorities at the kind's
  // lowest value; the initial state is state 0 (or BOT with no states).
  ParityAutomaton(Alphabet alphabet, std::size_t state_count, AcceptanceKind kind);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t state_count() const { return state_count_; }
  StateRef initial() const { return initial_; }
  AcceptanceKind kind() const { return kind_; }

  const TransitionTarget& transition(StateId q, SymbolId a) const;
  unsigned priority(StateId q) const { return priorities_.at(q); }
  unsigned priority(StateRef q) const;
  unsigned top_priority() const { return top_priority_; }
  unsigned bottom_priority() const { return bottom_priority_; }
  std::span<const unsigned> priorities() const { return priorities_; }

  // δ(q, a) for any q in Q ∪ {TOP, BOT}; sinks loop on themselves.
  std::vector<StateRef> successors(StateRef q, SymbolId a) const;

  void set_initial(StateRef q) { initial_ = q; }
  void set_transition(StateId q, SymbolId a, TransitionTarget target);
  void set_priority(StateId q, unsigned priority) { priorities_.at(q) = priority; }
  void set_top_priority(unsigned p) { top_priority_ = p; }
  void set_bottom_priority(unsigned p) { bottom_priority_ = p; }
  void set_kind(AcceptanceKind kind) { kind_ = kind; }

  bool operator==(const ParityAutomaton&) const = default;

 private:
  Alphabet alphabet_;
  std::size_t state_count_ = 0;
  StateRef initial_ = StateRef::bottom();
  AcceptanceKind kind_ = AcceptanceKind::parity;
  std::vector<TransitionTarget> delta_;
  std::vector<unsigned> priorities_;
  unsigned top_priority_ = 0;
  unsigned bottom_priority_ = 1;
};

struct Diagnostic {
  std::string location;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

std::string to_string(const Diagnostic& d);

// One diagnostic per violated structural invariant; empty when well formed.
std::vector<Diagnostic> validate(const ParityAutomaton& aut);
// Throws gfg::Error carrying the first diagnostic.
void require_valid(const ParityAutomaton& aut);

bool is_deterministic(const ParityAutomaton& aut);

/// Closes priority gaps: while some p >= 2 below the maximum is unused,
/// every priority above p drops by 2. Priorities of TOP and BOT take part.
/// For the parity kind the sinks are first reset to 0 and 1, which keeps the
/// largest regular priority at most state_count + 1.
ParityAutomaton normalize_priorities(const ParityAutomaton& aut);

std::size_t state_count(const ParityAutomaton& aut);
std::size_t transition_table_size(const ParityAutomaton& aut);

// The same automaton with initial state q. Throws for unknown indices.
ParityAutomaton rebase(const ParityAutomaton& aut, StateRef q);

}  // namespace gfg
