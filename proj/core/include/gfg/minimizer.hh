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
// Bounded guess-and-check search for small good-for-games automata.
//
// Candidates are initially connected automata whose states are numbered in
// breadth-first discovery order from the initial state (scanning symbols in
// alphabet order). The stream is ordered by
//   1. the two sink-initial automata (TOP, then BOT),
//   2. state count,
//   3. largest priority (parity targets only),
//   4. transition structure: per (state, symbol) slot, state sets in
//      bit-pattern order (singletons in index order when deterministic),
//      then TOP, then BOT,
//   5. priority vector, lexicographically.
// Nondeterministic candidates are additionally filtered so that exactly one
// member of each isomorphism class is emitted.

#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gfg/automaton.hh"

namespace gfg {

enum class SizeMeasure : std::uint8_t { states, transitions };

std::string_view to_string(SizeMeasure m);
std::optional<SizeMeasure> parse_size_measure(std::string_view text);

std::size_t measure_of(const ParityAutomaton& aut, SizeMeasure measure);

struct SearchBudget {
  std::uint64_t max_candidates = 0;  // 0: unlimited
  double max_seconds = 0;            // 0: unlimited
};

struct SearchSpec {
  Alphabet alphabet;
  AcceptanceKind target_kind = AcceptanceKind::parity;
  SizeMeasure measure = SizeMeasure::states;
  std::size_t bound = 1;
  unsigned max_priority = 3;  // parity targets; forced for buchi/cobuchi
  bool deterministic_only = false;
  SearchBudget budget;
  unsigned threads = 1;
};

std::vector<std::string> validate_search_spec(const SearchSpec& spec);

// Called after each transition slot of a partial structure is fixed; slots
// are (state, symbol) pairs in state-major order. Returning false discards
// every completion of the prefix.
using StructureFilter =
    std::function<bool(std::span<const TransitionTarget> slots, std::size_t assigned, std::size_t states)>;

class CandidateEnumerator {
 public:
  explicit CandidateEnumerator(SearchSpec spec, StructureFilter filter = {});

  // Next candidate in canonical order; nullopt once exhausted or truncated.
  std::optional<ParityAutomaton> next();

  bool truncated() const { return truncated_; }
  std::uint64_t emitted() const { return emitted_; }
  std::size_t max_states() const { return max_states_; }

 private:
  bool advance_structure();
  bool advance_priorities();
  bool structure_is_canonical();
  bool priorities_are_canonical() const;
  ParityAutomaton current() const;
  bool budget_exhausted() const;

  SearchSpec spec_;
  StructureFilter filter_;
  std::size_t max_states_ = 0;
  std::chrono::steady_clock::time_point start_;

  int sink_phase_ = 0;
  std::size_t states_ = 0;
  unsigned level_ = 0;
  bool structure_started_ = false;
  bool have_structure_ = false;
  std::vector<int> choice_;
  std::vector<std::size_t> discovered_;
  std::vector<TransitionTarget> slots_;
  std::vector<std::vector<std::size_t>> automorphisms_;
  bool priorities_started_ = false;
  std::vector<unsigned> priorities_;

  bool truncated_ = false;
  bool done_ = false;
  std::uint64_t emitted_ = 0;
};

// The whole stream; `truncated` reports whether the budget cut it short.
std::vector<ParityAutomaton> enumerate_candidates(const SearchSpec& spec, bool* truncated = nullptr);

enum class SearchVerdict : std::uint8_t { found, none, inconclusive };

std::string_view to_string(SearchVerdict v);

struct SearchStats {
  std::uint64_t candidates = 0;        // emitted by the enumerator
  std::uint64_t sample_rejected = 0;   // disagreed with the reference on a short lasso
  std::uint64_t games = 0;             // candidates sent to the simulation games
  std::uint64_t prefixes_pruned = 0;   // structure prefixes cut by the residual filter
  double seconds = 0;
};

struct SearchResult {
  SearchVerdict verdict = SearchVerdict::none;
  std::optional<ParityAutomaton> automaton;
  SearchStats stats;
};

/// Returns the first candidate in canonical order that passes
/// gfg_equivalent against `reference`. The reference is trusted to be
/// good-for-games. Candidates are screened by their verdicts on all lassos
/// of total length <= 3 and, for deterministic searches against a
/// deterministic reference, by residual-language consistency of partial
/// structures; both screens only discard candidates that cannot be
/// language equivalent. Throws gfg::Error on alphabet mismatch or an
/// invalid spec.
SearchResult minimize(const ParityAutomaton& reference, const SearchSpec& spec);

}  // namespace gfg
