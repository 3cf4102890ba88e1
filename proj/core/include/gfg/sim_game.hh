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
// The "P2 simulates P1" game. Spoiler owns choice positions (q1, q2) and
// picks a letter with a P1 successor; verifier owns response positions
// (q1', a, q2) and picks a P2 successor. Verifier wins a play iff the P1
// run is rejecting or the P2 run is accepting.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gfg/automaton.hh"

namespace gfg {

using PositionId = std::uint32_t;

struct Position {
  enum class Kind : std::uint8_t { choice, response };

  Kind kind = Kind::choice;
  StateRef q1;
  SymbolId letter = 0;  // meaningful for response positions only
  StateRef q2;

  bool operator==(const Position&) const = default;
};

enum class Player : std::uint8_t { spoiler, verifier };

class SimulationArena {
 public:
  // Raw arena; position 0 is initial. Throws gfg::Error if the vectors
  // disagree in size, an edge is out of range, or a position has no successor.
  SimulationArena(Alphabet alphabet, std::vector<Position> positions,
                  std::vector<std::vector<PositionId>> successors, std::vector<unsigned> pri1,
                  std::vector<unsigned> pri2);

  std::size_t size() const { return positions_.size(); }
  PositionId initial() const { return 0; }
  const Alphabet& alphabet() const { return alphabet_; }
  const Position& position(PositionId id) const { return positions_.at(id); }
  std::span<const PositionId> successors(PositionId id) const { return successors_.at(id); }
  const std::vector<std::vector<PositionId>>& successor_lists() const { return successors_; }
  unsigned pri1(PositionId id) const { return pri1_.at(id); }
  unsigned pri2(PositionId id) const { return pri2_.at(id); }
  std::span<const unsigned> pri1() const { return pri1_; }
  std::span<const unsigned> pri2() const { return pri2_; }
  Player owner(PositionId id) const {
    return positions_.at(id).kind == Position::Kind::choice ? Player::spoiler : Player::verifier;
  }
  std::size_t response_count() const;

 private:
  Alphabet alphabet_;
  std::vector<Position> positions_;
  std::vector<std::vector<PositionId>> successors_;
  std::vector<unsigned> pri1_;
  std::vector<unsigned> pri2_;
};

/// Builds the reachable part of the "p2 simulates p1" arena. Positions are
/// numbered in breadth-first discovery order; successor lists follow letter
/// order, then state order (regular, TOP, BOT).
/// Throws gfg::Error when the alphabets differ.
SimulationArena build_arena(const ParityAutomaton& p1, const ParityAutomaton& p2);

// Verifier's memoryless choice at response positions.
class PositionalStrategy {
 public:
  PositionalStrategy() = default;
  explicit PositionalStrategy(std::size_t arena_size) : choice_(arena_size) {}

  std::size_t size() const { return choice_.size(); }
  std::optional<PositionId> at(PositionId response) const { return choice_.at(response); }
  void set(PositionId response, PositionId successor) { choice_.at(response) = successor; }

  bool operator==(const PositionalStrategy&) const = default;

 private:
  std::vector<std::optional<PositionId>> choice_;
};

struct SolveResult {
  bool verifier_wins = false;
  // Total on response positions; winning from the initial position when
  // verifier_wins holds.
  PositionalStrategy strategy;
  std::vector<char> verifier_region;
};

SolveResult solve_verifier(const SimulationArena& arena);

/// Fixes `strategy` and looks for a reachable closed walk whose largest pri1
/// is even and largest pri2 is odd; true iff there is none.
/// Throws gfg::Error if the strategy is missing a reachable response
/// position or picks a non-successor.
bool check_positional_strategy(const SimulationArena& arena, const PositionalStrategy& strategy);

// "POS id kind q1 [letter] q2 pri1 pri2" and "EDGE id id" lines.
std::string dump_arena(const SimulationArena& arena);
// "CHOOSE id id" lines for response positions with a choice.
std::string dump_strategy(const SimulationArena& arena, const PositionalStrategy& strategy);

}  // namespace gfg
