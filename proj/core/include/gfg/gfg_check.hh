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
// Certificate checks built on the simulation game. The automaton playing
// the verifier's side is trusted to be good-for-games; none of these
// functions test that property.

#pragma once

#include "gfg/automaton.hh"
#include "gfg/sim_game.hh"

namespace gfg {

struct GameOutcome {
  SimulationArena arena;
  SolveResult result;
};

// Builds and solves the "simulator simulates simulated" game.
GameOutcome play_simulation(const ParityAutomaton& simulated, const ParityAutomaton& simulator);

// Language inclusion L(p1) ⊆ L(p2), exact when p2 is good-for-games.
bool includes(const ParityAutomaton& p1, const ParityAutomaton& p2_gfg);

// candidate is good-for-games and language equivalent to the reference.
// Runs the inclusion game first and stops on the first failure.
bool gfg_equivalent(const ParityAutomaton& candidate, const ParityAutomaton& reference_gfg);

// gfg_equivalent with a reference whose good-for-games property is checked:
// throws gfg::Error unless `deterministic_reference` is deterministic.
bool is_gfg_with_reference(const ParityAutomaton& p, const ParityAutomaton& deterministic_reference);

}  // namespace gfg
