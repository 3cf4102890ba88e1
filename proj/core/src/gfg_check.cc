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

#include "gfg/gfg_check.hh"

namespace gfg {

GameOutcome play_simulation(const ParityAutomaton& simulated, const ParityAutomaton& simulator) {
  auto arena = build_arena(simulated, simulator);
  auto result = solve_verifier(arena);
  return {std::move(arena), std::move(result)};
}

bool includes(const ParityAutomaton& p1, const ParityAutomaton& p2_gfg) {
  return play_simulation(p1, p2_gfg).result.verifier_wins;
}

bool gfg_equivalent(const ParityAutomaton& candidate, const ParityAutomaton& reference_gfg) {
  if (!includes(candidate, reference_gfg)) return false;
  return includes(reference_gfg, candidate);
}

bool is_gfg_with_reference(const ParityAutomaton& p, const ParityAutomaton& deterministic_reference) {
  if (!is_deterministic(deterministic_reference)) {
    throw Error("reference automaton is not deterministic");
  }
  return gfg_equivalent(p, deterministic_reference);
}

}  // namespace gfg
