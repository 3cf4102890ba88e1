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

#include <doctest.h>

#include <algorithm>

#include "fixtures.hh"
#include "gfg/automaton.hh"
#include "gfg/lasso.hh"
#include "gfg/reduction.hh"

namespace gfg {
namespace {

ParityAutomaton one_state(AcceptanceKind kind, unsigned priority) {
  ParityAutomaton aut(Alphabet({"a"}), 1, kind);
  aut.set_transition(0, 0, TransitionTarget::state(0));
  aut.set_priority(0, priority);
  return aut;
}

ParityAutomaton two_state_parity(unsigned p0, unsigned p1) {
  ParityAutomaton aut(Alphabet({"a", "b"}), 2, AcceptanceKind::parity);
  aut.set_transition(0, 0, TransitionTarget::state(1));
  aut.set_transition(0, 1, TransitionTarget::state(0));
  aut.set_transition(1, 0, TransitionTarget::state(1));
  aut.set_transition(1, 1, TransitionTarget::state(0));
  aut.set_priority(0, p0);
  aut.set_priority(1, p1);
  return aut;
}

std::vector<unsigned> regular_priorities(const ParityAutomaton& aut) {
  return {aut.priorities().begin(), aut.priorities().end()};
}

}  // namespace

TEST_SUITE("automaton") {
  TEST_CASE("state refs order regular states before TOP before BOT") {
    CHECK(StateRef::regular(7) < StateRef::top());
    CHECK(StateRef::top() < StateRef::bottom());
    CHECK(to_string(StateRef::regular(3)) == "3");
    CHECK(to_string(StateRef::top()) == "TOP");
    CHECK(to_string(StateRef::bottom()) == "BOT");
  }

  TEST_CASE("alphabet maps the natural alias to #") {
    Alphabet sigma({"v0", "♮"});
    CHECK(sigma.name(1) == "#");
    CHECK(sigma.at("♮") == 1);
    CHECK(sigma.at("#") == 1);
    CHECK_FALSE(sigma.find("v1"));
    CHECK_THROWS_AS(sigma.at("v1"), Error);
  }

  TEST_CASE("validate accepts a well-formed automaton") { CHECK(validate(one_state(AcceptanceKind::buchi, 2)).empty()); }

  TEST_CASE("validate names an empty target slot") {
    ParityAutomaton aut(Alphabet({"a", "b"}), 1, AcceptanceKind::buchi);
    aut.set_transition(0, 1, TransitionTarget::state(0));
    auto diags = validate(aut);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].location == "(0, a)");
  }

  TEST_CASE("validate rejects priority 3 in a Büchi automaton") {
    auto diags = validate(one_state(AcceptanceKind::buchi, 3));
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].location == "state 0");
  }

  TEST_CASE("validate checks sink parities and the kind's range") {
    auto aut = one_state(AcceptanceKind::parity, 0);
    aut.set_top_priority(1);
    aut.set_bottom_priority(2);
    CHECK(validate(aut).size() == 2);

    auto co = one_state(AcceptanceKind::cobuchi, 2);
    co.set_bottom_priority(1);
    CHECK(validate(co).size() == 1);
  }

  TEST_CASE("validate rejects out-of-range targets and initial states") {
    auto aut = one_state(AcceptanceKind::buchi, 1);
    aut.set_transition(0, 0, TransitionTarget::states({0, 4}));
    aut.set_initial(StateRef::regular(2));
    CHECK(validate(aut).size() == 2);
    CHECK_THROWS_AS(require_valid(aut), Error);
  }

  TEST_CASE("kind defaults for sinks and fresh states") {
    CHECK(default_top_priority(AcceptanceKind::buchi) == 2);
    CHECK(default_bottom_priority(AcceptanceKind::buchi) == 1);
    CHECK(default_top_priority(AcceptanceKind::cobuchi) == 2);
    CHECK(default_bottom_priority(AcceptanceKind::cobuchi) == 3);
    CHECK(default_top_priority(AcceptanceKind::parity) == 0);
    CHECK(default_bottom_priority(AcceptanceKind::parity) == 1);
    CHECK(parse_acceptance_kind("cobuchi") == AcceptanceKind::cobuchi);
    CHECK_FALSE(parse_acceptance_kind("rabin"));
  }

  TEST_CASE("determinism") {
    const auto g = testing::path_graph(2);
    CHECK(is_deterministic(build_cover_automaton(g, VertexCover{{1}}, CoverReading::buchi)));
    CHECK(is_deterministic(one_state(AcceptanceKind::buchi, 2)));

    ParityAutomaton nd(Alphabet({"a"}), 2, AcceptanceKind::buchi);
    nd.set_transition(0, 0, TransitionTarget::states({0, 1}));
    nd.set_transition(1, 0, TransitionTarget::state(1));
    CHECK_FALSE(is_deterministic(nd));
  }

  TEST_CASE("normalize_priorities examples") {
    CHECK(regular_priorities(normalize_priorities(two_state_parity(1, 2))) == std::vector<unsigned>{1, 2});
    CHECK(regular_priorities(normalize_priorities(two_state_parity(3, 4))) == std::vector<unsigned>{1, 2});
    CHECK(regular_priorities(normalize_priorities(two_state_parity(1, 3))) == std::vector<unsigned>{1, 1});
  }

  TEST_CASE("normalize_priorities preserves lasso acceptance and bounds parity priorities") {
    for (const auto& aut : testing::random_automata(150, 3, 11)) {
      const auto norm = normalize_priorities(aut);
      REQUIRE(validate(norm).empty());
      if (aut.kind() == AcceptanceKind::parity) {
        const auto ps = norm.priorities();
        const unsigned top = std::max({*std::max_element(ps.begin(), ps.end()), norm.top_priority(),
                                       norm.bottom_priority()});
        CHECK(top <= norm.state_count() + 1);
      }
      for (const auto& w : all_lassos(aut.alphabet(), 5)) {
        REQUIRE(accepts_lasso(norm, w) == accepts_lasso(aut, w));
      }
    }
  }

  TEST_CASE("size measures of the two-vertex path construction") {
    const auto g = testing::path_graph(2);
    const auto b = build_cover_automaton(g, VertexCover{{1}}, CoverReading::buchi);
    CHECK(state_count(b) == 5);
    CHECK(transition_table_size(b) == 15);
    CHECK(state_count(build_cover_automaton(testing::figure_graph(), testing::figure_cover(), CoverReading::buchi)) ==
          12);
  }

  TEST_CASE("transition table counts every state of a set and sinks once") {
    ParityAutomaton aut(Alphabet({"a", "b"}), 2, AcceptanceKind::buchi);
    aut.set_transition(0, 0, TransitionTarget::states({0, 1}));
    aut.set_transition(0, 1, TransitionTarget::top());
    aut.set_transition(1, 0, TransitionTarget::bottom());
    aut.set_transition(1, 1, TransitionTarget::state(1));
    CHECK(transition_table_size(aut) == 5);
  }

  TEST_CASE("rebase") {
    const auto b = testing::infinitely_many_a();
    CHECK(rebase(b, b.initial()) == b);
    const auto top = rebase(b, StateRef::top());
    const auto bot = rebase(b, StateRef::bottom());
    for (const auto& w : all_lassos(b.alphabet(), 4)) {
      CHECK(accepts_lasso(top, w));
      CHECK_FALSE(accepts_lasso(bot, w));
    }
    CHECK(state_count(top) == 2);
    CHECK_THROWS_AS(rebase(b, StateRef::regular(2)), Error);
  }
}

}  // namespace gfg
