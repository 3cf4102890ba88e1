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

#include <random>

#include "fixtures.hh"
#include "gfg/lasso.hh"
#include "gfg/reduction.hh"
#include "oracles.hh"

namespace gfg {
namespace {

std::vector<SymbolId> ids(const Alphabet& sigma, const std::vector<std::string>& word) {
  std::vector<SymbolId> out;
  for (const auto& s : word) out.push_back(sigma.at(s));
  return out;
}

std::vector<ParityAutomaton> random_deterministic(std::size_t count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<ParityAutomaton> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + rng() % 4;
    ParityAutomaton aut(Alphabet({"a", "b"}), n, AcceptanceKind::parity);
    for (StateId q = 0; q < n; ++q) {
      for (SymbolId a = 0; a < 2; ++a) {
        const auto roll = rng() % (n + 2);
        aut.set_transition(q, a,
                           roll < n ? TransitionTarget::state(static_cast<StateId>(roll))
                                    : (roll == n ? TransitionTarget::top() : TransitionTarget::bottom()));
      }
      aut.set_priority(q, rng() % 5);
    }
    out.push_back(std::move(aut));
  }
  return out;
}

}  // namespace

TEST_SUITE("lasso") {
  TEST_CASE("all_lassos enumerates by length, then prefix length, then letters") {
    const auto ws = all_lassos(Alphabet({"a", "b"}), 2);
    REQUIRE(ws.size() == 10);
    CHECK(to_string(ws[0]) == "; a");
    CHECK(to_string(ws[1]) == "; b");
    CHECK(to_string(ws[2]) == "; a a");
    CHECK(to_string(ws[6]) == "a ; a");
    CHECK(to_string(ws[9]) == "b ; b");
  }

  TEST_CASE("lasso letters repeat the period") {
    LassoWord w{{"x"}, {"a", "b"}};
    CHECK(w.at(0) == "x");
    CHECK(w.at(1) == "a");
    CHECK(w.at(4) == "b");
    CHECK(w.length() == 3);
  }

  TEST_CASE("deterministic acceptance matches a direct run on all lassos up to length 6") {
    for (const auto& aut : random_deterministic(60, 5)) {
      for (const auto& w : all_lassos(aut.alphabet(), 6)) {
        const auto u = ids(aut.alphabet(), w.prefix), v = ids(aut.alphabet(), w.period);
        REQUIRE(accepts_lasso(aut, u, v) == testing::deterministic_run_accepts(aut, u, v));
      }
    }
  }

  TEST_CASE("nondeterministic acceptance matches the naive cycle search") {
    for (const auto& aut : testing::random_automata(120, 3, 17)) {
      for (const auto& w : all_lassos(aut.alphabet(), 5)) {
        const auto u = ids(aut.alphabet(), w.prefix), v = ids(aut.alphabet(), w.period);
        REQUIRE(accepts_lasso(aut, u, v) == testing::naive_lasso_accepts(aut, u, v));
      }
    }
  }

  TEST_CASE("acceptance is invariant under rotation and unrolling of the period") {
    for (const auto& aut : testing::random_automata(40, 3, 23)) {
      for (const auto& w : all_lassos(aut.alphabet(), 4)) {
        const bool expected = accepts_lasso(aut, w);
        LassoWord unrolled{w.prefix, w.period};
        unrolled.period.insert(unrolled.period.end(), w.period.begin(), w.period.end());
        CHECK(accepts_lasso(aut, unrolled) == expected);

        LassoWord shifted{w.prefix, {}};
        shifted.prefix.push_back(w.period.front());
        shifted.period.assign(w.period.begin() + 1, w.period.end());
        shifted.period.push_back(w.period.front());
        CHECK(accepts_lasso(aut, shifted) == expected);

        LassoWord copy{w.prefix, w.period};
        copy.prefix.insert(copy.prefix.end(), w.period.begin(), w.period.end());
        CHECK(accepts_lasso(aut, copy) == expected);
      }
    }
  }

  TEST_CASE("alternating path on the two-vertex construction") {
    const auto g = testing::path_graph(2);
    const auto b = build_cover_automaton(g, VertexCover{{1}}, CoverReading::buchi);
    CHECK(accepts_lasso(b, LassoWord{{}, {"v0", "v1"}}));
    CHECK(accepts_lasso(b, LassoWord{{"♮", "v0"}, {"v0"}}));
    CHECK_FALSE(accepts_lasso(b, LassoWord{{"v1"}, {"v1"}}));
  }

  TEST_CASE("acceptance errors") {
    const auto b = testing::infinitely_many_a();
    CHECK_THROWS_AS(accepts_lasso(b, LassoWord{{}, {"c"}}), Error);
    CHECK_THROWS_AS(accepts_lasso(b, LassoWord{{"a"}, {}}), Error);
  }

  TEST_CASE("emptiness") {
    const auto b = testing::infinitely_many_a();
    CHECK_FALSE(is_empty(b));
    CHECK(is_empty(rebase(b, StateRef::bottom())));
    auto dead = b;
    dead.set_priority(1, 1);
    CHECK(is_empty(dead));
  }
}

}  // namespace gfg
