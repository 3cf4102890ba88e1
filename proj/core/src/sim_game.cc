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

#include "gfg/sim_game.hh"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "gfg/graph_util.hh"

namespace gfg {

SimulationArena::SimulationArena(Alphabet alphabet, std::vector<Position> positions,
                                 std::vector<std::vector<PositionId>> successors,
                                 std::vector<unsigned> pri1, std::vector<unsigned> pri2)
    : alphabet_(std::move(alphabet)),
      positions_(std::move(positions)),
      successors_(std::move(successors)),
      pri1_(std::move(pri1)),
      pri2_(std::move(pri2)) {
  const std::size_t n = positions_.size();
  if (n == 0) throw Error("arena has no positions");
  if (successors_.size() != n || pri1_.size() != n || pri2_.size() != n) {
    throw Error("arena vectors disagree in size");
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (successors_[v].empty()) throw Error("arena position " + std::to_string(v) + " has no successor");
    for (PositionId w : successors_[v]) {
      if (w >= n) throw Error("arena edge " + std::to_string(v) + " -> " + std::to_string(w) + " out of range");
    }
  }
}

std::size_t SimulationArena::response_count() const {
  return static_cast<std::size_t>(std::count_if(positions_.begin(), positions_.end(), [](const Position& p) {
    return p.kind == Position::Kind::response;
  }));
}

namespace {

struct PositionKey {
  Position::Kind kind;
  StateRef q1;
  SymbolId letter;
  StateRef q2;

  auto operator<=>(const PositionKey&) const = default;
};

PositionKey key_of(const Position& p) { return {p.kind, p.q1, p.letter, p.q2}; }

}  // namespace

SimulationArena build_arena(const ParityAutomaton& p1, const ParityAutomaton& p2) {
  if (!(p1.alphabet() == p2.alphabet())) throw Error("simulation game needs equal alphabets");
  const auto& sigma = p1.alphabet();

  std::vector<Position> positions;
  std::vector<std::vector<PositionId>> succ;
  std::vector<unsigned> pri1, pri2;
  std::map<PositionKey, PositionId> index;
  std::deque<PositionId> todo;

  auto intern = [&](const Position& p) {
    auto [it, inserted] = index.try_emplace(key_of(p), static_cast<PositionId>(positions.size()));
    if (inserted) {
      positions.push_back(p);
      succ.emplace_back();
      pri1.push_back(p1.priority(p.q1));
      pri2.push_back(p2.priority(p.q2));
      todo.push_back(it->second);
    }
    return it->second;
  };

  intern({Position::Kind::choice, p1.initial(), 0, p2.initial()});
  while (!todo.empty()) {
    const PositionId id = todo.front();
    todo.pop_front();
    const Position here = positions[id];
    std::vector<PositionId> out;
    if (here.kind == Position::Kind::choice) {
      for (SymbolId a = 0; a < sigma.size(); ++a) {
        for (StateRef r1 : p1.successors(here.q1, a)) {
          out.push_back(intern({Position::Kind::response, r1, a, here.q2}));
        }
      }
    } else {
      for (StateRef r2 : p2.successors(here.q2, here.letter)) {
        out.push_back(intern({Position::Kind::choice, here.q1, 0, r2}));
      }
    }
    succ[id] = std::move(out);
  }
  return SimulationArena(sigma, std::move(positions), std::move(succ), std::move(pri1), std::move(pri2));
}

namespace {

constexpr std::int32_t no_choice = -1;

using Colour = std::pair<unsigned, unsigned>;

// Verifier's objective on the set of colours seen infinitely often.
bool verifier_wins_colours(const std::set<Colour>& colours) {
  unsigned m1 = 0, m2 = 0;
  for (const auto& [x, y] : colours) {
    m1 = std::max(m1, x);
    m2 = std::max(m2, y);
  }
  return m1 % 2 == 1 || m2 % 2 == 0;
}

struct SubResult {
  std::vector<char> verifier;
  std::vector<std::int32_t> strategy;
};

// McNaughton-Zielonka recursion over colour sets. Colour sets losing for the
// verifier (both maxima "bad") are closed under union, so every verifier node
// of the Zielonka tree has a single child and the verifier's strategies built
// from attractors and sub-solutions stay memoryless.
class Solver {
 public:
  explicit Solver(const SimulationArena& arena) : arena_(arena), n_(arena.size()), pred_(n_) {
    for (PositionId v = 0; v < n_; ++v) {
      for (PositionId w : arena.successors(v)) pred_[w].push_back(v);
    }
  }

  SubResult solve(std::vector<char> game) {
    SubResult out{std::vector<char>(n_, 0), std::vector<std::int32_t>(n_, no_choice)};
    for (;;) {
      if (std::none_of(game.begin(), game.end(), [](char c) { return c != 0; })) return out;

      std::set<Colour> colours;
      for (PositionId v = 0; v < n_; ++v) {
        if (game[v]) colours.insert(colour(v));
      }

      if (verifier_wins_colours(colours)) {
        const auto losing = maximal_losing_subset(colours);
        std::vector<char> target(n_, 0);
        for (PositionId v = 0; v < n_; ++v) target[v] = game[v] && !losing.contains(colour(v));

        std::vector<std::int32_t> attr_strategy(n_, no_choice);
        const auto attr = attractor(game, target, Player::verifier, &attr_strategy);
        std::vector<char> rest(n_, 0);
        for (PositionId v = 0; v < n_; ++v) rest[v] = game[v] && !attr[v];
        auto sub = solve(rest);

        std::vector<char> spoiler_sub(n_, 0);
        bool spoiler_nonempty = false;
        for (PositionId v = 0; v < n_; ++v) {
          spoiler_sub[v] = rest[v] && !sub.verifier[v];
          spoiler_nonempty |= spoiler_sub[v] != 0;
        }
        if (!spoiler_nonempty) {
          for (PositionId v = 0; v < n_; ++v) {
            if (!game[v]) continue;
            out.verifier[v] = 1;
            if (arena_.owner(v) != Player::verifier) continue;
            if (rest[v]) {
              out.strategy[v] = sub.strategy[v];
            } else if (target[v]) {
              out.strategy[v] = first_successor_in(v, game);
            } else {
              out.strategy[v] = attr_strategy[v];
            }
          }
          return out;
        }
        const auto spoiler_attr = attractor(game, spoiler_sub, Player::spoiler, nullptr);
        for (PositionId v = 0; v < n_; ++v) game[v] = game[v] && !spoiler_attr[v];
        continue;
      }

      bool removed = false;
      for (const auto& keep : maximal_winning_subsets(colours)) {
        std::vector<char> target(n_, 0);
        for (PositionId v = 0; v < n_; ++v) target[v] = game[v] && !keep.contains(colour(v));
        const auto spoiler_attr = attractor(game, target, Player::spoiler, nullptr);
        std::vector<char> rest(n_, 0);
        for (PositionId v = 0; v < n_; ++v) rest[v] = game[v] && !spoiler_attr[v];
        auto sub = solve(rest);
        if (std::none_of(sub.verifier.begin(), sub.verifier.end(), [](char c) { return c != 0; })) {
          continue;
        }
        std::vector<std::int32_t> attr_strategy(n_, no_choice);
        const auto won = attractor(game, sub.verifier, Player::verifier, &attr_strategy);
        for (PositionId v = 0; v < n_; ++v) {
          if (!won[v]) continue;
          out.verifier[v] = 1;
          if (arena_.owner(v) == Player::verifier) {
            out.strategy[v] = sub.verifier[v] ? sub.strategy[v] : attr_strategy[v];
          }
          game[v] = 0;
        }
        removed = true;
        break;
      }
      if (!removed) return out;  // spoiler wins the remaining game
    }
  }

 private:
  Colour colour(PositionId v) const { return {arena_.pri1(v), arena_.pri2(v)}; }

  // Union of all colour subsets on which the verifier loses, i.e. whose
  // largest pri1 is even and largest pri2 is odd.
  static std::set<Colour> maximal_losing_subset(const std::set<Colour>& colours) {
    std::set<unsigned> xs, ys;
    for (const auto& [x, y] : colours) {
      xs.insert(x);
      ys.insert(y);
    }
    std::set<Colour> out;
    for (unsigned a : xs) {
      if (a % 2 != 0) continue;
      for (unsigned b : ys) {
        if (b % 2 != 1) continue;
        std::set<Colour> bounded;
        for (const auto& c : colours) {
          if (c.first <= a && c.second <= b) bounded.insert(c);
        }
        if (!bounded.empty() && !verifier_wins_colours(bounded)) out.insert(bounded.begin(), bounded.end());
      }
    }
    return out;
  }

  // Maximal verifier-winning subsets of a losing colour set: everything up to
  // the largest odd pri1, and everything up to the largest even pri2.
  static std::vector<std::set<Colour>> maximal_winning_subsets(const std::set<Colour>& colours) {
    std::optional<unsigned> odd1, even2;
    for (const auto& [x, y] : colours) {
      if (x % 2 == 1 && (!odd1 || x > *odd1)) odd1 = x;
      if (y % 2 == 0 && (!even2 || y > *even2)) even2 = y;
    }
    std::vector<std::set<Colour>> out;
    if (odd1) {
      std::set<Colour> s;
      for (const auto& c : colours) {
        if (c.first <= *odd1) s.insert(c);
      }
      out.push_back(std::move(s));
    }
    if (even2) {
      std::set<Colour> s;
      for (const auto& c : colours) {
        if (c.second <= *even2) s.insert(c);
      }
      out.push_back(std::move(s));
    }
    return out;
  }

  std::int32_t first_successor_in(PositionId v, const std::vector<char>& set) const {
    for (PositionId w : arena_.successors(v)) {
      if (set[w]) return static_cast<std::int32_t>(w);
    }
    return no_choice;
  }

  // Positions of `game` from which `player` forces a visit to `target`. For
  // the verifier, `strategy` receives the smallest successor of strictly
  // earlier attraction order.
  std::vector<char> attractor(const std::vector<char>& game, const std::vector<char>& target, Player player,
                              std::vector<std::int32_t>* strategy) const {
    std::vector<char> in(n_, 0);
    std::vector<std::size_t> order(n_, 0);
    std::vector<std::size_t> remaining(n_, 0);
    std::deque<PositionId> queue;
    std::size_t clock = 0;

    for (PositionId v = 0; v < n_; ++v) {
      if (!game[v]) continue;
      for (PositionId w : arena_.successors(v)) remaining[v] += game[w] ? 1 : 0;
      if (target[v]) {
        in[v] = 1;
        order[v] = clock++;
        queue.push_back(v);
      }
    }
    while (!queue.empty()) {
      const PositionId w = queue.front();
      queue.pop_front();
      for (PositionId v : pred_[w]) {
        if (!game[v] || in[v]) continue;
        if (arena_.owner(v) == player || --remaining[v] == 0) {
          in[v] = 1;
          order[v] = clock++;
          queue.push_back(v);
        }
      }
    }
    if (strategy != nullptr && player == Player::verifier) {
      for (PositionId v = 0; v < n_; ++v) {
        if (!in[v] || target[v] || arena_.owner(v) != Player::verifier) continue;
        for (PositionId w : arena_.successors(v)) {
          if (game[w] && in[w] && order[w] < order[v]) {
            (*strategy)[v] = static_cast<std::int32_t>(w);
            break;
          }
        }
      }
    }
    return in;
  }

  const SimulationArena& arena_;
  std::size_t n_;
  graph::Adjacency pred_;
};

}  // namespace

SolveResult solve_verifier(const SimulationArena& arena) {
  Solver solver(arena);
  auto sub = solver.solve(std::vector<char>(arena.size(), 1));

  SolveResult out;
  out.verifier_wins = sub.verifier[arena.initial()] != 0;
  out.strategy = PositionalStrategy(arena.size());
  for (PositionId v = 0; v < arena.size(); ++v) {
    if (arena.owner(v) != Player::verifier) continue;
    if (sub.verifier[v] && sub.strategy[v] != no_choice) {
      out.strategy.set(v, static_cast<PositionId>(sub.strategy[v]));
    } else {
      out.strategy.set(v, arena.successors(v).front());
    }
  }
  out.verifier_region = std::move(sub.verifier);
  return out;
}

bool check_positional_strategy(const SimulationArena& arena, const PositionalStrategy& strategy) {
  const std::size_t n = arena.size();
  if (strategy.size() != n) throw Error("strategy size does not match the arena");

  // Verify totality and legality on the arena-reachable part first.
  const auto reach_all = graph::reachable(arena.successor_lists(), arena.initial());
  for (PositionId v = 0; v < n; ++v) {
    if (!reach_all[v] || arena.owner(v) != Player::verifier) continue;
    const auto choice = strategy.at(v);
    if (!choice) throw Error("strategy undefined at response position " + std::to_string(v));
    const auto succ = arena.successors(v);
    if (std::find(succ.begin(), succ.end(), *choice) == succ.end()) {
      throw Error("strategy picks non-successor " + std::to_string(*choice) + " at position " +
                  std::to_string(v));
    }
  }

  graph::Adjacency restricted(n);
  for (PositionId v = 0; v < n; ++v) {
    if (arena.owner(v) == Player::verifier) {
      if (reach_all[v]) restricted[v] = {*strategy.at(v)};
    } else {
      restricted[v].assign(arena.successors(v).begin(), arena.successors(v).end());
    }
  }
  const auto reach = graph::reachable(restricted, arena.initial());
  return !graph::has_even_odd_dominated_cycle(restricted, arena.pri1(), arena.pri2(), reach);
}

namespace {

std::string letter_name(const SimulationArena& arena, SymbolId a) {
  if (a < arena.alphabet().size()) return arena.alphabet().name(a);
  return std::to_string(a);
}

}  // namespace

std::string dump_arena(const SimulationArena& arena) {
  std::ostringstream out;
  for (PositionId v = 0; v < arena.size(); ++v) {
    const auto& p = arena.position(v);
    out << "POS " << v << ' ';
    if (p.kind == Position::Kind::choice) {
      out << "choice " << to_string(p.q1) << ' ' << to_string(p.q2);
    } else {
      out << "response " << to_string(p.q1) << ' ' << letter_name(arena, p.letter) << ' ' << to_string(p.q2);
    }
    out << ' ' << arena.pri1(v) << ' ' << arena.pri2(v) << '\n';
  }
  for (PositionId v = 0; v < arena.size(); ++v) {
    for (PositionId w : arena.successors(v)) out << "EDGE " << v << ' ' << w << '\n';
  }
  return out.str();
}

std::string dump_strategy(const SimulationArena& arena, const PositionalStrategy& strategy) {
  std::ostringstream out;
  for (PositionId v = 0; v < arena.size() && v < strategy.size(); ++v) {
    if (arena.owner(v) != Player::verifier) continue;
    if (auto c = strategy.at(v)) out << "CHOOSE " << v << ' ' << *c << '\n';
  }
  return out.str();
}

}  // namespace gfg
