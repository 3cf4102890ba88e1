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

#include "oracles.hh"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace gfg::testing {

namespace {

// Q_+ as 0..n-1, n = TOP, n+1 = BOT.
std::size_t code(StateRef q, std::size_t n) { return q.is_top() ? n : (q.is_bottom() ? n + 1 : q.index()); }
StateRef decode(std::size_t c, std::size_t n) {
  return c < n ? StateRef::regular(static_cast<StateId>(c)) : (c == n ? StateRef::top() : StateRef::bottom());
}

}  // namespace

bool deterministic_run_accepts(const ParityAutomaton& aut, const std::vector<SymbolId>& prefix,
                               const std::vector<SymbolId>& period) {
  StateRef q = aut.initial();
  for (SymbolId a : prefix) q = aut.successors(q, a).front();
  std::map<std::pair<StateRef, std::size_t>, std::size_t> seen;
  std::vector<unsigned> trace;
  std::size_t i = 0;
  for (;;) {
    auto [it, fresh] = seen.try_emplace({q, i}, trace.size());
    if (!fresh) {
      const unsigned top = *std::max_element(trace.begin() + static_cast<std::ptrdiff_t>(it->second), trace.end());
      return top % 2 == 0;
    }
    trace.push_back(aut.priority(q));
    q = aut.successors(q, period[i]).front();
    i = (i + 1) % period.size();
  }
}

bool naive_lasso_accepts(const ParityAutomaton& aut, const std::vector<SymbolId>& prefix,
                         const std::vector<SymbolId>& period) {
  const std::size_t n = aut.state_count();
  const std::size_t len = prefix.size() + period.size();
  auto letter = [&](std::size_t i) { return i < prefix.size() ? prefix[i] : period[i - prefix.size()]; };
  auto next_pos = [&](std::size_t i) { return i + 1 < len ? i + 1 : prefix.size(); };
  auto id = [&](std::size_t q, std::size_t i) { return q * len + i; };
  const std::size_t nodes = (n + 2) * len;

  std::vector<std::vector<std::size_t>> succ(nodes);
  std::vector<unsigned> pri(nodes);
  for (std::size_t q = 0; q < n + 2; ++q) {
    for (std::size_t i = 0; i < len; ++i) {
      pri[id(q, i)] = aut.priority(decode(q, n));
      for (StateRef r : aut.successors(decode(q, n), letter(i))) succ[id(q, i)].push_back(id(code(r, n), next_pos(i)));
    }
  }

  std::vector<char> reach(nodes, 0);
  std::vector<std::size_t> stack{id(code(aut.initial(), n), 0)};
  reach[stack.back()] = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : succ[v]) {
      if (!reach[w]) {
        reach[w] = 1;
        stack.push_back(w);
      }
    }
  }

  for (std::size_t x = 0; x < nodes; ++x) {
    if (!reach[x] || pri[x] % 2 != 0) continue;
    const unsigned p = pri[x];
    std::vector<char> seen(nodes, 0);
    std::vector<std::size_t> todo;
    for (auto w : succ[x]) {
      if (pri[w] <= p && !seen[w]) {
        seen[w] = 1;
        todo.push_back(w);
      }
    }
    while (!todo.empty()) {
      auto v = todo.back();
      todo.pop_back();
      if (v == x) return true;
      for (auto w : succ[v]) {
        if (pri[w] <= p && !seen[w]) {
          seen[w] = 1;
          todo.push_back(w);
        }
      }
    }
  }
  return false;
}

bool strategy_has_losing_walk(const SimulationArena& arena, const PositionalStrategy& strategy) {
  const std::size_t n = arena.size();
  auto moves = [&](PositionId v) {
    std::vector<PositionId> out;
    if (arena.owner(v) == Player::verifier) {
      out.push_back(*strategy.at(v));
    } else {
      out.assign(arena.successors(v).begin(), arena.successors(v).end());
    }
    return out;
  };

  std::vector<char> reach(n, 0);
  std::vector<PositionId> stack{arena.initial()};
  reach[arena.initial()] = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : moves(v)) {
      if (!reach[w]) {
        reach[w] = 1;
        stack.push_back(w);
      }
    }
  }

  using Triple = std::tuple<PositionId, unsigned, unsigned>;
  for (PositionId v = 0; v < n; ++v) {
    if (!reach[v]) continue;
    std::set<Triple> seen;
    std::vector<Triple> todo;
    for (auto w : moves(v)) {
      Triple t{w, std::max(arena.pri1(v), arena.pri1(w)), std::max(arena.pri2(v), arena.pri2(w))};
      if (seen.insert(t).second) todo.push_back(t);
    }
    while (!todo.empty()) {
      auto [w, m1, m2] = todo.back();
      todo.pop_back();
      if (w == v && m1 % 2 == 0 && m2 % 2 == 1) return true;
      for (auto x : moves(w)) {
        Triple t{x, std::max(m1, arena.pri1(x)), std::max(m2, arena.pri2(x))};
        if (seen.insert(t).second) todo.push_back(t);
      }
    }
  }
  return false;
}

std::optional<ExhaustiveResult> exhaustive_positional(const SimulationArena& arena, std::uint64_t limit) {
  std::vector<PositionId> responses;
  std::uint64_t total = 1;
  for (PositionId v = 0; v < arena.size(); ++v) {
    if (arena.owner(v) != Player::verifier) continue;
    responses.push_back(v);
    total *= arena.successors(v).size();
    if (total > limit) return std::nullopt;
  }
  ExhaustiveResult out;
  std::vector<std::size_t> pick(responses.size(), 0);
  PositionalStrategy s(arena.size());
  for (;;) {
    for (std::size_t i = 0; i < responses.size(); ++i) s.set(responses[i], arena.successors(responses[i])[pick[i]]);
    ++out.strategies;
    if (check_positional_strategy(arena, s)) {
      out.verifier_wins = true;
      return out;
    }
    std::size_t i = 0;
    while (i < responses.size() && ++pick[i] == arena.successors(responses[i]).size()) pick[i++] = 0;
    if (i == responses.size()) return out;
  }
}

namespace {

std::vector<unsigned> priority_values(const SearchSpec& spec) {
  switch (spec.target_kind) {
    case AcceptanceKind::buchi:
      return {1, 2};
    case AcceptanceKind::cobuchi:
      return {2, 3};
    case AcceptanceKind::parity:
      break;
  }
  std::vector<unsigned> out(spec.max_priority + 1);
  std::iota(out.begin(), out.end(), 0U);
  return out;
}

// Targets are encoded as a state bitmask, or -1 (TOP) / -2 (BOT).
std::vector<long> relabel(std::size_t m, std::size_t sigma, std::size_t initial, const std::vector<long>& delta,
                          const std::vector<unsigned>& pri, const std::vector<std::size_t>& perm) {
  std::vector<long> key(1 + m * sigma + m);
  key[0] = static_cast<long>(perm[initial]);
  for (std::size_t q = 0; q < m; ++q) {
    for (std::size_t a = 0; a < sigma; ++a) {
      long t = delta[q * sigma + a];
      if (t > 0) {
        long mapped = 0;
        for (std::size_t r = 0; r < m; ++r) {
          if (t >> r & 1L) mapped |= 1L << perm[r];
        }
        t = mapped;
      }
      key[1 + perm[q] * sigma + a] = t;
    }
    key[1 + m * sigma + perm[q]] = static_cast<long>(pri[q]);
  }
  return key;
}

}  // namespace

std::uint64_t brute_force_class_count(const SearchSpec& spec) {
  const std::size_t sigma = spec.alphabet.size();
  const auto values = priority_values(spec);
  std::uint64_t count = 2;  // TOP- and BOT-initial

  for (std::size_t m = 1; m <= spec.bound; ++m) {
    std::vector<long> options;
    if (spec.deterministic_only) {
      for (std::size_t r = 0; r < m; ++r) options.push_back(1L << r);
    } else {
      for (long mask = 1; mask < (1L << m); ++mask) options.push_back(mask);
    }
    options.push_back(-1);
    options.push_back(-2);

    std::set<std::vector<long>> classes;
    const std::size_t slots = m * sigma;
    std::vector<std::size_t> pick(slots, 0);
    std::vector<long> delta(slots);
    std::vector<std::size_t> perm(m);
    for (;;) {
      for (std::size_t i = 0; i < slots; ++i) delta[i] = options[pick[i]];
      for (std::size_t init = 0; init < m; ++init) {
        // Every state must be reachable from the initial one.
        long seen = 1L << init, frontier = seen;
        while (frontier != 0) {
          long next = 0;
          for (std::size_t q = 0; q < m; ++q) {
            if (!(frontier >> q & 1L)) continue;
            for (std::size_t a = 0; a < sigma; ++a) {
              if (delta[q * sigma + a] > 0) next |= delta[q * sigma + a];
            }
          }
          frontier = next & ~seen;
          seen |= next;
        }
        if (seen != (1L << m) - 1) continue;

        std::vector<std::size_t> pv(m, 0);
        for (;;) {
          std::vector<unsigned> pri(m);
          for (std::size_t q = 0; q < m; ++q) pri[q] = values[pv[q]];
          std::iota(perm.begin(), perm.end(), 0);
          std::vector<long> best;
          do {
            auto key = relabel(m, sigma, init, delta, pri, perm);
            if (best.empty() || key < best) best = std::move(key);
          } while (std::next_permutation(perm.begin(), perm.end()));
          classes.insert(std::move(best));

          std::size_t i = 0;
          while (i < m && ++pv[i] == values.size()) pv[i++] = 0;
          if (i == m) break;
        }
      }
      std::size_t i = 0;
      while (i < slots && ++pick[i] == options.size()) pick[i++] = 0;
      if (i == slots) break;
    }
    count += classes.size();
  }
  return count;
}

std::vector<long> canonical_key(const ParityAutomaton& aut) {
  const std::size_t m = aut.state_count();
  const std::size_t sigma = aut.alphabet().size();
  if (!aut.initial().is_regular()) return {aut.initial().is_top() ? -1L : -2L};
  std::vector<long> delta(m * sigma);
  std::vector<unsigned> pri(m);
  for (StateId q = 0; q < m; ++q) {
    pri[q] = aut.priority(q);
    for (SymbolId a = 0; a < sigma; ++a) {
      const auto& t = aut.transition(q, a);
      if (t.kind() == TransitionTarget::Kind::top) {
        delta[q * sigma + a] = -1;
      } else if (t.kind() == TransitionTarget::Kind::bottom) {
        delta[q * sigma + a] = -2;
      } else {
        long mask = 0;
        for (StateId r : t.state_set()) mask |= 1L << r;
        delta[q * sigma + a] = mask;
      }
    }
  }
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<long> best;
  do {
    auto key = relabel(m, sigma, aut.initial().index(), delta, pri, perm);
    if (best.empty() || key < best) best = std::move(key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace gfg::testing
