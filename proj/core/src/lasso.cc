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

#include "gfg/lasso.hh"

#include "gfg/graph_util.hh"

namespace gfg {

const std::string& LassoWord::at(std::size_t i) const {
  if (i < prefix.size()) return prefix[i];
  return period[(i - prefix.size()) % period.size()];
}

std::string to_string(const LassoWord& w) {
  std::string out;
  for (const auto& s : w.prefix) {
    out += s;
    out += ' ';
  }
  out += ';';
  for (const auto& s : w.period) {
    out += ' ';
    out += s;
  }
  return out;
}

namespace {

// Q ∪ {TOP, BOT} numbered 0..n-1, n, n+1.
struct StateNumbering {
  std::size_t n;
  std::size_t size() const { return n + 2; }
  std::size_t of(StateRef q) const {
    if (q.is_top()) return n;
    if (q.is_bottom()) return n + 1;
    return q.index();
  }
};

}  // namespace

bool accepts_lasso(const ParityAutomaton& aut, const std::vector<SymbolId>& prefix,
                   const std::vector<SymbolId>& period) {
  if (period.empty()) throw Error("lasso period must not be empty");
  const std::size_t len = prefix.size() + period.size();
  auto letter = [&](std::size_t i) { return i < prefix.size() ? prefix[i] : period[i - prefix.size()]; };
  auto next = [&](std::size_t i) { return i + 1 < len ? i + 1 : prefix.size(); };

  const StateNumbering num{aut.state_count()};
  const std::size_t nodes = num.size() * len;
  graph::Adjacency succ(nodes);
  std::vector<unsigned> priority(nodes);
  for (std::size_t s = 0; s < num.size(); ++s) {
    StateRef q = s < num.n ? StateRef::regular(static_cast<StateId>(s))
                           : (s == num.n ? StateRef::top() : StateRef::bottom());
    for (std::size_t i = 0; i < len; ++i) {
      const std::size_t v = s * len + i;
      priority[v] = aut.priority(q);
      for (StateRef r : aut.successors(q, letter(i))) {
        succ[v].push_back(static_cast<graph::NodeId>(num.of(r) * len + next(i)));
      }
    }
  }
  const auto start = static_cast<graph::NodeId>(num.of(aut.initial()) * len);
  return graph::has_even_dominated_cycle(succ, priority, start);
}

bool accepts_lasso(const ParityAutomaton& aut, const LassoWord& w) {
  std::vector<SymbolId> prefix, period;
  prefix.reserve(w.prefix.size());
  period.reserve(w.period.size());
  for (const auto& s : w.prefix) prefix.push_back(aut.alphabet().at(s));
  for (const auto& s : w.period) period.push_back(aut.alphabet().at(s));
  return accepts_lasso(aut, prefix, period);
}

bool is_empty(const ParityAutomaton& aut) {
  const StateNumbering num{aut.state_count()};
  graph::Adjacency succ(num.size());
  std::vector<unsigned> priority(num.size());
  for (std::size_t s = 0; s < num.size(); ++s) {
    StateRef q = s < num.n ? StateRef::regular(static_cast<StateId>(s))
                           : (s == num.n ? StateRef::top() : StateRef::bottom());
    priority[s] = aut.priority(q);
    for (SymbolId a = 0; a < aut.alphabet().size(); ++a) {
      for (StateRef r : aut.successors(q, a)) succ[s].push_back(static_cast<graph::NodeId>(num.of(r)));
    }
  }
  return !graph::has_even_dominated_cycle(succ, priority,
                                          static_cast<graph::NodeId>(num.of(aut.initial())));
}

std::vector<LassoWord> all_lassos(const Alphabet& alphabet, std::size_t max_length) {
  std::vector<LassoWord> out;
  const std::size_t k = alphabet.size();
  if (k == 0) return out;
  for (std::size_t len = 1; len <= max_length; ++len) {
    for (std::size_t plen = 0; plen < len; ++plen) {
      std::vector<std::size_t> digits(len, 0);
      for (;;) {
        LassoWord w;
        for (std::size_t i = 0; i < len; ++i) {
          (i < plen ? w.prefix : w.period).push_back(alphabet.name(static_cast<SymbolId>(digits[i])));
        }
        out.push_back(std::move(w));
        std::size_t i = len;
        while (i > 0 && ++digits[i - 1] == k) digits[--i] = 0;
        if (i == 0) break;
      }
    }
  }
  return out;
}

}  // namespace gfg
