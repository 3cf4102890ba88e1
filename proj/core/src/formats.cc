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

#include "gfg/formats.hh"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace gfg {

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

// Non-empty, non-comment lines with their 1-based numbers.
std::vector<std::pair<std::size_t, std::vector<std::string>>> tokenize(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto words = split_words(text.substr(start, end - start));
    if (!words.empty() && words.front()[0] != '#') out.emplace_back(number, std::move(words));
    start = end + 1;
  }
  return out;
}

std::size_t parse_number(std::size_t line, const std::string& word) {
  std::size_t value = 0;
  const auto* end = word.data() + word.size();
  auto [ptr, ec] = std::from_chars(word.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParseError(line, "expected a number, got '" + word + "'");
  return value;
}

void expect_arity(std::size_t line, const std::vector<std::string>& words, std::size_t n) {
  if (words.size() != n) {
    throw ParseError(line, "'" + words.front() + "' takes " + std::to_string(n - 1) + " argument(s)");
  }
}

enum class SinkOrState { state, top, bottom };

std::pair<SinkOrState, std::size_t> parse_state_word(std::size_t line, const std::string& word) {
  if (word == "TOP") return {SinkOrState::top, 0};
  if (word == "BOT") return {SinkOrState::bottom, 0};
  return {SinkOrState::state, parse_number(line, word)};
}

}  // namespace

ParityAutomaton parse_automaton(std::string_view text) {
  std::optional<std::vector<std::string>> alphabet;
  std::optional<std::size_t> states;
  std::optional<AcceptanceKind> kind;
  std::optional<std::pair<std::size_t, std::string>> initial;
  std::vector<std::tuple<std::size_t, std::string, std::size_t>> priorities;
  std::vector<std::tuple<std::size_t, std::size_t, std::string, std::vector<std::string>>> transitions;

  auto once = [](std::size_t line, bool seen, const std::string& what) {
    if (seen) throw ParseError(line, "duplicate '" + what + "' declaration");
  };

  for (auto& [line, words] : tokenize(text)) {
    const auto& head = words.front();
    if (head == "alphabet") {
      once(line, alphabet.has_value(), head);
      if (words.size() < 2) throw ParseError(line, "alphabet needs at least one symbol");
      alphabet.emplace(words.begin() + 1, words.end());
    } else if (head == "states") {
      once(line, states.has_value(), head);
      expect_arity(line, words, 2);
      states = parse_number(line, words[1]);
    } else if (head == "kind") {
      once(line, kind.has_value(), head);
      expect_arity(line, words, 2);
      kind = parse_acceptance_kind(words[1]);
      if (!kind) throw ParseError(line, "unknown kind '" + words[1] + "'");
    } else if (head == "initial") {
      once(line, initial.has_value(), head);
      expect_arity(line, words, 2);
      initial.emplace(line, words[1]);
    } else if (head == "priority") {
      expect_arity(line, words, 3);
      priorities.emplace_back(line, words[1], parse_number(line, words[2]));
    } else if (head == "trans") {
      if (words.size() < 4 || words[3] != "->") throw ParseError(line, "expected 'trans q a -> targets'");
      if (words.size() == 4) throw ParseError(line, "transition has an empty target");
      transitions.emplace_back(line, parse_number(line, words[1]), words[2],
                               std::vector<std::string>(words.begin() + 4, words.end()));
    } else {
      throw ParseError(line, "unknown directive '" + head + "'");
    }
  }
  if (!alphabet) throw ParseError(0, "missing 'alphabet' declaration");
  if (!states) throw ParseError(0, "missing 'states' declaration");

  Alphabet sigma(*alphabet);
  if (std::set<std::string>(sigma.symbols().begin(), sigma.symbols().end()).size() != sigma.size()) {
    throw ParseError(0, "alphabet lists a symbol twice");
  }
  ParityAutomaton aut(sigma, *states, kind.value_or(AcceptanceKind::parity));

  if (initial) {
    auto [what, q] = parse_state_word(initial->first, initial->second);
    if (what == SinkOrState::top) {
      aut.set_initial(StateRef::top());
    } else if (what == SinkOrState::bottom) {
      aut.set_initial(StateRef::bottom());
    } else {
      if (q >= *states) throw ParseError(initial->first, "initial state out of range");
      aut.set_initial(StateRef::regular(static_cast<StateId>(q)));
    }
  }

  std::set<std::string> assigned;
  for (const auto& [line, who, p] : priorities) {
    if (!assigned.insert(who).second) throw ParseError(line, "duplicate priority for " + who);
    auto [what, q] = parse_state_word(line, who);
    const auto value = static_cast<unsigned>(p);
    if (what == SinkOrState::top) {
      aut.set_top_priority(value);
    } else if (what == SinkOrState::bottom) {
      aut.set_bottom_priority(value);
    } else {
      if (q >= *states) throw ParseError(line, "priority for state out of range");
      aut.set_priority(static_cast<StateId>(q), value);
    }
  }

  std::set<std::pair<std::size_t, SymbolId>> defined;
  for (const auto& [line, q, symbol, targets] : transitions) {
    if (q >= *states) throw ParseError(line, "source state out of range");
    auto a = sigma.find(symbol);
    if (!a) throw ParseError(line, "symbol '" + symbol + "' is not in the alphabet");
    if (!defined.emplace(q, *a).second) throw ParseError(line, "duplicate transition");
    TransitionTarget target;
    if (targets.size() == 1 && (targets[0] == "TOP" || targets[0] == "BOT")) {
      target = targets[0] == "TOP" ? TransitionTarget::top() : TransitionTarget::bottom();
    } else {
      std::vector<StateId> set;
      for (const auto& t : targets) {
        if (t == "TOP" || t == "BOT") throw ParseError(line, "sinks cannot be mixed with states");
        const auto r = parse_number(line, t);
        if (r >= *states) throw ParseError(line, "target state out of range");
        set.push_back(static_cast<StateId>(r));
      }
      target = TransitionTarget::states(std::move(set));
    }
    aut.set_transition(static_cast<StateId>(q), *a, std::move(target));
  }
  return aut;
}

std::string serialize_automaton(const ParityAutomaton& aut) {
  std::ostringstream out;
  out << "alphabet";
  for (const auto& s : aut.alphabet().symbols()) out << ' ' << s;
  out << "\nstates " << aut.state_count() << "\nkind " << to_string(aut.kind()) << "\ninitial "
      << to_string(aut.initial()) << '\n';
  for (StateId q = 0; q < aut.state_count(); ++q) out << "priority " << q << ' ' << aut.priority(q) << '\n';
  out << "priority TOP " << aut.top_priority() << "\npriority BOT " << aut.bottom_priority() << '\n';
  for (StateId q = 0; q < aut.state_count(); ++q) {
    for (SymbolId a = 0; a < aut.alphabet().size(); ++a) {
      const auto& t = aut.transition(q, a);
      if (t.kind() == TransitionTarget::Kind::states && t.state_set().empty()) continue;
      out << "trans " << q << ' ' << aut.alphabet().name(a) << " ->";
      for (StateRef r : t.successors()) out << ' ' << to_string(r);
      out << '\n';
    }
  }
  return out.str();
}

NiceGraph parse_graph(std::string_view text) {
  std::optional<std::size_t> vertices;
  std::optional<std::size_t> initial;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::size_t> edge_lines;

  for (auto& [line, words] : tokenize(text)) {
    const auto& head = words.front();
    if (head == "vertices") {
      if (vertices) throw ParseError(line, "duplicate 'vertices' declaration");
      expect_arity(line, words, 2);
      vertices = parse_number(line, words[1]);
    } else if (head == "initial") {
      if (initial) throw ParseError(line, "duplicate 'initial' declaration");
      expect_arity(line, words, 2);
      initial = parse_number(line, words[1]);
    } else if (head == "edge") {
      expect_arity(line, words, 3);
      edges.emplace_back(static_cast<Vertex>(parse_number(line, words[1])),
                         static_cast<Vertex>(parse_number(line, words[2])));
    } else {
      throw ParseError(line, "unknown directive '" + head + "'");
    }
  }
  if (!vertices) throw ParseError(0, "missing 'vertices' declaration");
  NiceGraph g(*vertices, std::move(edges), static_cast<Vertex>(initial.value_or(0)));
  auto problems = validate_nice(g);
  if (!problems.empty()) throw Error("graph is not nice: " + problems.front());
  return g;
}

std::string serialize_graph(const NiceGraph& g) {
  std::ostringstream out;
  out << "vertices " << g.vertex_count() << "\ninitial " << g.initial_vertex() << '\n';
  for (const auto& [u, v] : g.edges()) out << "edge " << u << ' ' << v << '\n';
  return out.str();
}

LassoWord parse_lasso(std::string_view text) {
  const auto sep = text.find(';');
  if (sep == std::string_view::npos) throw Error("lasso word needs ';' between prefix and period");
  if (text.find(';', sep + 1) != std::string_view::npos) throw Error("lasso word has more than one ';'");
  LassoWord w{split_words(text.substr(0, sep)), split_words(text.substr(sep + 1))};
  if (w.period.empty()) throw Error("lasso period is empty");
  return w;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << contents;
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace gfg
