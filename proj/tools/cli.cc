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

#include "cli.hh"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>

#include "gfg/automaton.hh"
#include "gfg/formats.hh"
#include "gfg/gfg_check.hh"
#include "gfg/lasso.hh"
#include "gfg/minimizer.hh"
#include "gfg/reduction.hh"
#include "gfg/sim_game.hh"

namespace gfg::cli {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '\\') {
      out += "\\\\";
    } else if (c == '\n') {
      out += "\\n";
    } else {
      out += c;
    }
  }
  return out;
}

std::string unescape(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\') {
      out += s[i];
      continue;
    }
    if (++i >= s.size()) throw Error("dangling escape in report value");
    if (s[i] == 'n') {
      out += '\n';
    } else if (s[i] == '\\') {
      out += '\\';
    } else {
      throw Error(std::string("unknown escape \\") + s[i]);
    }
  }
  return out;
}

// Splits "head rest" at the first space; rest may be empty.
std::pair<std::string, std::string> split_head(const std::string& line) {
  const auto sp = line.find(' ');
  if (sp == std::string::npos) return {line, ""};
  return {line.substr(0, sp), line.substr(sp + 1)};
}

}  // namespace

std::string serialize_report(const RunReport& r) {
  std::ostringstream out;
  out << "report-version 1\n";
  out << "command " << escape(r.command) << '\n';
  for (const auto& [path, sum] : r.inputs) out << "input " << escape(path) << ' ' << sum << '\n';
  out << "verdict " << escape(r.verdict) << '\n';
  for (const auto& [k, v] : r.details) out << "detail " << k << ' ' << escape(v) << '\n';
  for (const auto& w : r.warnings) out << "warning " << escape(w) << '\n';
  return out.str();
}

RunReport parse_report(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "report-version 1") throw Error("missing 'report-version 1' header");
  RunReport r;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto [head, rest] = split_head(line);
    if (head == "command") {
      r.command = unescape(rest);
    } else if (head == "input") {
      const auto sp = rest.rfind(' ');
      if (sp == std::string::npos) throw Error("malformed input line");
      r.inputs.emplace_back(unescape(rest.substr(0, sp)), rest.substr(sp + 1));
    } else if (head == "verdict") {
      r.verdict = unescape(rest);
    } else if (head == "detail") {
      auto [key, value] = split_head(rest);
      r.details.emplace_back(key, unescape(value));
    } else if (head == "warning") {
      r.warnings.push_back(unescape(rest));
    } else {
      throw Error("unknown report line '" + head + "'");
    }
  }
  return r;
}

nlohmann::json report_to_json(const RunReport& r) {
  nlohmann::json j;
  j["report_version"] = 1;
  j["command"] = r.command;
  j["inputs"] = nlohmann::json::array();
  for (const auto& [path, sum] : r.inputs) j["inputs"].push_back({{"path", path}, {"digest", sum}});
  j["verdict"] = r.verdict;
  j["details"] = nlohmann::json::array();
  for (const auto& [k, v] : r.details) j["details"].push_back({{"key", k}, {"value", v}});
  j["warnings"] = r.warnings;
  return j;
}

std::string digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

constexpr const char* trusted_warning =
    "reference is not deterministic: it is trusted to be good-for-games and the verdict is only sound if it is";

struct Context {
  RunReport report;
  std::ostream& err;

  std::string load(const std::string& path) {
    auto text = read_file(path);
    report.inputs.emplace_back(path, digest(text));
    return text;
  }
  ParityAutomaton automaton(const std::string& path) { return parse_automaton(load(path)); }
  NiceGraph graph(const std::string& path) { return parse_graph(load(path)); }
  void detail(std::string key, std::string value) { report.details.emplace_back(std::move(key), std::move(value)); }
  void warn(std::string text) {
    err << "warning: " << text << '\n';
    report.warnings.push_back(std::move(text));
  }
  void warn_if_untrusted(const ParityAutomaton& reference) {
    if (!is_deterministic(reference)) warn(trusted_warning);
  }
};

std::string join_states(const std::set<StateRef>& states) {
  std::string out;
  for (StateRef q : states) {
    if (!out.empty()) out += ',';
    out += to_string(q);
  }
  return out.empty() ? "-" : out;
}

VertexCover parse_cover(const std::string& text, const NiceGraph& g) {
  VertexCover c;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty() && item[0] == 'v') item.erase(0, 1);
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (item.empty() || pos != item.size()) throw Error("malformed cover entry '" + item + "'");
    if (v >= g.vertex_count()) throw Error("cover vertex v" + std::to_string(v) + " out of range");
    c.vertices.insert(static_cast<Vertex>(v));
  }
  return c;
}

std::string dump_strategy_text(const SimulationArena& arena, const PositionalStrategy& s) {
  return dump_strategy(arena, s);
}

int verdict(Context& ctx, bool affirmative, const char* yes, const char* no) {
  ctx.report.verdict = affirmative ? yes : no;
  return affirmative ? exit_affirmative : exit_negative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Good-for-games parity automata toolkit", "gfg"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit the report as JSON");

  std::string aut_path, graph_path, word, sub_path, super_path, cand_path, ref_path, p1_path, p2_path, out_path;
  std::string cover_text = "auto", kind_text = "buchi", mode_text = "characteristic", measure_text = "states";
  bool dump_strategy = false, dump_arena = false, det_only = false;
  std::size_t k = 1;
  std::uint64_t max_candidates = 0;
  double seconds = 0;
  unsigned max_priority = 3, threads = 1;

  auto* validate_cmd = app.add_subcommand("validate", "Check automaton invariants");
  validate_cmd->add_option("--aut", aut_path)->required();

  auto* accepts_cmd = app.add_subcommand("accepts", "Decide acceptance of a lasso word");
  accepts_cmd->add_option("--aut", aut_path)->required();
  accepts_cmd->add_option("--word", word, "\"u ; v\"")->required();

  auto* include_cmd = app.add_subcommand("include", "Decide L(sub) ⊆ L(super) for a good-for-games super");
  include_cmd->add_option("--sub", sub_path)->required();
  include_cmd->add_option("--super", super_path)->required();
  include_cmd->add_flag("--strategy", dump_strategy, "Dump the verifier strategy");

  auto* equiv_cmd = app.add_subcommand("gfg-equiv", "Decide language equivalence against a good-for-games reference");
  equiv_cmd->add_option("--candidate", cand_path)->required();
  equiv_cmd->add_option("--reference", ref_path)->required();
  equiv_cmd->add_flag("--strategy", dump_strategy, "Dump the verifier strategies");

  auto* gen_cmd = app.add_subcommand("gen-reduction", "Build the cover automaton of a graph");
  gen_cmd->add_option("--graph", graph_path)->required();
  gen_cmd->add_option("--cover", cover_text, "auto or a list such as v1,v3");
  gen_cmd->add_option("--kind", kind_text)->check(CLI::IsMember({"buchi", "cobuchi"}));
  gen_cmd->add_option("--out", out_path);

  auto* classify_cmd = app.add_subcommand("classify", "List v-states and #v-states");
  classify_cmd->add_option("--aut", aut_path)->required();
  classify_cmd->add_option("--graph", graph_path)->required();

  auto* extract_cmd = app.add_subcommand("extract-cover", "Read a vertex cover off an automaton");
  extract_cmd->add_option("--aut", aut_path)->required();
  extract_cmd->add_option("--graph", graph_path)->required();

  auto* structure_cmd = app.add_subcommand("check-structure", "Check the six core-structure properties");
  structure_cmd->add_option("--aut", aut_path)->required();
  structure_cmd->add_option("--graph", graph_path)->required();
  structure_cmd->add_option("--mode", mode_text)->check(CLI::IsMember({"characteristic", "adjusted"}));

  auto* min_vc_cmd = app.add_subcommand("min-vc", "Minimum vertex cover by brute force");
  min_vc_cmd->add_option("--graph", graph_path)->required();

  auto* search_cmd = app.add_subcommand("min-search", "Search for an equivalent automaton within a size bound");
  search_cmd->add_option("--ref", ref_path)->required();
  search_cmd->add_option("--kind", kind_text)->check(CLI::IsMember({"buchi", "cobuchi", "parity"}));
  search_cmd->add_option("--measure", measure_text)->check(CLI::IsMember({"states", "transitions"}));
  search_cmd->add_option("--k", k)->required();
  search_cmd->add_flag("--deterministic-only", det_only);
  search_cmd->add_option("--max-candidates", max_candidates);
  search_cmd->add_option("--seconds", seconds);
  search_cmd->add_option("--max-priority", max_priority);
  search_cmd->add_option("--threads", threads)->check(CLI::PositiveNumber);
  search_cmd->add_option("--out", out_path);

  auto* solve_cmd = app.add_subcommand("solve-sim", "Solve the simulation game of p2 simulating p1");
  solve_cmd->add_option("--p1", p1_path)->required();
  solve_cmd->add_option("--p2", p2_path)->required();
  solve_cmd->add_flag("--dump-arena", dump_arena);
  solve_cmd->add_flag("--strategy", dump_strategy);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_affirmative;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return exit_error;
  }

  CLI::App* chosen = app.get_subcommands().front();
  Context ctx{RunReport{}, err};
  ctx.report.command = chosen->get_name();
  int code = exit_error;

  try {
    if (chosen == validate_cmd) {
      auto aut = ctx.automaton(aut_path);
      auto problems = validate(aut);
      for (const auto& d : problems) ctx.detail("diagnostic", to_string(d));
      code = verdict(ctx, problems.empty(), "VALID", "INVALID");
      if (problems.empty()) ctx.detail("deterministic", is_deterministic(aut) ? "yes" : "no");
    } else if (chosen == accepts_cmd) {
      auto aut = ctx.automaton(aut_path);
      require_valid(aut);
      auto w = parse_lasso(word);
      ctx.detail("word", to_string(w));
      code = verdict(ctx, accepts_lasso(aut, w), "ACCEPT", "REJECT");
    } else if (chosen == include_cmd) {
      auto sub = ctx.automaton(sub_path);
      auto super = ctx.automaton(super_path);
      require_valid(sub);
      require_valid(super);
      ctx.warn_if_untrusted(super);
      auto game = play_simulation(sub, super);
      ctx.detail("arena_positions", std::to_string(game.arena.size()));
      if (dump_strategy) ctx.detail("strategy", dump_strategy_text(game.arena, game.result.strategy));
      code = verdict(ctx, game.result.verifier_wins, "INCLUDED", "NOT_INCLUDED");
    } else if (chosen == equiv_cmd) {
      auto cand = ctx.automaton(cand_path);
      auto ref = ctx.automaton(ref_path);
      require_valid(cand);
      require_valid(ref);
      ctx.warn_if_untrusted(ref);
      auto forward = play_simulation(cand, ref);
      bool equal = forward.result.verifier_wins;
      ctx.detail("candidate_in_reference", equal ? "yes" : "no");
      if (dump_strategy) ctx.detail("strategy_candidate_in_reference", dump_strategy_text(forward.arena, forward.result.strategy));
      if (equal) {
        if (!is_deterministic(cand)) ctx.warn("candidate is not deterministic: it is trusted to be good-for-games for the reverse inclusion");
        auto backward = play_simulation(ref, cand);
        equal = backward.result.verifier_wins;
        ctx.detail("reference_in_candidate", equal ? "yes" : "no");
        if (dump_strategy) ctx.detail("strategy_reference_in_candidate", dump_strategy_text(backward.arena, backward.result.strategy));
      }
      code = verdict(ctx, equal, "EQUIVALENT", "NOT_EQUIVALENT");
    } else if (chosen == gen_cmd) {
      auto g = ctx.graph(graph_path);
      VertexCover c = cover_text == "auto" ? min_vertex_cover_bruteforce(g) : parse_cover(cover_text, g);
      auto aut = build_cover_automaton(g, c, kind_text == "buchi" ? CoverReading::buchi : CoverReading::cobuchi);
      auto text = serialize_automaton(aut);
      ctx.detail("cover", to_string(c));
      ctx.detail("states", std::to_string(aut.state_count()));
      if (out_path.empty()) {
        ctx.detail("automaton", text);
      } else {
        write_file(out_path, text);
        ctx.detail("written", out_path);
      }
      ctx.report.verdict = "GENERATED";
      code = exit_affirmative;
    } else if (chosen == classify_cmd) {
      auto aut = ctx.automaton(aut_path);
      auto g = ctx.graph(graph_path);
      require_valid(aut);
      auto cls = classify_states(aut, g);
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        ctx.detail(NiceGraph::vertex_name(v) + "-states", join_states(cls.vertex_states[v]));
        ctx.detail("#" + NiceGraph::vertex_name(v) + "-states", join_states(cls.natural_states[v]));
      }
      ctx.report.verdict = "CLASSIFIED";
      code = exit_affirmative;
    } else if (chosen == extract_cmd) {
      auto aut = ctx.automaton(aut_path);
      auto g = ctx.graph(graph_path);
      require_valid(aut);
      auto c = extract_cover(aut, g);
      ctx.detail("cover", to_string(c));
      ctx.detail("size", std::to_string(c.size()));
      code = verdict(ctx, is_vertex_cover(g, c), "COVER", "NOT_A_COVER");
    } else if (chosen == structure_cmd) {
      auto aut = ctx.automaton(aut_path);
      auto g = ctx.graph(graph_path);
      require_valid(aut);
      auto r = check_core_structure(aut, g, mode_text == "characteristic" ? LanguageMode::characteristic
                                                                           : LanguageMode::adjusted);
      for (std::size_t i = 0; i < r.items.size(); ++i) {
        ctx.detail("item" + std::to_string(i + 1), r.items[i] ? "holds" : "fails");
      }
      for (const auto& note : r.notes) ctx.detail("note", note);
      code = verdict(ctx, r.all_hold(), "PASS", "FAIL");
    } else if (chosen == min_vc_cmd) {
      auto g = ctx.graph(graph_path);
      auto c = min_vertex_cover_bruteforce(g);
      ctx.detail("cover", to_string(c));
      ctx.detail("size", std::to_string(c.size()));
      ctx.report.verdict = "MIN_COVER";
      code = exit_affirmative;
    } else if (chosen == search_cmd) {
      auto ref = ctx.automaton(ref_path);
      require_valid(ref);
      ctx.warn_if_untrusted(ref);
      SearchSpec spec;
      spec.alphabet = ref.alphabet();
      spec.target_kind = *parse_acceptance_kind(kind_text);
      spec.measure = *parse_size_measure(measure_text);
      spec.bound = k;
      spec.max_priority = max_priority;
      spec.deterministic_only = det_only;
      spec.budget = {max_candidates, seconds};
      spec.threads = threads;
      auto result = minimize(ref, spec);
      ctx.detail("candidates", std::to_string(result.stats.candidates));
      ctx.detail("sample_rejected", std::to_string(result.stats.sample_rejected));
      ctx.detail("games", std::to_string(result.stats.games));
      ctx.detail("prefixes_pruned", std::to_string(result.stats.prefixes_pruned));
      if (seconds > 0) ctx.detail("seconds", std::to_string(result.stats.seconds));
      if (result.automaton) {
        auto text = serialize_automaton(*result.automaton);
        ctx.detail("size", std::to_string(measure_of(*result.automaton, spec.measure)));
        if (out_path.empty()) {
          ctx.detail("automaton", text);
        } else {
          write_file(out_path, text);
          ctx.detail("written", out_path);
        }
      }
      ctx.report.verdict = std::string(to_string(result.verdict));
      code = result.verdict == SearchVerdict::found  ? exit_affirmative
             : result.verdict == SearchVerdict::none ? exit_negative
                                                     : exit_error;
    } else if (chosen == solve_cmd) {
      auto p1 = ctx.automaton(p1_path);
      auto p2 = ctx.automaton(p2_path);
      require_valid(p1);
      require_valid(p2);
      auto game = play_simulation(p1, p2);
      ctx.detail("arena_positions", std::to_string(game.arena.size()));
      ctx.detail("response_positions", std::to_string(game.arena.response_count()));
      if (dump_arena) ctx.detail("arena", gfg::dump_arena(game.arena));
      if (dump_strategy) ctx.detail("strategy", dump_strategy_text(game.arena, game.result.strategy));
      code = verdict(ctx, game.result.verifier_wins, "VERIFIER_WINS", "SPOILER_WINS");
    }
  } catch (const std::exception& e) {
    ctx.report.verdict = "ERROR";
    ctx.detail("error", e.what());
    err << "error: " << e.what() << '\n';
    code = exit_error;
  }

  if (json) {
    out << report_to_json(ctx.report).dump(2) << '\n';
  } else {
    out << serialize_report(ctx.report);
  }
  return code;
}

}  // namespace gfg::cli
