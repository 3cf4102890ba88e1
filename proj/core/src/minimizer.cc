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

#include "gfg/minimizer.hh"

#include <algorithm>
#include <deque>
#include <numeric>
#include <thread>

#include "gfg/gfg_check.hh"
#include "gfg/lasso.hh"

namespace gfg {

std::string_view to_string(SizeMeasure m) { return m == SizeMeasure::states ? "states" : "transitions"; }

std::optional<SizeMeasure> parse_size_measure(std::string_view text) {
  if (text == "states") return SizeMeasure::states;
  if (text == "transitions") return SizeMeasure::transitions;
  return std::nullopt;
}

std::size_t measure_of(const ParityAutomaton& aut, SizeMeasure measure) {
  return measure == SizeMeasure::states ? state_count(aut) : transition_table_size(aut);
}

std::string_view to_string(SearchVerdict v) {
  switch (v) {
    case SearchVerdict::found:
      return "FOUND";
    case SearchVerdict::none:
      return "NONE";
    case SearchVerdict::inconclusive:
      break;
  }
  return "INCONCLUSIVE";
}

std::vector<std::string> validate_search_spec(const SearchSpec& spec) {
  std::vector<std::string> out;
  if (spec.alphabet.empty()) out.push_back("alphabet is empty");
  if (!spec.deterministic_only && spec.measure == SizeMeasure::states && spec.bound > 16) {
    out.push_back("nondeterministic search supports at most 16 states");
  }
  if (spec.threads == 0) out.push_back("threads must be positive");
  if (spec.budget.max_seconds < 0) out.push_back("time budget must not be negative");
  return out;
}

namespace {

std::size_t option_count(std::size_t m, bool det) { return det ? m + 2 : (std::size_t{1} << m) + 1; }

TransitionTarget target_of(std::size_t option, std::size_t m, bool det) {
  const std::size_t regular = det ? m : (std::size_t{1} << m) - 1;
  if (option == regular) return TransitionTarget::top();
  if (option == regular + 1) return TransitionTarget::bottom();
  if (det) return TransitionTarget::state(static_cast<StateId>(option));
  std::vector<StateId> states;
  const std::size_t mask = option + 1;
  for (StateId q = 0; q < m; ++q) {
    if (mask >> q & 1U) states.push_back(q);
  }
  return TransitionTarget::states(std::move(states));
}

std::size_t option_of(const TransitionTarget& t, std::size_t m, bool det) {
  const std::size_t regular = det ? m : (std::size_t{1} << m) - 1;
  if (t.kind() == TransitionTarget::Kind::top) return regular;
  if (t.kind() == TransitionTarget::Kind::bottom) return regular + 1;
  if (det) return t.state_set().front();
  std::size_t mask = 0;
  for (StateId q : t.state_set()) mask |= std::size_t{1} << q;
  return mask - 1;
}

// Number of states first seen in `t`, or nullopt if the new states are not
// exactly discovered, discovered + 1, ...
std::optional<std::size_t> newly_discovered(const TransitionTarget& t, std::size_t discovered, std::size_t m) {
  if (t.is_sink()) return 0;
  std::size_t fresh = 0;
  for (StateId q : t.state_set()) {
    if (q >= m) return std::nullopt;
    if (q < discovered) continue;
    if (q != discovered + fresh) return std::nullopt;
    ++fresh;
  }
  return fresh;
}

bool breadth_first_numbered(std::span<const TransitionTarget> slots, std::size_t m, std::size_t sigma) {
  std::size_t discovered = 1;
  for (std::size_t pos = 0; pos < slots.size(); ++pos) {
    if (pos / sigma >= discovered) return false;
    auto fresh = newly_discovered(slots[pos], discovered, m);
    if (!fresh) return false;
    discovered += *fresh;
  }
  return discovered == m;
}

std::vector<TransitionTarget> permute_slots(std::span<const TransitionTarget> slots, const std::vector<std::size_t>& perm,
                                            std::size_t sigma) {
  std::vector<TransitionTarget> out(slots.size());
  for (std::size_t pos = 0; pos < slots.size(); ++pos) {
    const std::size_t q = pos / sigma, a = pos % sigma;
    const auto& t = slots[pos];
    TransitionTarget mapped = t;
    if (!t.is_sink()) {
      std::vector<StateId> states;
      for (StateId s : t.state_set()) states.push_back(static_cast<StateId>(perm[s]));
      mapped = TransitionTarget::states(std::move(states));
    }
    out[perm[q] * sigma + a] = std::move(mapped);
  }
  return out;
}

}  // namespace

CandidateEnumerator::CandidateEnumerator(SearchSpec spec, StructureFilter filter)
    : spec_(std::move(spec)), filter_(std::move(filter)), start_(std::chrono::steady_clock::now()) {
  auto problems = validate_search_spec(spec_);
  if (!problems.empty()) throw Error("invalid search spec: " + problems.front());
  max_states_ = spec_.measure == SizeMeasure::states ? spec_.bound : spec_.bound / spec_.alphabet.size();
}

bool CandidateEnumerator::budget_exhausted() const {
  if (spec_.budget.max_candidates > 0 && emitted_ >= spec_.budget.max_candidates) return true;
  if (spec_.budget.max_seconds > 0) {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
    if (elapsed.count() > spec_.budget.max_seconds) return true;
  }
  return false;
}

std::optional<ParityAutomaton> CandidateEnumerator::next() {
  if (done_ || truncated_) return std::nullopt;
  const bool parity = spec_.target_kind == AcceptanceKind::parity;
  for (;;) {
    if (sink_phase_ < 2) {
      if (budget_exhausted()) {
        truncated_ = true;
        return std::nullopt;
      }
      ParityAutomaton sink(spec_.alphabet, 0, spec_.target_kind);
      sink.set_initial(sink_phase_ == 0 ? StateRef::top() : StateRef::bottom());
      ++sink_phase_;
      ++emitted_;
      return sink;
    }
    if (!have_structure_) {
      if (states_ == 0) {
        states_ = 1;
        level_ = 0;
        structure_started_ = false;
      }
      if (states_ > max_states_) {
        done_ = true;
        return std::nullopt;
      }
      if (!advance_structure()) {
        if (truncated_) return std::nullopt;
        structure_started_ = false;
        if (parity && level_ < spec_.max_priority) {
          ++level_;
        } else {
          ++states_;
          level_ = 0;
        }
        continue;
      }
      have_structure_ = true;
      priorities_started_ = false;
    }
    if (!advance_priorities()) {
      have_structure_ = false;
      continue;
    }
    if (!priorities_are_canonical()) continue;
    if (budget_exhausted()) {
      truncated_ = true;
      return std::nullopt;
    }
    ++emitted_;
    return current();
  }
}

bool CandidateEnumerator::advance_structure() {
  const std::size_t sigma = spec_.alphabet.size();
  const std::size_t m = states_;
  const std::size_t slots = m * sigma;
  const bool det = spec_.deterministic_only;
  const std::size_t options = option_count(m, det);

  std::ptrdiff_t pos;
  if (!structure_started_) {
    structure_started_ = true;
    choice_.assign(slots, -1);
    discovered_.assign(slots + 1, 0);
    discovered_[0] = 1;
    slots_.assign(slots, TransitionTarget());
    pos = 0;
  } else {
    pos = static_cast<std::ptrdiff_t>(slots) - 1;
  }

  std::uint64_t steps = 0;
  while (pos >= 0) {
    if ((++steps & 0xFFF) == 0 && spec_.budget.max_seconds > 0 && budget_exhausted()) {
      truncated_ = true;
      return false;
    }
    const auto p = static_cast<std::size_t>(pos);
    if (p / sigma >= discovered_[p]) {
      // The slot's state is unreachable under this prefix.
      choice_[p] = -1;
      --pos;
      continue;
    }
    if (++choice_[p] >= static_cast<int>(options)) {
      choice_[p] = -1;
      --pos;
      continue;
    }
    auto target = target_of(static_cast<std::size_t>(choice_[p]), m, det);
    auto fresh = newly_discovered(target, discovered_[p], m);
    if (!fresh) continue;
    discovered_[p + 1] = discovered_[p] + *fresh;
    slots_[p] = std::move(target);
    if (filter_ && !filter_(slots_, p + 1, m)) continue;
    if (p + 1 < slots) {
      ++pos;
      choice_[pos] = -1;
      continue;
    }
    if (discovered_[slots] != m) continue;
    if (spec_.measure == SizeMeasure::transitions) {
      std::size_t size = 0;
      for (const auto& t : slots_) size += t.size();
      if (size > spec_.bound) continue;
    }
    if (!structure_is_canonical()) continue;
    return true;
  }
  return false;
}

bool CandidateEnumerator::structure_is_canonical() {
  automorphisms_.clear();
  if (spec_.deterministic_only || states_ <= 1) return true;
  const std::size_t sigma = spec_.alphabet.size();
  const std::size_t m = states_;
  const bool det = false;

  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin() + 1, perm.end())) {
    auto image = permute_slots(slots_, perm, sigma);
    if (!breadth_first_numbered(image, m, sigma)) continue;
    int cmp = 0;
    for (std::size_t pos = 0; pos < image.size() && cmp == 0; ++pos) {
      const auto a = option_of(image[pos], m, det), b = option_of(slots_[pos], m, det);
      cmp = a < b ? -1 : (a > b ? 1 : 0);
    }
    if (cmp < 0) return false;
    if (cmp == 0) automorphisms_.push_back(perm);
  }
  return true;
}

bool CandidateEnumerator::advance_priorities() {
  const std::size_t m = states_;
  std::vector<unsigned> values;
  switch (spec_.target_kind) {
    case AcceptanceKind::buchi:
      values = {1, 2};
      break;
    case AcceptanceKind::cobuchi:
      values = {2, 3};
      break;
    case AcceptanceKind::parity:
      for (unsigned p = 0; p <= level_; ++p) values.push_back(p);
      break;
  }
  const bool parity = spec_.target_kind == AcceptanceKind::parity;
  auto max_matches = [&] {
    return !parity || *std::max_element(priorities_.begin(), priorities_.end()) == level_;
  };

  if (!priorities_started_) {
    priorities_started_ = true;
    priorities_.assign(m, values.front());
    if (max_matches()) return true;
  }
  for (;;) {
    std::size_t i = m;
    while (i > 0) {
      auto it = std::find(values.begin(), values.end(), priorities_[i - 1]);
      if (++it != values.end()) {
        priorities_[i - 1] = *it;
        break;
      }
      priorities_[i - 1] = values.front();
      --i;
    }
    if (i == 0) return false;
    if (max_matches()) return true;
  }
}

bool CandidateEnumerator::priorities_are_canonical() const {
  for (const auto& perm : automorphisms_) {
    std::vector<unsigned> image(priorities_.size());
    for (std::size_t q = 0; q < priorities_.size(); ++q) image[perm[q]] = priorities_[q];
    if (image < priorities_) return false;
  }
  return true;
}

ParityAutomaton CandidateEnumerator::current() const {
  const std::size_t sigma = spec_.alphabet.size();
  ParityAutomaton aut(spec_.alphabet, states_, spec_.target_kind);
  for (std::size_t pos = 0; pos < slots_.size(); ++pos) {
    aut.set_transition(static_cast<StateId>(pos / sigma), static_cast<SymbolId>(pos % sigma), slots_[pos]);
  }
  for (StateId q = 0; q < states_; ++q) aut.set_priority(q, priorities_[q]);
  return aut;
}

std::vector<ParityAutomaton> enumerate_candidates(const SearchSpec& spec, bool* truncated) {
  CandidateEnumerator en(spec);
  std::vector<ParityAutomaton> out;
  while (auto c = en.next()) out.push_back(std::move(*c));
  if (truncated != nullptr) *truncated = en.truncated();
  return out;
}

namespace {

// Prunes deterministic structures that would reach, on some finite word, a
// state whose residual language differs from the reference's residual on the
// same word. Only valid with a deterministic reference.
class ResidualFilter {
 public:
  explicit ResidualFilter(const ParityAutomaton& reference) : ref_(reference), n_(reference.state_count()) {
    std::vector<StateRef> nodes;
    for (StateId q = 0; q < n_; ++q) nodes.push_back(StateRef::regular(q));
    nodes.push_back(StateRef::top());
    nodes.push_back(StateRef::bottom());
    class_.assign(nodes.size(), -1);
    int classes = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const auto from_i = rebase(ref_, nodes[i]);
      for (std::size_t j = 0; j < i && class_[i] < 0; ++j) {
        if (class_[j] >= 0 && gfg_equivalent(from_i, rebase(ref_, nodes[j]))) class_[i] = class_[j];
      }
      if (class_[i] < 0) class_[i] = classes++;
    }
  }

  bool operator()(std::span<const TransitionTarget> slots, std::size_t assigned, std::size_t m) {
    const std::size_t sigma = ref_.alphabet().size();
    std::vector<int> seen(m + 2, -1);
    seen[m] = class_[n_];
    seen[m + 1] = class_[n_ + 1];
    std::vector<char> visited((m + 2) * (n_ + 2), 0);
    std::deque<std::pair<std::size_t, std::size_t>> todo;

    auto visit = [&](std::size_t c, std::size_t r) {
      if (seen[c] < 0) {
        seen[c] = class_[r];
      } else if (seen[c] != class_[r]) {
        return false;
      }
      auto& v = visited[c * (n_ + 2) + r];
      if (!v) {
        v = 1;
        todo.emplace_back(c, r);
      }
      return true;
    };
    auto index_of = [&](StateRef q, std::size_t count) {
      return q.is_top() ? count : (q.is_bottom() ? count + 1 : q.index());
    };

    if (!visit(0, index_of(ref_.initial(), n_))) return reject();
    while (!todo.empty()) {
      const auto [c, r] = todo.front();
      todo.pop_front();
      const StateRef rq = r < n_ ? StateRef::regular(static_cast<StateId>(r))
                                 : (r == n_ ? StateRef::top() : StateRef::bottom());
      for (SymbolId a = 0; a < sigma; ++a) {
        std::size_t next_c = c;
        if (c < m) {
          const std::size_t slot = c * sigma + a;
          if (slot >= assigned) continue;
          next_c = index_of(slots[slot].successors().front(), m);
        }
        const std::size_t next_r = index_of(ref_.successors(rq, a).front(), n_);
        if (!visit(next_c, next_r)) return reject();
      }
    }
    return true;
  }

  std::uint64_t pruned() const { return pruned_; }

 private:
  bool reject() {
    ++pruned_;
    return false;
  }

  const ParityAutomaton& ref_;
  std::size_t n_;
  std::vector<int> class_;
  std::uint64_t pruned_ = 0;
};

struct Sample {
  std::vector<SymbolId> prefix;
  std::vector<SymbolId> period;
  bool accepted;
};

std::vector<Sample> reference_samples(const ParityAutomaton& reference) {
  const auto& sigma = reference.alphabet();
  std::size_t length = 3;
  while (length > 1) {
    std::size_t count = 0, power = 1;
    for (std::size_t l = 1; l <= length; ++l) {
      power *= sigma.size();
      count += l * power;
    }
    if (count <= 2000) break;
    --length;
  }
  std::vector<Sample> out;
  for (const auto& w : all_lassos(sigma, length)) {
    Sample s;
    for (const auto& x : w.prefix) s.prefix.push_back(sigma.at(x));
    for (const auto& x : w.period) s.period.push_back(sigma.at(x));
    s.accepted = accepts_lasso(reference, s.prefix, s.period);
    out.push_back(std::move(s));
  }
  return out;
}

enum class Outcome : std::uint8_t { sample_rejected, game_failed, equivalent };

}  // namespace

SearchResult minimize(const ParityAutomaton& reference, const SearchSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  auto problems = validate_search_spec(spec);
  if (!problems.empty()) throw Error("invalid search spec: " + problems.front());
  if (!(reference.alphabet() == spec.alphabet)) throw Error("reference alphabet differs from the search alphabet");
  require_valid(reference);

  std::optional<ResidualFilter> residual;
  StructureFilter filter;
  if (spec.deterministic_only && is_deterministic(reference)) {
    residual.emplace(reference);
    filter = [&residual](std::span<const TransitionTarget> slots, std::size_t assigned, std::size_t m) {
      return (*residual)(slots, assigned, m);
    };
  }
  const auto samples = reference_samples(reference);

  auto evaluate = [&](const ParityAutomaton& candidate) {
    for (const auto& s : samples) {
      if (accepts_lasso(candidate, s.prefix, s.period) != s.accepted) return Outcome::sample_rejected;
    }
    return gfg_equivalent(candidate, reference) ? Outcome::equivalent : Outcome::game_failed;
  };

  CandidateEnumerator enumerator(spec, filter);
  SearchResult result;
  constexpr std::size_t window = 64;
  const unsigned threads = spec.threads;

  for (;;) {
    std::vector<ParityAutomaton> batch;
    while (batch.size() < window) {
      auto c = enumerator.next();
      if (!c) break;
      batch.push_back(std::move(*c));
    }
    if (batch.empty()) {
      result.verdict = enumerator.truncated() ? SearchVerdict::inconclusive : SearchVerdict::none;
      break;
    }

    std::vector<Outcome> outcomes(batch.size(), Outcome::game_failed);
    std::size_t evaluated = batch.size();
    if (threads <= 1) {
      for (std::size_t i = 0; i < batch.size(); ++i) {
        outcomes[i] = evaluate(batch[i]);
        if (outcomes[i] == Outcome::equivalent) {
          evaluated = i + 1;
          break;
        }
      }
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
          for (std::size_t i = t; i < batch.size(); i += threads) outcomes[i] = evaluate(batch[i]);
        });
      }
      for (auto& th : pool) th.join();
    }

    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i < evaluated; ++i) {
      ++result.stats.candidates;
      if (outcomes[i] == Outcome::sample_rejected) {
        ++result.stats.sample_rejected;
        continue;
      }
      ++result.stats.games;
      if (outcomes[i] == Outcome::equivalent) {
        hit = i;
        break;
      }
    }
    if (hit) {
      result.verdict = SearchVerdict::found;
      result.automaton = std::move(batch[*hit]);
      break;
    }
  }

  if (residual) result.stats.prefixes_pruned = residual->pruned();
  result.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace gfg
