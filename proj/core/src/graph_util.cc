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

#include "gfg/graph_util.hh"

#include <algorithm>
#include <set>

namespace gfg::graph {

Sccs strongly_connected_components(const Adjacency& succ, std::span<const char> active) {
  const std::size_t n = succ.size();
  auto is_active = [&](NodeId v) { return active.empty() || active[v] != 0; };

  Sccs out;
  out.component.assign(n, -1);
  std::vector<std::int32_t> index(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<NodeId> stack;
  std::int32_t next_index = 0;

  struct Frame {
    NodeId node;
    std::size_t edge;
  };
  std::vector<Frame> call;

  for (NodeId root = 0; root < n; ++root) {
    if (!is_active(root) || index[root] >= 0) continue;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;

    while (!call.empty()) {
      auto& frame = call.back();
      const NodeId v = frame.node;
      if (frame.edge < succ[v].size()) {
        const NodeId w = succ[v][frame.edge++];
        if (!is_active(w)) continue;
        if (index[w] < 0) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        const auto c = static_cast<std::int32_t>(out.count++);
        std::size_t size = 0;
        NodeId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          out.component[w] = c;
          ++size;
        } while (w != v);
        bool cyclic = size > 1;
        if (!cyclic) {
          cyclic = std::find(succ[v].begin(), succ[v].end(), v) != succ[v].end();
        }
        out.cyclic.push_back(cyclic);
      }
      call.pop_back();
      if (!call.empty()) {
        const NodeId parent = call.back().node;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
  return out;
}

std::vector<char> reachable(const Adjacency& succ, NodeId start) {
  std::vector<char> seen(succ.size(), 0);
  std::vector<NodeId> todo{start};
  seen[start] = 1;
  while (!todo.empty()) {
    const NodeId v = todo.back();
    todo.pop_back();
    for (NodeId w : succ[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        todo.push_back(w);
      }
    }
  }
  return seen;
}

bool has_even_dominated_cycle(const Adjacency& succ, std::span<const unsigned> priority,
                              NodeId start) {
  const auto reach = reachable(succ, start);
  std::set<unsigned, std::greater<>> evens;
  for (NodeId v = 0; v < succ.size(); ++v) {
    if (reach[v] && priority[v] % 2 == 0) evens.insert(priority[v]);
  }
  std::vector<char> active(succ.size());
  for (unsigned p : evens) {
    for (NodeId v = 0; v < succ.size(); ++v) active[v] = reach[v] && priority[v] <= p;
    const auto sccs = strongly_connected_components(succ, active);
    for (NodeId v = 0; v < succ.size(); ++v) {
      if (active[v] && priority[v] == p && sccs.cyclic[sccs.component[v]]) return true;
    }
  }
  return false;
}

bool has_even_odd_dominated_cycle(const Adjacency& succ, std::span<const unsigned> first,
                                  std::span<const unsigned> second,
                                  std::span<const char> within) {
  const std::size_t n = succ.size();
  std::set<unsigned> evens, odds;
  for (NodeId v = 0; v < n; ++v) {
    if (!within[v]) continue;
    if (first[v] % 2 == 0) evens.insert(first[v]);
    if (second[v] % 2 == 1) odds.insert(second[v]);
  }
  std::vector<char> active(n);
  for (unsigned p1 : evens) {
    for (unsigned p2 : odds) {
      for (NodeId v = 0; v < n; ++v) active[v] = within[v] && first[v] <= p1 && second[v] <= p2;
      const auto sccs = strongly_connected_components(succ, active);
      std::vector<char> hit1(sccs.count, 0), hit2(sccs.count, 0);
      for (NodeId v = 0; v < n; ++v) {
        if (!active[v]) continue;
        const auto c = sccs.component[v];
        if (first[v] == p1) hit1[c] = 1;
        if (second[v] == p2) hit2[c] = 1;
      }
      for (std::size_t c = 0; c < sccs.count; ++c) {
        if (sccs.cyclic[c] && hit1[c] && hit2[c]) return true;
      }
    }
  }
  return false;
}

}  // namespace gfg::graph
