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
//
// \file
// Explicit digraph helpers shared by lasso acceptance, emptiness and the
// one-player strategy check.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace gfg::graph {

using NodeId = std::uint32_t;
using Adjacency = std::vector<std::vector<NodeId>>;

struct Sccs {
  // -1 for inactive nodes.
  std::vector<std::int32_t> component;
  // cyclic[c]: component c contains at least one edge (a self-loop counts).
  std::vector<bool> cyclic;
  std::size_t count = 0;
};

// Tarjan's algorithm restricted to the subgraph induced by `active`
// (all nodes when `active` is empty).
Sccs strongly_connected_components(const Adjacency& succ, std::span<const char> active = {});

std::vector<char> reachable(const Adjacency& succ, NodeId start);

// Is there a closed walk reachable from `start` whose largest priority is even?
bool has_even_dominated_cycle(const Adjacency& succ, std::span<const unsigned> priority,
                              NodeId start);

// Is there a closed walk inside `within` whose largest first priority is
// even and largest second priority is odd?
bool has_even_odd_dominated_cycle(const Adjacency& succ, std::span<const unsigned> first,
                                  std::span<const unsigned> second,
                                  std::span<const char> within);

}  // namespace gfg::graph
