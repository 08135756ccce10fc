// Copyright 2026 The bqa-route Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bqa/dag.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <queue>

#include "bqa/error.hpp"

namespace bqa {

GateDag::GateDag(std::size_t node_count, std::vector<Edge> edges)
    : edges_(std::move(edges)), successors_(node_count), predecessors_(node_count) {
  for (const auto& [from, to] : edges_) {
    if (from >= node_count || to >= node_count) {
      throw Error("dag edge references unknown node");
    }
    successors_[from].push_back(to);
    predecessors_[to].push_back(from);
  }
}

std::vector<GateId> GateDag::frontier() const {
  std::vector<GateId> out;
  for (GateId g = 0; g < size(); ++g) {
    if (predecessors_[g].empty()) out.push_back(g);
  }
  return out;
}

GateDag build_dag(const Circuit& c) {
  std::vector<std::optional<GateId>> last_on_qubit(c.width());
  std::vector<GateDag::Edge> edges;
  for (const auto& g : c.gates()) {
    std::optional<GateId> previous;
    for (Qubit q : g.operands()) {
      auto& last = last_on_qubit[q];
      if (last && last != previous) {
        edges.emplace_back(*last, g.id);
        previous = last;
      }
      last = g.id;
    }
  }
  return GateDag(c.size(), std::move(edges));
}

std::vector<GateId> topo_order(const GateDag& dag) {
  std::vector<std::size_t> indegree(dag.size());
  for (GateId g = 0; g < dag.size(); ++g) {
    indegree[g] = dag.predecessors(g).size();
  }
  std::priority_queue<GateId, std::vector<GateId>, std::greater<>> ready;
  for (GateId g : dag.frontier()) ready.push(g);

  std::vector<GateId> order;
  order.reserve(dag.size());
  while (!ready.empty()) {
    GateId g = ready.top();
    ready.pop();
    order.push_back(g);
    for (GateId s : dag.successors(g)) {
      if (--indegree[s] == 0) ready.push(s);
    }
  }
  if (order.size() != dag.size()) {
    throw InternalError("cycle detected in gate dependency graph");
  }
  return order;
}

}  // namespace bqa
