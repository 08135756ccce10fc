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

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bqa/circuit.hpp"

namespace bqa {

/// Dependency graph over the gates of a circuit. Node i is gate id i.
class GateDag {
 public:
  using Edge = std::pair<GateId, GateId>;

  /// Throws Error if an edge references a node >= node_count.
  GateDag(std::size_t node_count, std::vector<Edge> edges);

  std::size_t size() const noexcept { return successors_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<GateId>& successors(GateId g) const { return successors_.at(g); }
  const std::vector<GateId>& predecessors(GateId g) const { return predecessors_.at(g); }

  /// Nodes with zero in-degree, ascending.
  std::vector<GateId> frontier() const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<GateId>> successors_;
  std::vector<std::vector<GateId>> predecessors_;
};

/// One edge per (gate, qubit) from the most recent earlier gate on that qubit.
/// A two-qubit gate whose operands share the same predecessor gets one edge.
GateDag build_dag(const Circuit& c);

/// Kahn's algorithm with the ready set ordered by smallest gate id.
/// Throws InternalError if the graph has a cycle.
std::vector<GateId> topo_order(const GateDag& dag);

}  // namespace bqa
