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

#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <queue>

namespace bqa::oracle {

std::vector<std::vector<int>> floyd_warshall(std::size_t n, const std::vector<Edge>& edges) {
  constexpr int inf = std::numeric_limits<int>::max() / 4;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& e : edges) {
    d[e.a][e.b] = 1;
    d[e.b][e.a] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (auto& v : row)
      if (v >= inf) v = -1;
  return d;
}

std::vector<std::vector<Qubit>> all_shortest_paths(std::size_t n, const std::vector<Edge>& edges,
                                                   Qubit a, Qubit b) {
  std::vector<std::vector<Qubit>> adj(n);
  for (const auto& e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::vector<std::vector<Qubit>> best;
  std::size_t best_len = std::numeric_limits<std::size_t>::max();
  std::vector<Qubit> path{a};
  std::vector<bool> on_path(n, false);
  on_path[a] = true;
  std::function<void(Qubit)> dfs = [&](Qubit u) {
    if (path.size() > best_len) return;
    if (u == b) {
      if (path.size() < best_len) {
        best_len = path.size();
        best.clear();
      }
      best.push_back(path);
      return;
    }
    for (Qubit v : adj[u]) {
      if (on_path[v]) continue;
      on_path[v] = true;
      path.push_back(v);
      dfs(v);
      path.pop_back();
      on_path[v] = false;
    }
  };
  dfs(a);
  return best;
}

namespace {

double duration_of(const Gate& g, const DurationTable& dur) {
  if (!g.is_two_qubit()) return dur.single_us(g.qubits[0]);
  return g.label == "swap" ? dur.swap_us(g.qubits[0], g.qubits[1])
                           : dur.cnot_us(g.qubits[0], g.qubits[1]);
}

std::vector<std::vector<GateId>> per_qubit_queues(const Circuit& c) {
  std::vector<std::vector<GateId>> q(c.width());
  for (const auto& g : c.gates())
    for (Qubit x : g.operands()) q[x].push_back(g.id);
  return q;
}

}  // namespace

ScheduleReport event_driven_schedule(const Circuit& c, const CouplingGraph& chip,
                                     const DurationTable& dur) {
  const auto queues = per_qubit_queues(c);
  std::vector<std::size_t> head(c.width(), 0);
  std::vector<double> finish(c.size(), 0.0);
  std::vector<bool> started(c.size(), false);

  using Event = std::pair<double, GateId>;  // completion time, gate
  std::priority_queue<Event, std::vector<Event>, std::greater<>> events;

  auto is_ready = [&](GateId id) {
    for (Qubit q : c[id].operands()) {
      if (head[q] >= queues[q].size() || queues[q][head[q]] != id) return false;
    }
    return true;
  };
  auto start = [&](GateId id, double now) {
    started[id] = true;
    finish[id] = now + duration_of(c[id], dur);
    events.emplace(finish[id], id);
  };

  for (const auto& g : c.gates()) {
    if (is_ready(g.id)) start(g.id, 0.0);
  }
  while (!events.empty()) {
    auto [time, id] = events.top();
    events.pop();
    for (Qubit q : c[id].operands()) ++head[q];
    for (Qubit q : c[id].operands()) {
      if (head[q] < queues[q].size()) {
        GateId next = queues[q][head[q]];
        if (!started[next] && is_ready(next)) start(next, time);
      }
    }
  }

  ScheduleReport r;
  r.per_qubit_us.assign(chip.size(), 0.0);
  for (Qubit q = 0; q < c.width(); ++q) {
    if (!queues[q].empty()) r.per_qubit_us[q] = finish[queues[q].back()];
  }
  for (double t : r.per_qubit_us) r.makespan_us = std::max(r.makespan_us, t);
  return r;
}

std::vector<GateId> random_topological_order(const Circuit& c, Rng& rng) {
  const auto queues = per_qubit_queues(c);
  std::vector<std::size_t> head(c.width(), 0);
  std::vector<bool> done(c.size(), false);
  std::vector<GateId> order;
  while (order.size() < c.size()) {
    std::vector<GateId> ready;
    for (Qubit q = 0; q < c.width(); ++q) {
      if (head[q] >= queues[q].size()) continue;
      GateId id = queues[q][head[q]];
      bool ok = true;
      for (Qubit x : c[id].operands()) ok = ok && queues[x][head[x]] == id;
      if (ok && std::find(ready.begin(), ready.end(), id) == ready.end()) ready.push_back(id);
    }
    GateId pick = ready[rng.below(ready.size())];
    order.push_back(pick);
    for (Qubit x : c[pick].operands()) ++head[x];
  }
  return order;
}

ScheduleReport fold_in_order(const Circuit& c, const std::vector<GateId>& order,
                             const CouplingGraph& chip, const DurationTable& dur) {
  QubitClocks clocks(chip.size());
  for (GateId id : order) {
    const Gate& g = c[id];
    if (g.is_two_qubit()) {
      clocks.apply_two(g.qubits[0], g.qubits[1], duration_of(g, dur));
    } else {
      clocks.apply_single(g.qubits[0], duration_of(g, dur));
    }
  }
  return ScheduleReport{clocks.makespan(), {clocks.values().begin(), clocks.values().end()}};
}

bool respects_program_order(const Circuit& c, const std::vector<GateId>& order) {
  if (order.size() != c.size()) return false;
  std::vector<GateId> position(c.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  for (const auto& q : per_qubit_queues(c)) {
    for (std::size_t i = 1; i < q.size(); ++i) {
      if (position[q[i - 1]] >= position[q[i]]) return false;
    }
  }
  return true;
}

CouplingGraph random_connected_graph(std::size_t n, std::size_t extra_edges, Rng& rng) {
  std::vector<Edge> edges;
  for (Qubit v = 1; v < n; ++v) {
    edges.emplace_back(static_cast<Qubit>(rng.below(v)), v);
  }
  for (std::size_t k = 0; k < extra_edges; ++k) {
    auto a = static_cast<Qubit>(rng.below(n));
    auto b = static_cast<Qubit>(rng.below(n));
    if (a != b) edges.emplace_back(a, b);
  }
  return CouplingGraph(n, edges);
}

}  // namespace bqa::oracle
