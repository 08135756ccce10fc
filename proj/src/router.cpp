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

#include "bqa/router.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "bqa/dag.hpp"
#include "bqa/error.hpp"

namespace bqa {

std::string_view to_string(Strategy s) noexcept {
  return s == Strategy::bqa ? "bqa" : "greedy";
}

Strategy parse_strategy(std::string_view name) {
  if (name == "bqa") return Strategy::bqa;
  if (name == "greedy") return Strategy::greedy;
  throw Error("unknown strategy '" + std::string(name) + "' (expected bqa or greedy)");
}

std::size_t SubcircuitTracker::active_count() const noexcept {
  return static_cast<std::size_t>(std::count(active_.begin(), active_.end(), true));
}

void SubcircuitTracker::restart(const QubitClocks& clocks) {
  ++index_;
  std::fill(active_.begin(), active_.end(), false);
  start_clock_.assign(clocks.values().begin(), clocks.values().end());
}

RouterState RouterState::start(Layout layout) {
  const auto n = layout.size();
  return RouterState{std::move(layout), QubitClocks(n), SubcircuitTracker(n)};
}

Discrimination discriminate(const Gate& g, const Layout& layout, const CouplingGraph& chip) {
  if (!g.is_two_qubit()) return Discrimination::executable;
  return chip.has_edge(layout.physical(g.control()), layout.physical(g.target()))
             ? Discrimination::executable
             : Discrimination::needs_routing;
}

double front_cost(const QubitClocks& clocks, const SubcircuitTracker& tracker, FrontScope scope,
                  TimeBase base) {
  double max_time = 0.0;
  double sum = 0.0;
  std::size_t count = 0;
  for (Qubit q = 0; q < clocks.size(); ++q) {
    if (scope == FrontScope::active_qubits && !tracker.is_active(q)) continue;
    const double t =
        base == TimeBase::subcircuit ? clocks[q] - tracker.start_clock(q) : clocks[q];
    max_time = std::max(max_time, t);
    sum += t;
    ++count;
  }
  if (count == 0 || sum <= 0.0) return 1.0;
  return max_time / (sum / static_cast<double>(count));
}

double backend_cost(const Layout& layout, const CouplingGraph& chip,
                    std::span<const LogicalPair> future, std::size_t lookahead) {
  const auto n = std::min(lookahead, future.size());
  if (n == 0) return 0.0;
  int swaps = 0;
  for (const auto& [c, t] : future.first(n)) {
    swaps += chip.distance(layout.physical(c), layout.physical(t)) - 1;
  }
  return static_cast<double>(swaps) / static_cast<double>(n);
}

CostBreakdown score_candidate(const Edge& edge, const RouterState& state,
                              std::span<const LogicalPair> future, const CouplingGraph& chip,
                              const DurationTable& dur, const RouterConfig& cfg) {
  QubitClocks clocks = apply_two(state.clocks, edge.a, edge.b, dur.swap_us(edge.a, edge.b));
  SubcircuitTracker tracker = state.tracker;
  tracker.touch(edge.a);
  tracker.touch(edge.b);
  Layout layout = state.layout;
  layout.swap_physical(edge.a, edge.b);

  CostBreakdown cost;
  cost.front = front_cost(clocks, tracker, cfg.front_scope, cfg.time_base);
  cost.backend = backend_cost(layout, chip, future, cfg.lookahead);
  cost.total = cost.front + cost.backend;
  return cost;
}

namespace {

// Candidate totals closer than this are ties, resolved by the smaller edge.
constexpr double kCostTieTolerance = 1e-9;

using SwapSelector = std::function<Edge(Qubit control_phys, Qubit target_phys,
                                        const RouterState& state,
                                        std::span<const LogicalPair> future)>;

RoutedResult run_router(const Circuit& c, const CouplingGraph& chip, const DurationTable& base_dur,
                        const RouterConfig& cfg, const SwapSelector& select) {
  const auto n = chip.size();
  if (c.width() > n) {
    throw Error("circuit of width " + std::to_string(c.width()) + " does not fit chip of " +
                std::to_string(n) + " qubits");
  }
  if (base_dur.size() != n) {
    throw Error("duration table does not match chip size");
  }
  const DurationTable dur = cfg.swap_factor ? base_dur.with_swap_factor(*cfg.swap_factor) : base_dur;

  Layout initial = Layout::identity(n);
  if (cfg.initial_layout) {
    if (cfg.initial_layout->size() != n) {
      throw Error("initial layout has " + std::to_string(cfg.initial_layout->size()) +
                  " entries for a chip of " + std::to_string(n) + " qubits");
    }
    initial = Layout::from_logical_to_physical(*cfg.initial_layout);
  }

  const auto order = topo_order(build_dag(c));
  // Two-qubit gates in consumption order, for the lookahead window.
  std::vector<LogicalPair> two_qubit;
  std::vector<std::size_t> two_qubit_rank(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    two_qubit_rank[k] = two_qubit.size();
    const Gate& g = c[order[k]];
    if (g.is_two_qubit()) two_qubit.emplace_back(g.control(), g.target());
  }

  RouterState state = RouterState::start(initial);
  RoutedResult result;
  result.circuit = Circuit(n);
  result.initial_layout = initial;
  const std::size_t swap_guard = n * n;

  for (std::size_t k = 0; k < order.size(); ++k) {
    const Gate& g = c[order[k]];
    if (discriminate(g, state.layout, chip) == Discrimination::needs_routing) {
      // Window starts just after the pending gate.
      const auto rank = two_qubit_rank[k] + 1;
      const auto future = std::span<const LogicalPair>(two_qubit).subspan(
          rank, std::min(cfg.lookahead, two_qubit.size() - rank));

      BlockingEvent event{g.id, chip.distance(state.layout.physical(g.control()),
                                              state.layout.physical(g.target())),
                          0};
      while (discriminate(g, state.layout, chip) == Discrimination::needs_routing) {
        if (++event.swaps > swap_guard) {
          throw InternalError("gate " + std::to_string(g.id) + " needed more than " +
                              std::to_string(swap_guard) + " swaps");
        }
        const Edge e = select(state.layout.physical(g.control()),
                              state.layout.physical(g.target()), state, future);
        result.circuit.add_two(std::string(kSwapLabel), e.a, e.b, GateOrigin::inserted_swap);
        state.clocks.apply_two(e.a, e.b, dur.swap_us(e.a, e.b));
        state.tracker.touch(e.a);
        state.tracker.touch(e.b);
        state.layout.swap_physical(e.a, e.b);
        assert(state.layout.is_bijection());
      }
      result.swap_count += event.swaps;
      result.blocking.push_back(event);
      state.tracker.restart(state.clocks);
    }

    const Qubit p0 = state.layout.physical(g.qubits[0]);
    if (g.is_two_qubit()) {
      const Qubit p1 = state.layout.physical(g.qubits[1]);
      result.circuit.add_two(g.label, p0, p1, g.origin);
      state.clocks.apply_two(p0, p1, gate_duration_us(g, p0, p1, chip, dur));
      state.tracker.touch(p0);
      state.tracker.touch(p1);
    } else {
      result.circuit.add_single(g.label, p0);
      state.clocks.apply_single(p0, dur.single_us(p0));
      state.tracker.touch(p0);
    }
  }

  result.final_layout = state.layout;
  result.subcircuit_count = state.tracker.index() + 1;
  result.makespan_us = state.clocks.makespan();
  result.per_qubit_us.assign(state.clocks.values().begin(), state.clocks.values().end());
  return result;
}

}  // namespace

RoutedResult route(const Circuit& c, const CouplingGraph& chip, const DurationTable& dur,
                   const RouterConfig& cfg) {
  const DurationTable scoring = cfg.swap_factor ? dur.with_swap_factor(*cfg.swap_factor) : dur;
  auto select = [&](Qubit pc, Qubit pt, const RouterState& state,
                    std::span<const LogicalPair> future) {
    const auto candidates = shortest_first_last_steps(chip, pc, pt);
    Edge best = candidates.front();
    double best_total = score_candidate(best, state, future, chip, scoring, cfg).total;
    for (std::size_t i = 1; i < candidates.size(); ++i) {
      const double total = score_candidate(candidates[i], state, future, chip, scoring, cfg).total;
      if (total < best_total - kCostTieTolerance) {
        best = candidates[i];
        best_total = total;
      }
    }
    return best;
  };
  return run_router(c, chip, dur, cfg, select);
}

RoutedResult route_greedy_baseline(const Circuit& c, const CouplingGraph& chip,
                                   const DurationTable& dur, const RouterConfig& cfg) {
  auto select = [&](Qubit pc, Qubit pt, const RouterState&, std::span<const LogicalPair>) {
    const int d = chip.distance(pc, pt);
    std::optional<Edge> best;
    for (Qubit x : chip.neighbors(pc)) {
      if (chip.distance(x, pt) == d - 1) {
        const Edge e(pc, x);
        if (!best || e < *best) best = e;
      }
    }
    if (!best) throw InternalError("no distance-reducing step from qubit " + std::to_string(pc));
    return *best;
  };
  return run_router(c, chip, dur, cfg, select);
}

RoutedResult route_with(Strategy s, const Circuit& c, const CouplingGraph& chip,
                        const DurationTable& dur, const RouterConfig& cfg) {
  return s == Strategy::bqa ? route(c, chip, dur, cfg) : route_greedy_baseline(c, chip, dur, cfg);
}

}  // namespace bqa
