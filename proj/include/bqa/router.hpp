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
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "bqa/chip.hpp"
#include "bqa/circuit.hpp"
#include "bqa/clock.hpp"
#include "bqa/layout.hpp"

namespace bqa {

/// Which qubits enter the busiest-to-average ratio of the front cost.
enum class FrontScope {
  all_qubits,     // every physical qubit of the chip
  active_qubits,  // only qubits touched in the current subcircuit
};

/// Whether front-cost times are measured from the subcircuit start or from t=0.
enum class TimeBase { subcircuit, absolute };

enum class Strategy { bqa, greedy };

std::string_view to_string(Strategy s) noexcept;
/// Throws Error for anything but "bqa" or "greedy".
Strategy parse_strategy(std::string_view name);

struct RouterConfig {
  /// Number of upcoming two-qubit gates scored by the backend cost; 0 disables it.
  std::size_t lookahead = 20;
  /// Overrides the chip's SWAP/CNOT duration ratio when set.
  std::optional<double> swap_factor;
  /// Logical-to-physical placement at t=0; identity when unset.
  std::optional<std::vector<Qubit>> initial_layout;
  FrontScope front_scope = FrontScope::all_qubits;
  TimeBase time_base = TimeBase::subcircuit;
};

/// Segment bookkeeping between blocking two-qubit gates.
class SubcircuitTracker {
 public:
  SubcircuitTracker() = default;
  explicit SubcircuitTracker(std::size_t n) : active_(n, false), start_clock_(n, 0.0) {}

  std::size_t index() const noexcept { return index_; }
  bool is_active(Qubit q) const { return active_.at(q); }
  std::size_t active_count() const noexcept;
  double start_clock(Qubit q) const { return start_clock_.at(q); }

  void touch(Qubit q) { active_.at(q) = true; }
  /// Closes the current subcircuit and opens the next one at `clocks`.
  void restart(const QubitClocks& clocks);

 private:
  std::size_t index_ = 0;
  std::vector<bool> active_;
  std::vector<double> start_clock_;
};

struct CostBreakdown {
  double front = 0.0;
  double backend = 0.0;
  double total = 0.0;
};

/// Mutable state of one routing run.
struct RouterState {
  Layout layout;
  QubitClocks clocks;
  SubcircuitTracker tracker;

  static RouterState start(Layout layout);
};

/// (control, target) in logical indices.
using LogicalPair = std::pair<Qubit, Qubit>;

enum class Discrimination { executable, needs_routing };

Discrimination discriminate(const Gate& g, const Layout& layout, const CouplingGraph& chip);

/// max(t) / mean(t) over the scoped qubits, where t is either the time spent
/// since the subcircuit started or the absolute clock. Defined as 1 when
/// every scoped time is zero or nothing is in scope.
double front_cost(const QubitClocks& clocks, const SubcircuitTracker& tracker,
                  FrontScope scope = FrontScope::all_qubits,
                  TimeBase base = TimeBase::subcircuit);

/// Mean number of SWAPs (hop distance - 1) still needed by the first
/// min(lookahead, future.size()) gates of `future` under `layout`; 0 if none.
double backend_cost(const Layout& layout, const CouplingGraph& chip,
                    std::span<const LogicalPair> future, std::size_t lookahead);

/// Cost of inserting a SWAP on `edge` now. Works on copies; `state` is not
/// modified.
CostBreakdown score_candidate(const Edge& edge, const RouterState& state,
                              std::span<const LogicalPair> future, const CouplingGraph& chip,
                              const DurationTable& dur, const RouterConfig& cfg);

/// One resolved blocking gate: its operand distance when it became pending
/// and the number of SWAPs inserted for it.
struct BlockingEvent {
  GateId gate = 0;
  int distance = 0;
  std::size_t swaps = 0;
};

struct RoutedResult {
  /// Physical-index circuit over the whole chip; inserted SWAPs are labelled
  /// `swap` with origin inserted_swap.
  Circuit circuit;
  Layout initial_layout;
  Layout final_layout;
  std::size_t swap_count = 0;
  std::size_t subcircuit_count = 0;
  double makespan_us = 0.0;
  std::vector<double> per_qubit_us;
  std::vector<BlockingEvent> blocking;
};

/// Busy-qubit-avoiding SWAP insertion. Gates are consumed in topological
/// order; each blocking gate is resolved by repeatedly inserting the
/// cheapest distance-reducing SWAP (front + backend cost, ties to the
/// smallest edge) until its operands are coupled.
///
/// Throws Error if the circuit is wider than the chip or the initial layout
/// is malformed, InternalError if a gate needs more than n^2 SWAPs.
RoutedResult route(const Circuit& c, const CouplingGraph& chip, const DurationTable& dur,
                   const RouterConfig& cfg = {});

/// Cost-blind baseline: always moves the control qubit along its smallest
/// distance-reducing edge.
RoutedResult route_greedy_baseline(const Circuit& c, const CouplingGraph& chip,
                                   const DurationTable& dur, const RouterConfig& cfg = {});

RoutedResult route_with(Strategy s, const Circuit& c, const CouplingGraph& chip,
                        const DurationTable& dur, const RouterConfig& cfg = {});

}  // namespace bqa
