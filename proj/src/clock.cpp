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

#include "bqa/clock.hpp"

#include <algorithm>

#include "bqa/error.hpp"

namespace bqa {

void QubitClocks::apply_single(Qubit q, double duration_us) {
  if (q >= t_.size()) {
    throw Error("qubit " + std::to_string(q) + " out of range");
  }
  t_[q] += duration_us;
}

void QubitClocks::apply_two(Qubit i, Qubit j, double duration_us) {
  if (i >= t_.size() || j >= t_.size()) {
    throw Error("qubit out of range");
  }
  if (i == j) {
    throw Error("two-qubit accumulation on a single qubit " + std::to_string(i));
  }
  const double end = std::max(t_[i], t_[j]) + duration_us;
  t_[i] = end;
  t_[j] = end;
}

double QubitClocks::makespan() const noexcept {
  return t_.empty() ? 0.0 : *std::max_element(t_.begin(), t_.end());
}

QubitClocks apply_single(QubitClocks clocks, Qubit q, const DurationTable& dur) {
  clocks.apply_single(q, dur.single_us(q));
  return clocks;
}

QubitClocks apply_two(QubitClocks clocks, Qubit i, Qubit j, double duration_us) {
  clocks.apply_two(i, j, duration_us);
  return clocks;
}

double gate_duration_us(const Gate& g, Qubit p0, Qubit p1, const CouplingGraph& chip,
                        const DurationTable& dur) {
  if (!g.is_two_qubit()) {
    return dur.single_us(p0);
  }
  if (!chip.has_edge(p0, p1)) {
    throw Error("gate " + std::to_string(g.id) + " (" + g.label + ") acts on uncoupled qubits " +
                std::to_string(p0) + " and " + std::to_string(p1));
  }
  return g.is_swap() ? dur.swap_us(p0, p1) : dur.cnot_us(p0, p1);
}

ScheduleReport simulate(const Circuit& c, const CouplingGraph& chip, const DurationTable& dur,
                        const Layout& layout) {
  if (layout.size() != chip.size() || c.width() > chip.size()) {
    throw Error("circuit of width " + std::to_string(c.width()) + " does not fit chip of " +
                std::to_string(chip.size()) + " qubits");
  }
  QubitClocks clocks(chip.size());
  for (const auto& g : c.gates()) {
    const Qubit p0 = layout.physical(g.qubits[0]);
    if (g.is_two_qubit()) {
      const Qubit p1 = layout.physical(g.qubits[1]);
      clocks.apply_two(p0, p1, gate_duration_us(g, p0, p1, chip, dur));
    } else {
      clocks.apply_single(p0, dur.single_us(p0));
    }
  }
  ScheduleReport report;
  report.makespan_us = clocks.makespan();
  report.per_qubit_us.assign(clocks.values().begin(), clocks.values().end());
  return report;
}

ScheduleReport simulate(const Circuit& c, const CouplingGraph& chip, const DurationTable& dur) {
  return simulate(c, chip, dur, Layout::identity(chip.size()));
}

}  // namespace bqa
