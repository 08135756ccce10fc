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
#include <span>
#include <vector>

#include "bqa/chip.hpp"
#include "bqa/circuit.hpp"
#include "bqa/layout.hpp"

namespace bqa {

/// Clock comparisons are made at this absolute tolerance (microseconds).
inline constexpr double kClockToleranceUs = 1e-9;

/// Accumulated busy time of each physical qubit, in microseconds.
///
/// A single-qubit gate adds its duration to its own qubit. A two-qubit gate
/// starts when both operands are free, so both clocks become
/// max(t[i], t[j]) + duration.
class QubitClocks {
 public:
  QubitClocks() = default;
  explicit QubitClocks(std::size_t n) : t_(n, 0.0) {}

  std::size_t size() const noexcept { return t_.size(); }
  double operator[](Qubit q) const { return t_.at(q); }
  std::span<const double> values() const noexcept { return t_; }

  void apply_single(Qubit q, double duration_us);
  void apply_two(Qubit i, Qubit j, double duration_us);

  double makespan() const noexcept;

  bool operator==(const QubitClocks&) const = default;

 private:
  std::vector<double> t_;
};

/// t[q] += single_us(q).
QubitClocks apply_single(QubitClocks clocks, Qubit q, const DurationTable& dur);
QubitClocks apply_two(QubitClocks clocks, Qubit i, Qubit j, double duration_us);

/// Duration of g when executed on physical qubits p0 (and p1). `swap` gates
/// take swap_us, other two-qubit gates cnot_us. Throws Error if a two-qubit
/// gate lands on an uncoupled pair.
double gate_duration_us(const Gate& g, Qubit p0, Qubit p1, const CouplingGraph& chip,
                        const DurationTable& dur);

struct ScheduleReport {
  double makespan_us = 0.0;
  std::vector<double> per_qubit_us;
};

/// Folds the clock model over c in program order, mapping logical qubits
/// through layout. per_qubit_us is indexed by physical qubit.
ScheduleReport simulate(const Circuit& c, const CouplingGraph& chip, const DurationTable& dur,
                        const Layout& layout);

/// Same as above with an identity layout over the chip.
ScheduleReport simulate(const Circuit& c, const CouplingGraph& chip, const DurationTable& dur);

}  // namespace bqa
