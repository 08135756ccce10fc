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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bqa/chip.hpp"
#include "bqa/circuit.hpp"
#include "bqa/router.hpp"
#include "bqa/workloads.hpp"
#include "json.hpp"

namespace bqa {

/// Shortest decimal text that round-trips to the same double.
std::string format_double(double v);

/// "qubits,gates,p_cx,seed" as accepted by --random.
RandomSpec parse_random_spec(std::string_view text);
std::string to_string(const RandomSpec& spec);

/// Comma-separated logical-to-physical list, e.g. "1,0,2,3".
std::vector<Qubit> parse_layout(std::string_view text);

struct RoutingReport {
  std::string source;
  std::size_t width = 0;
  std::size_t single_gates = 0;
  std::size_t cx_gates = 0;
  std::size_t swap_gates = 0;
  std::string chip;
  Strategy strategy = Strategy::bqa;
  std::size_t lookahead = 0;
  double swap_factor = 0.0;
  std::optional<std::vector<Qubit>> initial_layout;
  double makespan_us = 0.0;
  std::size_t swap_count = 0;
  std::size_t subcircuit_count = 0;
  std::vector<double> per_qubit_us;
  /// Physical to logical.
  std::vector<Qubit> final_mapping;
  /// Wall clock; excluded from determinism guarantees.
  double route_ms = 0.0;
};

RoutingReport make_report(std::string source, const Circuit& input, const Chip& chip,
                          Strategy strategy, const RouterConfig& cfg, const RoutedResult& result,
                          double route_ms);

nlohmann::ordered_json to_json(const RoutingReport& r);

// Sweeps ------------------------------------------------------------------

enum class SweepAxis { p_cx, gates, qubits, topology };

SweepAxis parse_axis(std::string_view name);
std::string_view to_string(SweepAxis axis) noexcept;

struct SweepOptions {
  SweepAxis axis = SweepAxis::p_cx;
  /// Axis values as text: numbers, or topology names / chip specs.
  std::vector<std::string> values;
  std::size_t qubits = 16;
  std::size_t gates = 950;
  double p_cx = 0.5;
  /// Chip for the p_cx and gates axes.
  std::string chip = "linear:16";
  /// Chip family for the qubits axis: linear, ladder or square.
  std::string family = "linear";
  std::vector<std::uint64_t> seeds{0};
  std::vector<Strategy> strategies{Strategy::bqa, Strategy::greedy};
  RouterConfig router;
  std::size_t jobs = 1;
};

struct SweepRow {
  std::string axis;
  std::string value;
  std::uint64_t seed = 0;
  Strategy strategy = Strategy::bqa;
  double makespan_us = 0.0;
  std::size_t swap_count = 0;
  std::size_t subcircuits = 0;
  double route_ms = 0.0;
};

inline constexpr std::string_view kSweepCsvHeader =
    "axis,value,seed,strategy,makespan_us,swap_count,subcircuits,route_ms";

/// Expands "lo:hi:step" into its values (inclusive of hi within rounding),
/// or splits a comma-separated list.
std::vector<std::string> expand_values(std::string_view text);

/// Chip spec for a topology family at a given qubit count; square picks the
/// most balanced rows x cols factorization with rows >= 2.
std::string topology_spec(std::string_view family, std::size_t qubits);

/// Rows ordered by (value, seed, strategy) regardless of `jobs`.
std::vector<SweepRow> run_sweep(const SweepOptions& opts);

std::string to_csv(const std::vector<SweepRow>& rows);

}  // namespace bqa
