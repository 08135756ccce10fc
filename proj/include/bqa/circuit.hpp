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

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bqa {

using Qubit = std::uint32_t;
using GateId = std::size_t;

enum class GateKind : std::uint8_t { single, two };
enum class GateOrigin : std::uint8_t { original, inserted_swap };

inline constexpr std::string_view kCxLabel = "cx";
inline constexpr std::string_view kSwapLabel = "swap";

struct Gate {
  GateId id = 0;
  GateKind kind = GateKind::single;
  std::string label;
  // qubits[1] is meaningful only for two-qubit gates.
  std::array<Qubit, 2> qubits{};
  GateOrigin origin = GateOrigin::original;

  bool is_two_qubit() const noexcept { return kind == GateKind::two; }
  bool is_swap() const noexcept { return is_two_qubit() && label == kSwapLabel; }
  Qubit control() const noexcept { return qubits[0]; }
  Qubit target() const noexcept { return qubits[1]; }

  std::span<const Qubit> operands() const noexcept {
    return {qubits.data(), is_two_qubit() ? std::size_t{2} : std::size_t{1}};
  }

  bool touches(Qubit q) const noexcept {
    return qubits[0] == q || (is_two_qubit() && qubits[1] == q);
  }
};

/// Same operation on the same qubits; ids and origin are ignored.
bool same_operation(const Gate& a, const Gate& b) noexcept;

/// Logical circuit in program order. Gate ids are positions in the gate list.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t width) : width_(width) {}

  std::size_t width() const noexcept { return width_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }
  const Gate& operator[](GateId id) const { return gates_.at(id); }

  /// Throws Error if q is outside the circuit width.
  GateId add_single(std::string label, Qubit q);
  /// Throws Error on out-of-range qubits or control == target.
  GateId add_two(std::string label, Qubit control, Qubit target,
                 GateOrigin origin = GateOrigin::original);
  /// Re-validates and appends a copy of g with a fresh id.
  GateId add(const Gate& g);

  std::size_t count_two_qubit() const noexcept;
  std::size_t count_label(std::string_view label) const noexcept;

 private:
  std::size_t width_ = 0;
  std::vector<Gate> gates_;
};

/// Equality of width and gate sequences, ignoring ids and origin.
bool equal_ignoring_ids(const Circuit& a, const Circuit& b) noexcept;

/// Parses the line format:
///
///   qubits <N>
///   <label> <q>            single-qubit gate, any label
///   <label> <q1> <q2>      two-qubit gate, label is cx or swap
///
/// `#` starts a comment, blank lines are skipped. Throws ParseError with the
/// offending line number.
Circuit parse_circuit(std::string_view text);

std::string emit_circuit(const Circuit& c);

Circuit read_circuit_file(const std::filesystem::path& path);
void write_circuit_file(const std::filesystem::path& path, const Circuit& c);

}  // namespace bqa
