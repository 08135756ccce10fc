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

#include "bqa/circuit.hpp"

namespace bqa {

/// Bijection between logical and physical qubits on a chip of size() qubits.
/// Logical indices at or above the circuit width are unused placeholders.
class Layout {
 public:
  Layout() = default;

  static Layout identity(std::size_t n);
  /// log2phys[l] is the physical home of logical l. Throws Error unless it is
  /// a permutation of 0..n-1.
  static Layout from_logical_to_physical(std::span<const Qubit> log2phys);

  std::size_t size() const noexcept { return log2phys_.size(); }
  Qubit physical(Qubit logical) const { return log2phys_.at(logical); }
  Qubit logical(Qubit physical) const { return phys2log_.at(physical); }

  const std::vector<Qubit>& logical_to_physical() const noexcept { return log2phys_; }
  const std::vector<Qubit>& physical_to_logical() const noexcept { return phys2log_; }

  /// Exchanges whatever logical qubits sit on physical x and y.
  void swap_physical(Qubit x, Qubit y);

  bool is_bijection() const noexcept;
  bool is_identity() const noexcept;

  bool operator==(const Layout&) const = default;

 private:
  std::vector<Qubit> log2phys_;
  std::vector<Qubit> phys2log_;
};

}  // namespace bqa
