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

#include <optional>
#include <string>

#include "bqa/chip.hpp"
#include "bqa/circuit.hpp"
#include "bqa/layout.hpp"

namespace bqa {

struct VerifyOutcome {
  /// Physical-to-logical mapping after replaying every SWAP; set when ok.
  std::optional<Layout> final_layout;
  /// First violation found; empty when ok.
  std::string violation;

  bool ok() const noexcept { return final_layout.has_value(); }
};

/// Replays `routed` (physical indices) against `original` (logical indices).
///
/// A routed `swap` that matches the next pending gate of both logical qubits
/// (an original swap on the same pair) is consumed as that gate; any other
/// `swap` is an inserted SWAP and moves the tracked layout. Every other gate
/// must be the next pending original gate on each of its logical qubits. All
/// two-qubit gates must sit on chip couplers and every original gate must be
/// consumed.
VerifyOutcome verify_routed(const Circuit& original, const Circuit& routed,
                            const CouplingGraph& chip, const Layout& initial_layout);

}  // namespace bqa
