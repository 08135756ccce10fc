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

#include "bqa/verify.hpp"

#include <deque>
#include <vector>

namespace bqa {

namespace {

std::string describe(const Gate& g) {
  std::string s = "gate " + std::to_string(g.id) + " '" + g.label;
  for (Qubit q : g.operands()) s += " " + std::to_string(q);
  return s + "'";
}

VerifyOutcome fail(std::string why) { return VerifyOutcome{std::nullopt, std::move(why)}; }

}  // namespace

VerifyOutcome verify_routed(const Circuit& original, const Circuit& routed,
                            const CouplingGraph& chip, const Layout& initial_layout) {
  const auto n = chip.size();
  if (initial_layout.size() != n) {
    return fail("initial layout size does not match chip");
  }
  if (original.width() > n || routed.width() > n) {
    return fail("circuit wider than chip");
  }

  std::vector<std::deque<GateId>> pending(n);
  for (const auto& g : original.gates()) {
    for (Qubit q : g.operands()) pending[q].push_back(g.id);
  }
  auto next_gate = [&](Qubit logical) -> const Gate* {
    if (logical >= pending.size() || pending[logical].empty()) return nullptr;
    return &original[pending[logical].front()];
  };

  Layout layout = initial_layout;
  for (const auto& g : routed.gates()) {
    if (g.is_two_qubit() && !chip.has_edge(g.qubits[0], g.qubits[1])) {
      return fail("routed " + describe(g) + " acts on uncoupled qubits");
    }
    Gate logical = g;
    for (std::size_t i = 0; i < g.operands().size(); ++i) {
      logical.qubits[i] = layout.logical(g.qubits[i]);
    }

    const Gate* expected = next_gate(logical.qubits[0]);
    const bool matches =
        expected != nullptr && same_operation(*expected, logical) &&
        (!g.is_two_qubit() || next_gate(logical.qubits[1]) == expected);

    if (matches) {
      for (Qubit q : logical.operands()) pending[q].pop_front();
      continue;
    }
    if (g.is_swap()) {
      layout.swap_physical(g.qubits[0], g.qubits[1]);
      continue;
    }
    std::string want = expected ? describe(*expected) : std::string("nothing");
    return fail("routed " + describe(g) + " does not match the next original gate on logical qubit " +
                std::to_string(logical.qubits[0]) + " (expected " + want + ")");
  }

  for (Qubit q = 0; q < pending.size(); ++q) {
    if (!pending[q].empty()) {
      return fail("original " + describe(original[pending[q].front()]) +
                  " missing from routed circuit");
    }
  }
  return VerifyOutcome{layout, {}};
}

}  // namespace bqa
