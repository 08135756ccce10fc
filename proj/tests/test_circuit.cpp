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

#include <gtest/gtest.h>

#include "bqa/circuit.hpp"
#include "bqa/error.hpp"
#include "bqa/workloads.hpp"

namespace bqa {
namespace {

TEST(ParseCircuit, SingleCnot) {
  const auto c = parse_circuit("qubits 2\ncx 0 1");
  EXPECT_EQ(c.width(), 2u);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].kind, GateKind::two);
  EXPECT_EQ(c[0].label, "cx");
  EXPECT_EQ(c[0].control(), 0u);
  EXPECT_EQ(c[0].target(), 1u);
}

TEST(ParseCircuit, SingleGatesKeepFileOrder) {
  const auto c = parse_circuit("qubits 1\nu 0\nu 0");
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].id, 0u);
  EXPECT_EQ(c[1].id, 1u);
  EXPECT_FALSE(c[0].is_two_qubit());
  EXPECT_EQ(c[1].qubits[0], 0u);
}

TEST(ParseCircuit, RejectsControlEqualsTarget) {
  EXPECT_THROW(parse_circuit("qubits 2\ncx 0 0"), ParseError);
}

TEST(ParseCircuit, CommentsBlankLinesAndUnknownSingleLabels) {
  const auto c = parse_circuit("# header\n\nqubits 3  # width\n  rz(0.25) 2\n\nswap 0 2 # move\n");
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].label, "rz(0.25)");
  EXPECT_TRUE(c[1].is_swap());
}

TEST(ParseCircuit, ErrorsReportLineNumbers) {
  try {
    parse_circuit("qubits 2\nu 0\n\ncx 0 5\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
  try {
    parse_circuit("qubits 2\ncz 0 1\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_circuit("u 0\n"), ParseError);
  EXPECT_THROW(parse_circuit(""), ParseError);
  EXPECT_THROW(parse_circuit("qubits 2\ncx 0\n"), ParseError);
  EXPECT_THROW(parse_circuit("qubits 2\nu 0 1 1\n"), ParseError);
  EXPECT_THROW(parse_circuit("qubits 2\nu x\n"), ParseError);
  EXPECT_THROW(parse_circuit("qubits 2\nqubits 3\n"), ParseError);
}

TEST(EmitCircuit, Format) {
  Circuit c(2);
  c.add_two("cx", 0, 1);
  EXPECT_EQ(emit_circuit(c), "qubits 2\ncx 0 1\n");
  EXPECT_EQ(emit_circuit(Circuit(3)), "qubits 3\n");
}

TEST(EmitCircuit, RoundTripOfRandomCircuits) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Circuit c = gen_random({8, 100, 0.4, seed});
    c.add_two("swap", 3, 5);
    const auto back = parse_circuit(emit_circuit(c));
    EXPECT_TRUE(equal_ignoring_ids(c, back)) << "seed " << seed;
  }
}

TEST(Circuit, RejectsInvalidGates) {
  Circuit c(3);
  EXPECT_THROW(c.add_single("u", 3), Error);
  EXPECT_THROW(c.add_two("cx", 1, 1), Error);
  EXPECT_THROW(c.add_two("cx", 0, 7), Error);
  EXPECT_TRUE(c.empty());
}

TEST(Circuit, Counts) {
  const auto c = parse_circuit("qubits 3\nu 0\ncx 0 1\nswap 1 2\ncx 2 0\n");
  EXPECT_EQ(c.count_two_qubit(), 3u);
  EXPECT_EQ(c.count_label("cx"), 2u);
  EXPECT_EQ(c.count_label("swap"), 1u);
}

}  // namespace
}  // namespace bqa
