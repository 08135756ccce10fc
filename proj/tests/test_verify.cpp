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

#include "bqa/verify.hpp"

namespace bqa {
namespace {

Circuit fixture(const char* name) {
  return read_circuit_file(std::string(BQA_DATA_DIR) + "/" + name);
}

class VerifyLine4 : public ::testing::Test {
 protected:
  CouplingGraph chip = make_linear(4);
  Layout identity = Layout::identity(4);
};

TEST_F(VerifyLine4, SingleSwapRouting) {
  const auto outcome = verify_routed(fixture("two_hop.qc"), fixture("two_hop_one_swap.qc"), chip, identity);
  ASSERT_TRUE(outcome.ok()) << outcome.violation;
  EXPECT_EQ(outcome.final_layout->physical_to_logical(), (std::vector<Qubit>{0, 1, 3, 2}));
}

TEST_F(VerifyLine4, TwoSwapRouting) {
  const auto outcome = verify_routed(fixture("two_hop.qc"), fixture("two_hop_two_swaps.qc"), chip, identity);
  ASSERT_TRUE(outcome.ok()) << outcome.violation;
  // SWAP(1,2) then SWAP(0,1).
  EXPECT_EQ(outcome.final_layout->physical_to_logical(), (std::vector<Qubit>{2, 0, 1, 3}));
}

TEST_F(VerifyLine4, DeletedSwapIsCaught) {
  const auto routed = parse_circuit("qubits 4\ncx 1 2\ncx 0 1\n");
  const auto outcome = verify_routed(fixture("two_hop.qc"), routed, chip, identity);
  EXPECT_FALSE(outcome.ok());
  EXPECT_FALSE(outcome.violation.empty());
}

TEST_F(VerifyLine4, SwapFreeCircuitAgainstItself) {
  const auto c = parse_circuit("qubits 4\nu 0\ncx 0 1\ncx 2 3\nu 2\n");
  const auto outcome = verify_routed(c, c, chip, identity);
  ASSERT_TRUE(outcome.ok()) << outcome.violation;
  EXPECT_TRUE(outcome.final_layout->is_identity());
}

TEST_F(VerifyLine4, Violations) {
  const auto original = parse_circuit("qubits 4\nu 0\ncx 0 1\nu 1\n");
  auto fails = [&](const char* routed) {
    return !verify_routed(original, parse_circuit(routed), chip, identity).ok();
  };
  EXPECT_TRUE(fails("qubits 4\nu 0\ncx 0 1\n"));               // missing gate
  EXPECT_TRUE(fails("qubits 4\nu 0\ncx 0 1\nu 1\nu 1\n"));     // extra gate
  EXPECT_TRUE(fails("qubits 4\nu 1\nu 0\ncx 0 1\n"));          // reordered on qubit 1
  EXPECT_TRUE(fails("qubits 4\nu 0\ncx 1 0\nu 1\n"));          // flipped direction
  EXPECT_TRUE(fails("qubits 4\nh 0\ncx 0 1\nu 1\n"));          // wrong label
  EXPECT_TRUE(fails("qubits 4\nu 0\ncx 0 2\nu 1\n"));          // uncoupled
  EXPECT_FALSE(fails("qubits 4\nu 0\ncx 0 1\nu 1\n"));
  // Independent gates may interleave differently.
  const auto par = parse_circuit("qubits 4\nu 0\nu 3\ncx 0 1\n");
  EXPECT_TRUE(verify_routed(par, parse_circuit("qubits 4\nu 3\nu 0\ncx 0 1\n"), chip, identity).ok());
}

TEST_F(VerifyLine4, RespectsInitialLayout) {
  const std::vector<Qubit> l2p{1, 0, 2, 3};
  const auto layout = Layout::from_logical_to_physical(l2p);
  const auto original = parse_circuit("qubits 4\nu 0\ncx 0 2\n");
  const auto outcome = verify_routed(original, parse_circuit("qubits 4\nu 1\ncx 1 2\n"), chip, layout);
  ASSERT_TRUE(outcome.ok()) << outcome.violation;
  EXPECT_EQ(outcome.final_layout->physical_to_logical(), (std::vector<Qubit>{1, 0, 2, 3}));
}

}  // namespace
}  // namespace bqa
