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

#include <cmath>
#include <set>

#include "bqa/error.hpp"
#include "bqa/workloads.hpp"

namespace bqa {
namespace {

double cx_fraction(const Circuit& c) {
  return static_cast<double>(c.count_label("cx")) / static_cast<double>(c.size());
}

TEST(Rng, StreamIsPinned) {
  // std::mt19937_64 is fully specified: the 10000th output of the default
  // seed is fixed by the standard.
  std::mt19937_64 reference;
  reference.discard(9999);
  EXPECT_EQ(reference(), 9981545732273789042ull);

  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
}

TEST(Rng, DrawsStayInRange) {
  Rng rng(3);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto v = rng.below(7);
    ASSERT_LT(v, 7u);
    seen.insert(v);
    const double u = rng.uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
  EXPECT_EQ(seen.size(), 7u);
}

TEST(GenRandom, SizesMatchSpec) {
  const auto c = gen_random({16, 950, 0.5, 7});
  EXPECT_EQ(c.size(), 950u);
  EXPECT_EQ(c.width(), 16u);
}

TEST(GenRandom, DegenerateProbabilities) {
  const auto singles = gen_random({5, 500, 0.0, 1});
  EXPECT_EQ(singles.count_two_qubit(), 0u);
  const auto cnots = gen_random({5, 10000, 1.0, 1});
  EXPECT_EQ(cx_fraction(cnots), 1.0);
}

TEST(GenRandom, CnotFractionWithinBinomialBounds) {
  // 10000 draws at p = 0.3: sd = sqrt(0.3 * 0.7 / 10000) ~ 0.0046, so
  // +-0.03 is more than six sigma.
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    EXPECT_NEAR(cx_fraction(gen_random({8, 10000, 0.3, seed})), 0.3, 0.03);
  }
}

TEST(GenRandom, DeterministicAndValid) {
  const auto a = gen_random({6, 300, 0.6, 11});
  const auto b = gen_random({6, 300, 0.6, 11});
  EXPECT_TRUE(equal_ignoring_ids(a, b));
  EXPECT_FALSE(equal_ignoring_ids(a, gen_random({6, 300, 0.6, 12})));
  for (const auto& g : a.gates()) {
    for (Qubit q : g.operands()) EXPECT_LT(q, 6u);
    if (g.is_two_qubit()) EXPECT_NE(g.control(), g.target());
  }
}

TEST(GenRandom, InvalidSpecs) {
  EXPECT_THROW(gen_random({4, 10, 1.5, 0}), Error);
  EXPECT_THROW(gen_random({4, 10, -0.1, 0}), Error);
  EXPECT_THROW(gen_random({1, 10, 0.5, 0}), Error);
  EXPECT_THROW(gen_random({0, 10, 0.0, 0}), Error);
  EXPECT_NO_THROW(gen_random({1, 10, 0.0, 0}));
}

TEST(GenBenchmark, QuantumVolumeCounts) {
  const auto c = gen_benchmark(BenchmarkKind::qv, 4, 9);
  // 4 layers x 2 pairs x (3 cx + 4 u).
  EXPECT_EQ(c.count_label("cx"), 24u);
  EXPECT_EQ(c.count_label("u"), 32u);
  EXPECT_THROW(gen_benchmark(BenchmarkKind::qv, 5, 0), Error);
}

TEST(GenBenchmark, GroverRoundTouchesEveryAdjacentPair) {
  const auto c = gen_grover(4, 1);
  std::set<std::pair<Qubit, Qubit>> pairs;
  for (const auto& g : c.gates()) {
    if (g.is_two_qubit()) pairs.emplace(std::min(g.control(), g.target()), std::max(g.control(), g.target()));
  }
  for (Qubit i = 0; i + 1 < 4; ++i) EXPECT_TRUE(pairs.contains({i, i + 1}));
}

TEST(GenBenchmark, DeterministicValidAndSizeMonotone) {
  for (auto kind : {BenchmarkKind::and_gate, BenchmarkKind::or_gate, BenchmarkKind::grover,
                    BenchmarkKind::qv}) {
    std::size_t previous = 0;
    for (std::size_t n : {4, 6, 8, 10}) {
      const auto c = gen_benchmark(kind, n, 5);
      EXPECT_TRUE(equal_ignoring_ids(c, gen_benchmark(kind, n, 5)));
      EXPECT_EQ(c.width(), n);
      EXPECT_GE(c.size(), previous) << to_string(kind) << " n=" << n;
      EXPECT_GT(c.count_two_qubit(), 0u);
      previous = c.size();
    }
  }
  EXPECT_EQ(parse_benchmark("grover"), BenchmarkKind::grover);
  EXPECT_THROW(parse_benchmark("shor"), Error);
  EXPECT_THROW(gen_benchmark(BenchmarkKind::and_gate, 2, 0), Error);
}

}  // namespace
}  // namespace bqa
