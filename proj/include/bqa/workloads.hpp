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
#include <random>
#include <string_view>

#include "bqa/circuit.hpp"

namespace bqa {

/// Portable random stream: std::mt19937_64 seeded with the raw 64-bit seed.
/// Derived draws use only the engine's 64-bit outputs so every platform sees
/// the same sequence:
///   uniform01()  (x >> 11) * 2^-53
///   below(n)     x % n, redrawing while x < (2^64 - n) % n
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double uniform01();
  /// Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

struct RandomSpec {
  std::size_t qubits = 0;
  std::size_t gates = 0;
  double p_cx = 0.0;
  std::uint64_t seed = 0;
};

/// Each gate is independently a `cx` on a uniform ordered pair of distinct
/// qubits with probability p_cx, else a `u` on a uniform qubit. Per gate the
/// stream is consumed as: uniform01 for the kind, then below(qubits) for the
/// control and below(qubits - 1) for the target (skipping the control), or
/// below(qubits) for a single gate.
///
/// Throws Error if p_cx is outside [0, 1], qubits is 0, or p_cx > 0 with
/// fewer than two qubits.
Circuit gen_random(const RandomSpec& spec);

enum class BenchmarkKind { and_gate, or_gate, grover, qv };

/// "and", "or", "grover", "qv"; throws Error otherwise.
BenchmarkKind parse_benchmark(std::string_view name);
std::string_view to_string(BenchmarkKind kind) noexcept;

/// Structural stand-ins for the classic routing benchmarks. They reproduce
/// the CNOT density and connectivity pattern, not the functionality:
///
///   and     Toffoli ladder (i, i+1 -> i+2) over all qubits, then the
///           uncompute half, each Toffoli as 6 cx + 9 singles
///   or      the `and` ladder conjugated by x gates on the inputs
///   grover  h layer, then rounds of oracle (cx ladder up, t, ladder down)
///           and diffusion (h, x, ladder up, z, ladder down, x, h);
///           floor(pi/4 * sqrt(2^n)) rounds
///   qv      n layers; each pairs qubits by a seeded random permutation and
///           applies u u cx cx cx u u to every pair
///
/// and/or/grover ignore the seed. Throws Error for fewer than 3 qubits
/// (and/or), fewer than 2 (grover), or an odd count (qv).
Circuit gen_benchmark(BenchmarkKind kind, std::size_t qubits, std::uint64_t seed);

Circuit gen_grover(std::size_t qubits, std::size_t rounds);

}  // namespace bqa
