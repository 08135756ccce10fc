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

#include "bqa/workloads.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "bqa/error.hpp"

namespace bqa {

double Rng::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw Error("Rng::below(0)");
  const std::uint64_t threshold = (0 - n) % n;
  std::uint64_t x = next();
  while (x < threshold) x = next();
  return x % n;
}

Circuit gen_random(const RandomSpec& spec) {
  if (!(spec.p_cx >= 0.0 && spec.p_cx <= 1.0)) {
    throw Error("p_cx must lie in [0, 1]");
  }
  if (spec.qubits == 0) {
    throw Error("random circuit needs at least one qubit");
  }
  if (spec.p_cx > 0.0 && spec.qubits < 2) {
    throw Error("cx gates need at least two qubits");
  }
  Rng rng(spec.seed);
  Circuit c(spec.qubits);
  for (std::size_t i = 0; i < spec.gates; ++i) {
    if (rng.uniform01() < spec.p_cx) {
      const auto control = static_cast<Qubit>(rng.below(spec.qubits));
      auto target = static_cast<Qubit>(rng.below(spec.qubits - 1));
      if (target >= control) ++target;
      c.add_two("cx", control, target);
    } else {
      c.add_single("u", static_cast<Qubit>(rng.below(spec.qubits)));
    }
  }
  return c;
}

BenchmarkKind parse_benchmark(std::string_view name) {
  if (name == "and") return BenchmarkKind::and_gate;
  if (name == "or") return BenchmarkKind::or_gate;
  if (name == "grover") return BenchmarkKind::grover;
  if (name == "qv") return BenchmarkKind::qv;
  throw Error("unknown benchmark '" + std::string(name) + "' (expected and, or, grover, qv)");
}

std::string_view to_string(BenchmarkKind kind) noexcept {
  switch (kind) {
    case BenchmarkKind::and_gate: return "and";
    case BenchmarkKind::or_gate: return "or";
    case BenchmarkKind::grover: return "grover";
    case BenchmarkKind::qv: return "qv";
  }
  return "?";
}

namespace {

void toffoli(Circuit& c, Qubit a, Qubit b, Qubit t) {
  c.add_single("h", t);
  c.add_two("cx", b, t);
  c.add_single("tdg", t);
  c.add_two("cx", a, t);
  c.add_single("t", t);
  c.add_two("cx", b, t);
  c.add_single("tdg", t);
  c.add_two("cx", a, t);
  c.add_single("t", b);
  c.add_single("t", t);
  c.add_single("h", t);
  c.add_two("cx", a, b);
  c.add_single("t", a);
  c.add_single("tdg", b);
  c.add_two("cx", a, b);
}

void toffoli_ladder(Circuit& c, std::size_t n) {
  for (Qubit i = 0; i + 2 < n; ++i) toffoli(c, i, i + 1, i + 2);
  for (Qubit i = static_cast<Qubit>(n - 3); i-- > 0;) toffoli(c, i, i + 1, i + 2);
}

void cx_ladder_up(Circuit& c, std::size_t n) {
  for (Qubit i = 0; i + 1 < n; ++i) c.add_two("cx", i, i + 1);
}

void cx_ladder_down(Circuit& c, std::size_t n) {
  for (Qubit i = static_cast<Qubit>(n - 1); i-- > 0;) c.add_two("cx", i, i + 1);
}

void layer(Circuit& c, std::size_t n, const char* label) {
  for (Qubit q = 0; q < n; ++q) c.add_single(label, q);
}

Circuit gen_qv(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  Circuit c(n);
  std::vector<Qubit> perm(n);
  for (std::size_t depth = 0; depth < n; ++depth) {
    std::iota(perm.begin(), perm.end(), Qubit{0});
    for (std::size_t i = n - 1; i > 0; --i) {
      std::swap(perm[i], perm[rng.below(i + 1)]);
    }
    for (std::size_t k = 0; k + 1 < n; k += 2) {
      const Qubit a = perm[k];
      const Qubit b = perm[k + 1];
      c.add_single("u", a);
      c.add_single("u", b);
      c.add_two("cx", a, b);
      c.add_two("cx", b, a);
      c.add_two("cx", a, b);
      c.add_single("u", a);
      c.add_single("u", b);
    }
  }
  return c;
}

}  // namespace

Circuit gen_grover(std::size_t n, std::size_t rounds) {
  if (n < 2) throw Error("grover needs at least 2 qubits");
  Circuit c(n);
  layer(c, n, "h");
  for (std::size_t r = 0; r < rounds; ++r) {
    cx_ladder_up(c, n);
    c.add_single("t", static_cast<Qubit>(n - 1));
    cx_ladder_down(c, n);

    layer(c, n, "h");
    layer(c, n, "x");
    cx_ladder_up(c, n);
    c.add_single("z", static_cast<Qubit>(n - 1));
    cx_ladder_down(c, n);
    layer(c, n, "x");
    layer(c, n, "h");
  }
  return c;
}

Circuit gen_benchmark(BenchmarkKind kind, std::size_t qubits, std::uint64_t seed) {
  switch (kind) {
    case BenchmarkKind::and_gate:
    case BenchmarkKind::or_gate: {
      if (qubits < 3) throw Error(std::string(to_string(kind)) + " needs at least 3 qubits");
      Circuit c(qubits);
      const bool negate = kind == BenchmarkKind::or_gate;
      if (negate) layer(c, qubits - 1, "x");
      toffoli_ladder(c, qubits);
      if (negate) {
        layer(c, qubits - 1, "x");
        c.add_single("x", static_cast<Qubit>(qubits - 1));
      }
      return c;
    }
    case BenchmarkKind::grover: {
      const double optimal = std::numbers::pi / 4.0 * std::sqrt(std::pow(2.0, qubits));
      return gen_grover(qubits, std::max<std::size_t>(1, static_cast<std::size_t>(optimal)));
    }
    case BenchmarkKind::qv:
      if (qubits < 2 || qubits % 2 != 0) throw Error("qv needs an even qubit count");
      return gen_qv(qubits, seed);
  }
  throw Error("unknown benchmark");
}

}  // namespace bqa
