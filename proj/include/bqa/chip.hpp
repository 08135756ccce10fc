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

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bqa/circuit.hpp"

namespace bqa {

/// Undirected coupler between two physical qubits, stored with a < b.
struct Edge {
  Qubit a = 0;
  Qubit b = 0;

  Edge() = default;
  Edge(Qubit x, Qubit y) : a(x < y ? x : y), b(x < y ? y : x) {}

  bool touches(Qubit q) const noexcept { return a == q || b == q; }
  auto operator<=>(const Edge&) const = default;
};

std::string to_string(const Edge& e);

/// Connected, undirected coupling graph with precomputed all-pairs hop
/// distances.
class CouplingGraph {
 public:
  /// Throws Error on self-loops, out-of-range endpoints, zero qubits, or a
  /// disconnected graph. Duplicate edges are merged.
  CouplingGraph(std::size_t qubits, std::span<const Edge> edges);

  std::size_t size() const noexcept { return n_; }
  /// Sorted by (a, b).
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Sorted ascending.
  const std::vector<Qubit>& neighbors(Qubit q) const { return adjacency_.at(q); }

  bool has_edge(Qubit x, Qubit y) const;
  int distance(Qubit x, Qubit y) const;
  int diameter() const noexcept { return diameter_; }
  /// Position of e in edges(), or -1.
  int edge_index(Qubit x, Qubit y) const;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Qubit>> adjacency_;
  std::vector<int> dist_;
  std::vector<int> edge_index_;
  int diameter_ = 0;
};

CouplingGraph make_linear(std::size_t n);
/// The linear chain folded in half: qubit i is also coupled to n-1-i.
CouplingGraph make_ladder(std::size_t n);
/// Grid with qubit (r, c) at index r * cols + c.
CouplingGraph make_square(std::size_t rows, std::size_t cols);

/// First and last hops of every shortest path from a to b: edges (a, x) with
/// dist(x, b) == dist(a, b) - 1 and edges (y, b) with dist(a, y) ==
/// dist(a, b) - 1. Sorted and deduplicated. Throws InternalError if
/// dist(a, b) <= 1.
std::vector<Edge> shortest_first_last_steps(const CouplingGraph& g, Qubit a, Qubit b);

inline constexpr double kDefaultSingleUs = 0.1;
inline constexpr double kDefaultSwapFactor = 3.0;

/// Measured CNOT times of a ten-qubit linear chip, edge (i, i+1) at index i.
inline constexpr double kReferenceCnotUs[] = {0.540, 0.739, 0.675, 0.512, 0.540,
                                              0.540, 0.64,  0.65,  0.248};

/// Gate durations in microseconds. CNOT times are symmetric and defined on
/// coupler edges only; a SWAP costs swap_factor CNOTs on the same edge.
class DurationTable {
 public:
  /// Throws Error on non-positive durations, size mismatches, or a cnot
  /// entry for a pair that is not an edge of g.
  DurationTable(const CouplingGraph& g, std::vector<double> single_us,
                const std::map<Edge, double>& cnot_us,
                double swap_factor = kDefaultSwapFactor);

  static DurationTable uniform(const CouplingGraph& g, double single_us, double cnot_us,
                               double swap_factor = kDefaultSwapFactor);

  /// Single gates at 0.1 us; CNOT times taken from kReferenceCnotUs in
  /// edge order, wrapping around for chips with more than nine couplers.
  static DurationTable reference(const CouplingGraph& g,
                                 double swap_factor = kDefaultSwapFactor);

  std::size_t size() const noexcept { return single_us_.size(); }
  double single_us(Qubit q) const { return single_us_.at(q); }
  /// Throws Error if (x, y) is not a coupler.
  double cnot_us(Qubit x, Qubit y) const;
  double swap_us(Qubit x, Qubit y) const { return swap_factor_ * cnot_us(x, y); }
  double swap_factor() const noexcept { return swap_factor_; }

  DurationTable with_swap_factor(double factor) const;
  /// Every duration multiplied by k (swap_factor unchanged).
  DurationTable scaled(double k) const;

 private:
  DurationTable() = default;
  void validate() const;

  std::vector<double> single_us_;
  std::vector<double> cnot_by_pair_;  // n * n, zero where uncoupled
  std::size_t n_ = 0;
  double swap_factor_ = kDefaultSwapFactor;
};

struct Chip {
  std::string name;
  CouplingGraph graph;
  DurationTable durations;
};

/// Parses the chip file format:
///
///   qubits <N>
///   default_single_us <f>     optional, defaults to 0.1
///   default_cnot_us <f>       required if some edge has no explicit time
///   swap_factor <f>           optional, defaults to 3.0
///   edge <a> <b> [cnot_us]
///   single <q> <f>
Chip load_chip(std::string_view text, std::string name = "file");

/// `linear:<n>`, `ladder:<n>`, `square:<r>x<c>` (reference durations), or a
/// path to a chip file.
Chip chip_from_spec(std::string_view spec);

}  // namespace bqa
