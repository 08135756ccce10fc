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

#include "bqa/chip.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <filesystem>
#include <limits>
#include <optional>

#include "bqa/error.hpp"
#include "bqa/text.hpp"

namespace bqa {

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
}

CouplingGraph::CouplingGraph(std::size_t qubits, std::span<const Edge> edges)
    : n_(qubits), adjacency_(qubits) {
  if (qubits == 0) {
    throw Error("coupling graph needs at least one qubit");
  }
  for (const auto& e : edges) {
    if (e.a == e.b) {
      throw Error("self-loop on qubit " + std::to_string(e.a));
    }
    if (e.b >= qubits) {
      throw Error("edge " + to_string(e) + " references unknown qubit");
    }
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  edge_index_.assign(n_ * n_, -1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    adjacency_[e.a].push_back(e.b);
    adjacency_[e.b].push_back(e.a);
    edge_index_[e.a * n_ + e.b] = static_cast<int>(i);
    edge_index_[e.b * n_ + e.a] = static_cast<int>(i);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());

  // All-pairs BFS.
  dist_.assign(n_ * n_, -1);
  std::deque<Qubit> queue;
  for (Qubit src = 0; src < n_; ++src) {
    int* row = &dist_[src * n_];
    row[src] = 0;
    queue.push_back(src);
    while (!queue.empty()) {
      Qubit u = queue.front();
      queue.pop_front();
      for (Qubit v : adjacency_[u]) {
        if (row[v] < 0) {
          row[v] = row[u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  if (std::find(dist_.begin(), dist_.end(), -1) != dist_.end()) {
    throw Error("coupling graph is disconnected");
  }
  diameter_ = *std::max_element(dist_.begin(), dist_.end());
}

bool CouplingGraph::has_edge(Qubit x, Qubit y) const { return edge_index(x, y) >= 0; }

int CouplingGraph::distance(Qubit x, Qubit y) const {
  if (x >= n_ || y >= n_) {
    throw Error("physical qubit out of range");
  }
  return dist_[x * n_ + y];
}

int CouplingGraph::edge_index(Qubit x, Qubit y) const {
  if (x >= n_ || y >= n_) return -1;
  return edge_index_[x * n_ + y];
}

CouplingGraph make_linear(std::size_t n) {
  if (n < 2) {
    throw Error("linear topology needs at least 2 qubits");
  }
  std::vector<Edge> edges;
  for (Qubit i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return CouplingGraph(n, edges);
}

CouplingGraph make_ladder(std::size_t n) {
  if (n < 4 || n % 2 != 0) {
    throw Error("ladder topology needs an even qubit count >= 4");
  }
  std::vector<Edge> edges;
  for (Qubit i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  for (Qubit i = 0; i < n / 2; ++i) edges.emplace_back(i, static_cast<Qubit>(n - 1 - i));
  return CouplingGraph(n, edges);
}

CouplingGraph make_square(std::size_t rows, std::size_t cols) {
  if (rows < 2 || cols < 2) {
    throw Error("square topology needs at least 2 rows and 2 columns");
  }
  std::vector<Edge> edges;
  auto at = [cols](std::size_t r, std::size_t c) { return static_cast<Qubit>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(at(r, c), at(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(at(r, c), at(r + 1, c));
    }
  }
  return CouplingGraph(rows * cols, edges);
}

std::vector<Edge> shortest_first_last_steps(const CouplingGraph& g, Qubit a, Qubit b) {
  const int d = g.distance(a, b);
  if (d <= 1) {
    throw InternalError("no routing needed between qubits " + std::to_string(a) + " and " +
                        std::to_string(b));
  }
  std::vector<Edge> out;
  for (Qubit x : g.neighbors(a)) {
    if (g.distance(x, b) == d - 1) out.emplace_back(a, x);
  }
  for (Qubit y : g.neighbors(b)) {
    if (g.distance(a, y) == d - 1) out.emplace_back(y, b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DurationTable::DurationTable(const CouplingGraph& g, std::vector<double> single_us,
                             const std::map<Edge, double>& cnot_us, double swap_factor)
    : single_us_(std::move(single_us)), n_(g.size()), swap_factor_(swap_factor) {
  if (single_us_.size() != n_) {
    throw Error("single-gate duration table has " + std::to_string(single_us_.size()) +
                " entries for " + std::to_string(n_) + " qubits");
  }
  cnot_by_pair_.assign(n_ * n_, 0.0);
  for (const auto& [e, us] : cnot_us) {
    if (!g.has_edge(e.a, e.b)) {
      throw Error("cnot duration given for uncoupled pair " + to_string(e));
    }
    if (!(us > 0.0) || !std::isfinite(us)) {
      throw Error("cnot durations must be positive");
    }
    cnot_by_pair_[e.a * n_ + e.b] = us;
    cnot_by_pair_[e.b * n_ + e.a] = us;
  }
  for (const auto& e : g.edges()) {
    if (!cnot_us.contains(e)) {
      throw Error("missing cnot duration for edge " + to_string(e));
    }
  }
  validate();
}

void DurationTable::validate() const {
  auto bad = [](double v) { return !(v > 0.0) || !std::isfinite(v); };
  if (std::any_of(single_us_.begin(), single_us_.end(), bad)) {
    throw Error("single-gate durations must be positive");
  }
  for (double v : cnot_by_pair_) {
    if (v != 0.0 && bad(v)) throw Error("cnot durations must be positive");
  }
  if (bad(swap_factor_)) {
    throw Error("swap_factor must be positive");
  }
}

DurationTable DurationTable::uniform(const CouplingGraph& g, double single_us,
                                     double cnot_us, double swap_factor) {
  std::map<Edge, double> cnot;
  for (const auto& e : g.edges()) cnot[e] = cnot_us;
  return DurationTable(g, std::vector<double>(g.size(), single_us), cnot, swap_factor);
}

DurationTable DurationTable::reference(const CouplingGraph& g, double swap_factor) {
  constexpr std::size_t table_size = std::size(kReferenceCnotUs);
  std::map<Edge, double> cnot;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    cnot[g.edges()[i]] = kReferenceCnotUs[i % table_size];
  }
  return DurationTable(g, std::vector<double>(g.size(), kDefaultSingleUs), cnot,
                       swap_factor);
}

double DurationTable::cnot_us(Qubit x, Qubit y) const {
  if (x >= n_ || y >= n_ || cnot_by_pair_[x * n_ + y] == 0.0) {
    throw Error("no coupler between qubits " + std::to_string(x) + " and " +
                std::to_string(y));
  }
  return cnot_by_pair_[x * n_ + y];
}

DurationTable DurationTable::with_swap_factor(double factor) const {
  DurationTable copy = *this;
  copy.swap_factor_ = factor;
  copy.validate();
  return copy;
}

DurationTable DurationTable::scaled(double k) const {
  DurationTable copy = *this;
  for (auto& v : copy.single_us_) v *= k;
  for (auto& v : copy.cnot_by_pair_) v *= k;
  copy.validate();
  return copy;
}

namespace {

struct ChipFile {
  std::optional<std::size_t> qubits;
  double default_single_us = kDefaultSingleUs;
  std::optional<double> default_cnot_us;
  double swap_factor = kDefaultSwapFactor;
  std::vector<std::pair<Edge, std::optional<double>>> edges;
  std::vector<std::pair<Qubit, double>> singles;
};

double require_double(std::string_view token, std::size_t line_no) {
  auto v = text::parse_double(token);
  if (!v) throw ParseError(line_no, "expected number, got '" + std::string(token) + "'");
  if (!(*v > 0.0)) throw ParseError(line_no, "duration must be positive");
  return *v;
}

Qubit require_qubit(std::string_view token, const ChipFile& f, std::size_t line_no) {
  auto v = text::parse_index(token);
  if (!v) throw ParseError(line_no, "expected qubit index, got '" + std::string(token) + "'");
  if (!f.qubits) throw ParseError(line_no, "'qubits <N>' must come first");
  if (*v >= *f.qubits) {
    throw ParseError(line_no, "qubit " + std::to_string(*v) + " is unknown");
  }
  return static_cast<Qubit>(*v);
}

}  // namespace

Chip load_chip(std::string_view source, std::string name) {
  ChipFile f;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= source.size()) {
    auto eol = source.find('\n', pos);
    if (eol == std::string_view::npos) eol = source.size();
    auto tokens = text::tokenize_line(source.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (tokens.empty()) continue;

    const auto key = tokens[0];
    auto expect_args = [&](std::size_t lo, std::size_t hi) {
      if (tokens.size() - 1 < lo || tokens.size() - 1 > hi) {
        throw ParseError(line_no, "wrong number of arguments for '" + std::string(key) + "'");
      }
    };
    if (key == "qubits") {
      expect_args(1, 1);
      auto n = text::parse_index(tokens[1]);
      if (!n || *n == 0) throw ParseError(line_no, "invalid qubit count");
      if (f.qubits) throw ParseError(line_no, "duplicate 'qubits' line");
      f.qubits = *n;
    } else if (key == "default_single_us") {
      expect_args(1, 1);
      f.default_single_us = require_double(tokens[1], line_no);
    } else if (key == "default_cnot_us") {
      expect_args(1, 1);
      f.default_cnot_us = require_double(tokens[1], line_no);
    } else if (key == "swap_factor") {
      expect_args(1, 1);
      f.swap_factor = require_double(tokens[1], line_no);
    } else if (key == "edge") {
      expect_args(2, 3);
      Qubit a = require_qubit(tokens[1], f, line_no);
      Qubit b = require_qubit(tokens[2], f, line_no);
      if (a == b) throw ParseError(line_no, "self-loop edge");
      std::optional<double> us;
      if (tokens.size() == 4) us = require_double(tokens[3], line_no);
      f.edges.emplace_back(Edge(a, b), us);
    } else if (key == "single") {
      expect_args(2, 2);
      Qubit q = require_qubit(tokens[1], f, line_no);
      f.singles.emplace_back(q, require_double(tokens[2], line_no));
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(key) + "'");
    }
  }
  if (!f.qubits) throw ParseError(line_no, "missing 'qubits <N>' line");

  std::vector<Edge> edges;
  std::map<Edge, double> cnot;
  for (const auto& [e, us] : f.edges) {
    edges.push_back(e);
    if (us) {
      cnot[e] = *us;
    } else if (f.default_cnot_us) {
      cnot.try_emplace(e, *f.default_cnot_us);
    } else {
      throw Error("edge " + to_string(e) + " has no cnot time and no default_cnot_us");
    }
  }
  CouplingGraph graph(*f.qubits, edges);
  std::vector<double> single(*f.qubits, f.default_single_us);
  for (const auto& [q, us] : f.singles) single[q] = us;
  DurationTable durations(graph, std::move(single), cnot, f.swap_factor);
  return Chip{std::move(name), std::move(graph), std::move(durations)};
}

namespace {

std::size_t parse_size(std::string_view token, std::string_view spec) {
  auto v = text::parse_index(token);
  if (!v) throw Error("invalid chip spec '" + std::string(spec) + "'");
  return *v;
}

}  // namespace

Chip chip_from_spec(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon != std::string_view::npos) {
    auto family = spec.substr(0, colon);
    auto arg = spec.substr(colon + 1);
    std::optional<CouplingGraph> g;
    if (family == "linear") {
      g = make_linear(parse_size(arg, spec));
    } else if (family == "ladder") {
      g = make_ladder(parse_size(arg, spec));
    } else if (family == "square") {
      auto x = arg.find('x');
      if (x == std::string_view::npos) throw Error("square spec needs <rows>x<cols>");
      g = make_square(parse_size(arg.substr(0, x), spec), parse_size(arg.substr(x + 1), spec));
    }
    if (g) {
      auto durations = DurationTable::reference(*g);
      return Chip{std::string(spec), std::move(*g), std::move(durations)};
    }
  }
  std::filesystem::path path{std::string(spec)};
  if (!std::filesystem::exists(path)) {
    throw Error("unknown chip '" + std::string(spec) +
                "' (expected linear:N, ladder:N, square:RxC or a chip file)");
  }
  return load_chip(text::read_file(path), path.string());
}

}  // namespace bqa
