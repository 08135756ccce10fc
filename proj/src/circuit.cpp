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

#include "bqa/circuit.hpp"

#include <algorithm>
#include <limits>

#include "bqa/error.hpp"
#include "bqa/text.hpp"

namespace bqa {

bool same_operation(const Gate& a, const Gate& b) noexcept {
  if (a.kind != b.kind || a.label != b.label || a.qubits[0] != b.qubits[0]) {
    return false;
  }
  return !a.is_two_qubit() || a.qubits[1] == b.qubits[1];
}

GateId Circuit::add_single(std::string label, Qubit q) {
  if (q >= width_) {
    throw Error("qubit " + std::to_string(q) + " out of range for width " +
                std::to_string(width_));
  }
  Gate g;
  g.id = gates_.size();
  g.kind = GateKind::single;
  g.label = std::move(label);
  g.qubits = {q, 0};
  gates_.push_back(std::move(g));
  return gates_.back().id;
}

GateId Circuit::add_two(std::string label, Qubit control, Qubit target,
                        GateOrigin origin) {
  if (control >= width_ || target >= width_) {
    throw Error("qubit " + std::to_string(std::max(control, target)) +
                " out of range for width " + std::to_string(width_));
  }
  if (control == target) {
    throw Error("two-qubit gate with control == target (" +
                std::to_string(control) + ")");
  }
  Gate g;
  g.id = gates_.size();
  g.kind = GateKind::two;
  g.label = std::move(label);
  g.qubits = {control, target};
  g.origin = origin;
  gates_.push_back(std::move(g));
  return gates_.back().id;
}

GateId Circuit::add(const Gate& g) {
  if (g.is_two_qubit()) {
    return add_two(g.label, g.qubits[0], g.qubits[1], g.origin);
  }
  return add_single(g.label, g.qubits[0]);
}

std::size_t Circuit::count_two_qubit() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      gates_.begin(), gates_.end(), [](const Gate& g) { return g.is_two_qubit(); }));
}

std::size_t Circuit::count_label(std::string_view label) const noexcept {
  return static_cast<std::size_t>(std::count_if(
      gates_.begin(), gates_.end(), [&](const Gate& g) { return g.label == label; }));
}

bool equal_ignoring_ids(const Circuit& a, const Circuit& b) noexcept {
  return a.width() == b.width() &&
         std::equal(a.gates().begin(), a.gates().end(), b.gates().begin(),
                    b.gates().end(), same_operation);
}

namespace {

Qubit parse_qubit(std::string_view token, std::size_t line_no) {
  auto value = text::parse_index(token);
  if (!value || *value > std::numeric_limits<Qubit>::max()) {
    throw ParseError(line_no, "expected qubit index, got '" + std::string(token) + "'");
  }
  return static_cast<Qubit>(*value);
}

}  // namespace

Circuit parse_circuit(std::string_view source) {
  std::optional<Circuit> circuit;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= source.size()) {
    auto eol = source.find('\n', pos);
    if (eol == std::string_view::npos) eol = source.size();
    auto line = source.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    auto tokens = text::tokenize_line(line);
    if (tokens.empty()) continue;

    if (!circuit) {
      if (tokens[0] != "qubits" || tokens.size() != 2) {
        throw ParseError(line_no, "expected 'qubits <N>' header");
      }
      auto width = text::parse_index(tokens[1]);
      if (!width) {
        throw ParseError(line_no, "invalid qubit count '" + std::string(tokens[1]) + "'");
      }
      circuit.emplace(*width);
      continue;
    }
    if (tokens[0] == "qubits") {
      throw ParseError(line_no, "duplicate 'qubits' header");
    }

    const std::string label(tokens[0]);
    const bool two_label = label == kCxLabel || label == kSwapLabel;
    try {
      if (tokens.size() == 2 && !two_label) {
        circuit->add_single(label, parse_qubit(tokens[1], line_no));
      } else if (tokens.size() == 3 && two_label) {
        circuit->add_two(label, parse_qubit(tokens[1], line_no),
                         parse_qubit(tokens[2], line_no));
      } else if (tokens.size() == 3) {
        throw ParseError(line_no, "two-qubit gate '" + label + "' not supported (only cx, swap)");
      } else if (tokens.size() == 2) {
        throw ParseError(line_no, "'" + label + "' needs two qubits");
      } else {
        throw ParseError(line_no, "expected '<label> <q>' or '<label> <q1> <q2>'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!circuit) {
    throw ParseError(line_no, "missing 'qubits <N>' header");
  }
  return std::move(*circuit);
}

std::string emit_circuit(const Circuit& c) {
  std::string out = "qubits " + std::to_string(c.width()) + "\n";
  for (const auto& g : c.gates()) {
    out += g.label;
    for (Qubit q : g.operands()) {
      out += ' ';
      out += std::to_string(q);
    }
    out += '\n';
  }
  return out;
}

Circuit read_circuit_file(const std::filesystem::path& path) {
  return parse_circuit(text::read_file(path));
}

void write_circuit_file(const std::filesystem::path& path, const Circuit& c) {
  text::write_file(path, emit_circuit(c));
}

}  // namespace bqa
