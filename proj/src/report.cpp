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

#include "bqa/report.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "bqa/error.hpp"
#include "bqa/text.hpp"

namespace bqa {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw InternalError("cannot format double");
  return std::string(buf, ptr);
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    auto next = s.find(sep, pos);
    out.push_back(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

std::size_t require_index(std::string_view token, std::string_view what) {
  auto v = text::parse_index(token);
  if (!v) throw Error("invalid " + std::string(what) + " '" + std::string(token) + "'");
  return *v;
}

double require_number(std::string_view token, std::string_view what) {
  auto v = text::parse_double(token);
  if (!v) throw Error("invalid " + std::string(what) + " '" + std::string(token) + "'");
  return *v;
}

}  // namespace

RandomSpec parse_random_spec(std::string_view s) {
  auto parts = split(s, ',');
  if (parts.size() != 4) {
    throw Error("--random expects qubits,gates,p_cx,seed");
  }
  RandomSpec spec;
  spec.qubits = require_index(parts[0], "qubit count");
  spec.gates = require_index(parts[1], "gate count");
  spec.p_cx = require_number(parts[2], "p_cx");
  spec.seed = require_index(parts[3], "seed");
  return spec;
}

std::string to_string(const RandomSpec& spec) {
  return "random:" + std::to_string(spec.qubits) + "," + std::to_string(spec.gates) + "," +
         format_double(spec.p_cx) + "," + std::to_string(spec.seed);
}

std::vector<Qubit> parse_layout(std::string_view s) {
  std::vector<Qubit> out;
  for (auto part : split(s, ',')) {
    out.push_back(static_cast<Qubit>(require_index(part, "layout entry")));
  }
  return out;
}

RoutingReport make_report(std::string source, const Circuit& input, const Chip& chip,
                          Strategy strategy, const RouterConfig& cfg, const RoutedResult& result,
                          double route_ms) {
  RoutingReport r;
  r.source = std::move(source);
  r.width = input.width();
  r.cx_gates = input.count_label(kCxLabel);
  r.swap_gates = input.count_label(kSwapLabel);
  r.single_gates = input.size() - input.count_two_qubit();
  r.chip = chip.name;
  r.strategy = strategy;
  r.lookahead = cfg.lookahead;
  r.swap_factor = cfg.swap_factor.value_or(chip.durations.swap_factor());
  r.initial_layout = cfg.initial_layout;
  r.makespan_us = result.makespan_us;
  r.swap_count = result.swap_count;
  r.subcircuit_count = result.subcircuit_count;
  r.per_qubit_us = result.per_qubit_us;
  r.final_mapping = result.final_layout.physical_to_logical();
  r.route_ms = route_ms;
  return r;
}

nlohmann::ordered_json to_json(const RoutingReport& r) {
  nlohmann::ordered_json j;
  j["input"] = {{"source", r.source},
                {"width", r.width},
                {"gates",
                 {{"total", r.single_gates + r.cx_gates + r.swap_gates},
                  {"single", r.single_gates},
                  {"cx", r.cx_gates},
                  {"swap", r.swap_gates}}}};
  j["chip"] = r.chip;
  j["config"] = {{"strategy", std::string(to_string(r.strategy))},
                 {"lookahead", r.lookahead},
                 {"swap_factor", r.swap_factor}};
  if (r.initial_layout) {
    j["config"]["initial_layout"] = *r.initial_layout;
  } else {
    j["config"]["initial_layout"] = "identity";
  }
  j["results"] = {{"makespan_us", r.makespan_us},
                  {"swap_count", r.swap_count},
                  {"subcircuit_count", r.subcircuit_count},
                  {"per_qubit_us", r.per_qubit_us},
                  {"final_mapping", r.final_mapping}};
  j["timing"] = {{"route_ms", r.route_ms}};
  return j;
}

SweepAxis parse_axis(std::string_view name) {
  if (name == "p_cx") return SweepAxis::p_cx;
  if (name == "gates") return SweepAxis::gates;
  if (name == "qubits") return SweepAxis::qubits;
  if (name == "topology") return SweepAxis::topology;
  throw Error("unknown sweep axis '" + std::string(name) +
              "' (expected p_cx, gates, qubits, topology)");
}

std::string_view to_string(SweepAxis axis) noexcept {
  switch (axis) {
    case SweepAxis::p_cx: return "p_cx";
    case SweepAxis::gates: return "gates";
    case SweepAxis::qubits: return "qubits";
    case SweepAxis::topology: return "topology";
  }
  return "?";
}

std::vector<std::string> expand_values(std::string_view s) {
  std::vector<std::string> out;
  if (s.find(':') != std::string_view::npos && s.find(',') == std::string_view::npos &&
      text::parse_double(s.substr(0, s.find(':')))) {
    auto parts = split(s, ':');
    if (parts.size() != 3) throw Error("range must be lo:hi:step");
    const double lo = require_number(parts[0], "range start");
    const double hi = require_number(parts[1], "range end");
    const double step = require_number(parts[2], "range step");
    if (!(step > 0.0) || hi < lo) throw Error("invalid range '" + std::string(s) + "'");
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    for (std::size_t i = 0; i < count; ++i) {
      // Round to 6 decimals so 0.1 steps print as 0.3, not 0.30000000000000004.
      const double v = std::stod(std::to_string(lo + static_cast<double>(i) * step));
      out.push_back(format_double(v));
    }
    return out;
  }
  for (auto part : split(s, ',')) {
    if (part.empty()) throw Error("empty value in '" + std::string(s) + "'");
    out.emplace_back(part);
  }
  return out;
}

std::string topology_spec(std::string_view family, std::size_t qubits) {
  if (family == "linear" || family == "ladder") {
    return std::string(family) + ":" + std::to_string(qubits);
  }
  if (family == "square") {
    std::size_t rows = 0;
    for (std::size_t r = 2; r * r <= qubits; ++r) {
      if (qubits % r == 0) rows = r;
    }
    if (rows == 0) {
      throw Error("no square grid with " + std::to_string(qubits) + " qubits");
    }
    return "square:" + std::to_string(rows) + "x" + std::to_string(qubits / rows);
  }
  throw Error("unknown topology '" + std::string(family) + "'");
}

namespace {

struct SweepTask {
  std::string value;
  RandomSpec spec;
  std::string chip;
  std::uint64_t seed;
  Strategy strategy;
};

SweepTask make_task(const SweepOptions& opts, const std::string& value, std::uint64_t seed,
                    Strategy strategy) {
  SweepTask t{value, RandomSpec{opts.qubits, opts.gates, opts.p_cx, seed}, opts.chip, seed,
              strategy};
  switch (opts.axis) {
    case SweepAxis::p_cx:
      t.spec.p_cx = require_number(value, "p_cx value");
      break;
    case SweepAxis::gates:
      t.spec.gates = require_index(value, "gate count");
      break;
    case SweepAxis::qubits:
      t.spec.qubits = require_index(value, "qubit count");
      t.chip = topology_spec(opts.family, t.spec.qubits);
      break;
    case SweepAxis::topology:
      t.chip = value.find(':') != std::string::npos ? value : topology_spec(value, opts.qubits);
      break;
  }
  return t;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepOptions& opts) {
  if (opts.values.empty()) throw Error("sweep needs at least one axis value");
  if (opts.seeds.empty()) throw Error("sweep needs at least one seed");
  if (opts.strategies.empty()) throw Error("sweep needs at least one strategy");

  std::vector<SweepTask> tasks;
  for (const auto& value : opts.values) {
    for (auto seed : opts.seeds) {
      for (auto strategy : opts.strategies) {
        tasks.push_back(make_task(opts, value, seed, strategy));
      }
    }
  }
  // Validate every chip and spec up front so errors surface before any work.
  for (const auto& t : tasks) {
    (void)chip_from_spec(t.chip);
    if (!(t.spec.p_cx >= 0.0 && t.spec.p_cx <= 1.0)) throw Error("p_cx must lie in [0, 1]");
  }

  std::vector<SweepRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        const auto& t = tasks[i];
        const Chip chip = chip_from_spec(t.chip);
        const Circuit circuit = gen_random(t.spec);
        const auto start = std::chrono::steady_clock::now();
        const auto result = route_with(t.strategy, circuit, chip.graph, chip.durations, opts.router);
        const auto stop = std::chrono::steady_clock::now();
        rows[i] = SweepRow{std::string(to_string(opts.axis)), t.value, t.seed, t.strategy,
                           result.makespan_us, result.swap_count, result.subcircuit_count,
                           std::chrono::duration<double, std::milli>(stop - start).count()};
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const auto jobs = std::max<std::size_t>(1, std::min(opts.jobs, tasks.size()));
  std::vector<std::jthread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string to_csv(const std::vector<SweepRow>& rows) {
  std::string out(kSweepCsvHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += r.axis + ',' + r.value + ',' + std::to_string(r.seed) + ',' +
           std::string(to_string(r.strategy)) + ',' + format_double(r.makespan_us) + ',' +
           std::to_string(r.swap_count) + ',' + std::to_string(r.subcircuits) + ',' +
           format_double(r.route_ms) + '\n';
  }
  return out;
}

}  // namespace bqa
