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

#include "bqa/cli.hpp"

#include <chrono>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "bqa/clock.hpp"
#include "bqa/error.hpp"
#include "bqa/report.hpp"
#include "bqa/router.hpp"
#include "bqa/text.hpp"
#include "bqa/verify.hpp"
#include "bqa/workloads.hpp"

namespace bqa::cli {

namespace {

struct RouterFlags {
  std::size_t lookahead = 20;
  std::optional<double> swap_factor;
  std::string initial_layout;
  std::string front_scope = "all";
  std::string time_base = "subcircuit";

  void attach(CLI::App* cmd) {
    cmd->add_option("--lookahead", lookahead, "Upcoming two-qubit gates scored by the backend cost")
        ->capture_default_str();
    cmd->add_option("--swap-factor", swap_factor, "SWAP duration as a multiple of the CNOT duration");
    cmd->add_option("--initial-layout", initial_layout,
                    "Logical-to-physical placement, comma separated (default identity)");
    cmd->add_option("--front-scope", front_scope, "Qubits in the front-cost ratio")
        ->check(CLI::IsMember({"all", "active"}))
        ->capture_default_str();
    cmd->add_option("--time-base", time_base, "Front-cost time origin")
        ->check(CLI::IsMember({"subcircuit", "absolute"}))
        ->capture_default_str();
  }

  RouterConfig config() const {
    RouterConfig cfg;
    cfg.lookahead = lookahead;
    cfg.swap_factor = swap_factor;
    if (!initial_layout.empty()) cfg.initial_layout = parse_layout(initial_layout);
    cfg.front_scope = front_scope == "active" ? FrontScope::active_qubits : FrontScope::all_qubits;
    cfg.time_base = time_base == "absolute" ? TimeBase::absolute : TimeBase::subcircuit;
    return cfg;
  }
};

Layout layout_for(const RouterConfig& cfg, std::size_t n) {
  if (!cfg.initial_layout) return Layout::identity(n);
  if (cfg.initial_layout->size() != n) {
    throw Error("initial layout needs " + std::to_string(n) + " entries");
  }
  return Layout::from_logical_to_physical(*cfg.initial_layout);
}

std::string mapping_text(const std::vector<Qubit>& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(m[i]);
  }
  return s + "]";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Busy-qubit-avoiding SWAP insertion for coupling-constrained quantum chips", "bqa"};
  app.require_subcommand(1);

  // route
  auto* route_cmd = app.add_subcommand("route", "Insert SWAPs so every two-qubit gate is coupled");
  std::string in_path, random_text, chip_spec, strategy_name = "bqa", out_path, report_path;
  RouterFlags route_flags;
  auto* in_opt = route_cmd->add_option("--in", in_path, "Input circuit file");
  auto* random_opt =
      route_cmd->add_option("--random", random_text, "Generate the input: qubits,gates,p_cx,seed");
  in_opt->excludes(random_opt);
  route_cmd->add_option("--chip", chip_spec, "Chip file or linear:N, ladder:N, square:RxC")->required();
  route_cmd->add_option("--strategy", strategy_name, "bqa or greedy")
      ->check(CLI::IsMember({"bqa", "greedy"}))
      ->capture_default_str();
  route_cmd->add_option("--out", out_path, "Routed circuit output file");
  route_cmd->add_option("--report", report_path, "Report JSON output file (default stdout)");
  route_flags.attach(route_cmd);

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Route seeded random circuits along one axis, emit CSV");
  std::string axis_name, values_text, seeds_text = "0", strategies_text = "bqa,greedy", csv_path;
  std::size_t seed_count = 0;
  SweepOptions sweep;
  RouterFlags sweep_flags;
  sweep_cmd->add_option("--axis", axis_name, "p_cx, gates, qubits or topology")->required();
  sweep_cmd->add_option("--values", values_text, "lo:hi:step or a comma-separated list")->required();
  sweep_cmd->add_option("--qubits", sweep.qubits)->capture_default_str();
  sweep_cmd->add_option("--gates", sweep.gates)->capture_default_str();
  sweep_cmd->add_option("--p-cx", sweep.p_cx)->capture_default_str();
  sweep_cmd->add_option("--chip", sweep.chip, "Chip for the p_cx and gates axes")->capture_default_str();
  sweep_cmd->add_option("--family", sweep.family, "Topology family for the qubits axis")
      ->capture_default_str();
  auto* seeds_opt = sweep_cmd->add_option("--seeds", seeds_text, "Comma-separated seed list");
  auto* repeats_opt =
      sweep_cmd->add_option("--repeats", seed_count, "Use seeds 0..N-1 instead of --seeds");
  seeds_opt->excludes(repeats_opt);
  sweep_cmd->add_option("--strategies", strategies_text)->capture_default_str();
  sweep_cmd->add_option("--jobs", sweep.jobs, "Worker threads")->capture_default_str();
  sweep_cmd->add_option("--out", csv_path, "CSV output file (default stdout)");
  sweep_flags.attach(sweep_cmd);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check a routed circuit against its original");
  std::string original_path, routed_path, verify_chip;
  RouterFlags verify_flags;
  verify_cmd->add_option("--original", original_path)->required();
  verify_cmd->add_option("--routed", routed_path)->required();
  verify_cmd->add_option("--chip", verify_chip)->required();
  verify_cmd->add_option("--initial-layout", verify_flags.initial_layout);

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "Makespan of a physical circuit under the clock model");
  std::string sim_in, sim_chip;
  std::optional<double> sim_swap_factor;
  sim_cmd->add_option("--in", sim_in, "Circuit file on physical qubits")->required();
  sim_cmd->add_option("--chip", sim_chip)->required();
  sim_cmd->add_option("--swap-factor", sim_swap_factor);

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated circuit file");
  std::string gen_random_text, gen_bench, gen_out;
  std::size_t gen_qubits = 4;
  std::uint64_t gen_seed = 0;
  auto* gen_random_opt = gen_cmd->add_option("--random", gen_random_text, "qubits,gates,p_cx,seed");
  auto* gen_bench_opt = gen_cmd->add_option("--benchmark", gen_bench, "and, or, grover or qv");
  gen_random_opt->excludes(gen_bench_opt);
  gen_cmd->add_option("--qubits", gen_qubits)->capture_default_str();
  gen_cmd->add_option("--seed", gen_seed)->capture_default_str();
  gen_cmd->add_option("--out", gen_out, "Output file (default stdout)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (route_cmd->parsed()) {
      if (in_path.empty() == random_text.empty()) {
        throw Error("route needs exactly one of --in or --random");
      }
      const Chip chip = chip_from_spec(chip_spec);
      const RouterConfig cfg = route_flags.config();
      std::string source = in_path;
      Circuit input;
      if (!random_text.empty()) {
        const auto spec = parse_random_spec(random_text);
        input = gen_random(spec);
        source = to_string(spec);
      } else {
        input = read_circuit_file(in_path);
      }
      const Strategy strategy = parse_strategy(strategy_name);
      const auto start = std::chrono::steady_clock::now();
      const RoutedResult result = route_with(strategy, input, chip.graph, chip.durations, cfg);
      const auto stop = std::chrono::steady_clock::now();

      const auto check = verify_routed(input, result.circuit, chip.graph, result.initial_layout);
      if (!check.ok() || *check.final_layout != result.final_layout) {
        throw InternalError("routed circuit failed self-check: " + check.violation);
      }
      const auto report = make_report(source, input, chip, strategy, cfg, result,
                                      std::chrono::duration<double, std::milli>(stop - start).count());
      const std::string json = to_json(report).dump(2) + "\n";
      if (!out_path.empty()) write_circuit_file(out_path, result.circuit);
      if (report_path.empty()) {
        out << json;
      } else {
        text::write_file(report_path, json);
      }
      return kExitOk;
    }

    if (sweep_cmd->parsed()) {
      sweep.axis = parse_axis(axis_name);
      sweep.values = expand_values(values_text);
      sweep.router = sweep_flags.config();
      sweep.seeds.clear();
      if (seed_count > 0) {
        for (std::uint64_t s = 0; s < seed_count; ++s) sweep.seeds.push_back(s);
      } else {
        for (const auto& s : expand_values(seeds_text)) {
          auto v = text::parse_index(s);
          if (!v) throw Error("invalid seed '" + s + "'");
          sweep.seeds.push_back(*v);
        }
      }
      sweep.strategies.clear();
      for (const auto& s : expand_values(strategies_text)) sweep.strategies.push_back(parse_strategy(s));
      const std::string csv = to_csv(run_sweep(sweep));
      if (csv_path.empty()) {
        out << csv;
      } else {
        text::write_file(csv_path, csv);
      }
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      const Chip chip = chip_from_spec(verify_chip);
      const Circuit original = read_circuit_file(original_path);
      const Circuit routed = read_circuit_file(routed_path);
      const auto outcome =
          verify_routed(original, routed, chip.graph, layout_for(verify_flags.config(), chip.graph.size()));
      if (!outcome.ok()) {
        out << "violation: " << outcome.violation << "\n";
        return kExitInputError;
      }
      out << "ok\nfinal_mapping: " << mapping_text(outcome.final_layout->physical_to_logical())
          << "\n";
      return kExitOk;
    }

    if (sim_cmd->parsed()) {
      const Chip chip = chip_from_spec(sim_chip);
      const Circuit c = read_circuit_file(sim_in);
      const auto dur = sim_swap_factor ? chip.durations.with_swap_factor(*sim_swap_factor)
                                       : chip.durations;
      const auto report = simulate(c, chip.graph, dur);
      nlohmann::ordered_json j;
      j["chip"] = chip.name;
      j["makespan_us"] = report.makespan_us;
      j["per_qubit_us"] = report.per_qubit_us;
      j["swap_count"] = c.count_label(kSwapLabel);
      j["cx_count"] = c.count_label(kCxLabel);
      out << j.dump(2) << "\n";
      return kExitOk;
    }

    if (gen_cmd->parsed()) {
      Circuit c;
      if (!gen_random_text.empty()) {
        c = gen_random(parse_random_spec(gen_random_text));
      } else if (!gen_bench.empty()) {
        c = gen_benchmark(parse_benchmark(gen_bench), gen_qubits, gen_seed);
      } else {
        throw Error("gen needs --random or --benchmark");
      }
      if (gen_out.empty()) {
        out << emit_circuit(c);
      } else {
        write_circuit_file(gen_out, c);
      }
      return kExitOk;
    }
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace bqa::cli
