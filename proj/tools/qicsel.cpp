//
// This file is part of the qicsel library released under the Apache-2.0 license.
// See README.md for more information.
//

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qicsel/errors.hpp"
#include "qicsel/layout_search.hpp"
#include "qicsel/scoring.hpp"
#include "qicsel/select.hpp"
#include "qicsel/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNoEmbedding = 3;
constexpr int kExitSimulation = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qicsel::ParseError("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    if (!text.ends_with('\n')) std::cout << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw qicsel::ParseError("cannot write file '" + out_path + "'");
  out << text;
}

qicsel::UserCircuit load_circuit(const std::string& path) {
  const std::string text = read_file(path);
  return qicsel::parse_circuit(text, qicsel::sniff_circuit_format(text));
}

// Accepts a fixture name (heavy-hex-27, heavy-hex-127, line-N, ring-N,
// grid-RxC) or a JSON file path.
qicsel::CouplingMap load_coupling(const std::string& arg) {
  try {
    return qicsel::CouplingMap::fixture(arg);
  } catch (const qicsel::ParseError&) {
    return qicsel::coupling_from_json(read_file(arg));
  }
}

qicsel::DriftSchedule load_noise_or_drift(const std::string& noise_path,
                                          const std::string& drift_path) {
  if (!noise_path.empty() && !drift_path.empty())
    throw qicsel::ParseError("pass either --noise or --drift, not both");
  if (!drift_path.empty()) return qicsel::drift_from_json(read_file(drift_path));
  if (!noise_path.empty())
    return qicsel::DriftSchedule::single(qicsel::noise_from_json(read_file(noise_path)));
  throw qicsel::ParseError("one of --noise or --drift is required");
}

struct CommonOptions {
  std::string circuit;
  std::string coupling;
  std::string noise;
  std::string drift;
  std::string mode = "basic";
  int threshold = 0;
  long long shots = 4096;
  std::uint64_t seed = 0;
  int permutations = 20;
  int jit_baseline = 132;
  std::string out;
  std::string format = "json";
};

qicsel::SelectionMode parse_mode(const std::string& mode) {
  if (mode == "basic") return qicsel::SelectionMode::Basic;
  if (mode == "disjoint") return qicsel::SelectionMode::Disjoint;
  if (mode == "distortion") return qicsel::SelectionMode::Distortion;
  throw qicsel::ParseError("unknown mode '" + mode + "' (basic|disjoint|distortion)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Layout selection for quantum circuits via quality indicator circuits"};
  app.require_subcommand(1);

  CommonOptions opt;

  auto* build = app.add_subcommand("build-qic", "Construct the QIC of a circuit");
  build->add_option("--circuit", opt.circuit, "Circuit file (JSON or OpenQASM 2)")->required();
  build->add_option("--out", opt.out, "Output file (default stdout)");

  auto* layouts_cmd = app.add_subcommand("layouts", "Enumerate isomorphic layouts");
  layouts_cmd->add_option("--circuit", opt.circuit)->required();
  layouts_cmd->add_option("--coupling", opt.coupling, "Coupling map file or fixture name")->required();
  layouts_cmd->add_option("--out", opt.out);

  auto* partition_cmd = app.add_subcommand("partition", "Batch layouts into union executions");
  partition_cmd->add_option("--circuit", opt.circuit)->required();
  partition_cmd->add_option("--coupling", opt.coupling)->required();
  partition_cmd->add_option("--mode", opt.mode, "disjoint|distortion");
  partition_cmd->add_option("--threshold", opt.threshold, "Distortion threshold T");
  partition_cmd->add_option("--seed", opt.seed);
  partition_cmd->add_option("--permutations", opt.permutations);
  partition_cmd->add_option("--out", opt.out);

  auto* simulate_cmd = app.add_subcommand("simulate", "Execute a QIC or Clifford circuit under noise");
  std::string qic_path;
  simulate_cmd->add_option("--qic", qic_path, "QIC file (from build-qic)");
  simulate_cmd->add_option("--circuit", opt.circuit, "Clifford circuit file");
  simulate_cmd->add_option("--noise", opt.noise, "Noise snapshot file");
  simulate_cmd->add_option("--drift", opt.drift, "Drift schedule file (last snapshot is used)");
  simulate_cmd->add_option("--shots", opt.shots);
  simulate_cmd->add_option("--seed", opt.seed);
  simulate_cmd->add_option("--out", opt.out);

  auto* score_cmd = app.add_subcommand("score", "Score a counts histogram");
  std::string counts_path;
  score_cmd->add_option("--counts", counts_path, "Counts file")->required();
  int resamples = 0;
  score_cmd->add_option("--resamples", resamples, "Bootstrap resamples (0 disables)");
  score_cmd->add_option("--seed", opt.seed);
  score_cmd->add_option("--out", opt.out);

  auto* select_cmd = app.add_subcommand("select", "Rank layouts and pick the least noisy");
  select_cmd->add_option("--circuit", opt.circuit)->required();
  select_cmd->add_option("--coupling", opt.coupling)->required();
  select_cmd->add_option("--noise", opt.noise);
  select_cmd->add_option("--drift", opt.drift);
  select_cmd->add_option("--mode", opt.mode, "basic|disjoint|distortion");
  select_cmd->add_option("--threshold", opt.threshold);
  select_cmd->add_option("--shots", opt.shots);
  select_cmd->add_option("--seed", opt.seed);
  select_cmd->add_option("--permutations", opt.permutations);
  select_cmd->add_option("--jit-baseline", opt.jit_baseline);
  select_cmd->add_option("--out", opt.out);
  select_cmd->add_option("--format", opt.format, "json|csv");

  auto* report_cmd = app.add_subcommand("report", "Execution-count comparison table");
  std::vector<std::string> entries;
  report_cmd->add_option("--executions", entries, "label=count (repeatable)")->required();
  report_cmd->add_option("--jit-baseline", opt.jit_baseline);
  report_cmd->add_option("--out", opt.out);
  report_cmd->add_option("--format", opt.format, "json|csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInput;
  }

  try {
    if (build->parsed()) {
      const auto circuit = load_circuit(opt.circuit);
      const auto qic = qicsel::build_qic(circuit);
      if (qic.no_two_qubit_gates)
        std::cerr << "warning: circuit has no two-qubit gate; the QIC degenerates to a Hadamard"
                     " sandwich and senses only SPAM/one-qubit noise\n";
      write_output(opt.out, qicsel::qic_to_json(qic));
    } else if (layouts_cmd->parsed()) {
      const auto circuit = load_circuit(opt.circuit);
      const auto map = load_coupling(opt.coupling);
      map.validate();
      const auto qic = qicsel::build_qic(circuit);
      const auto found = qicsel::find_isomorphic_layouts(qicsel::interaction_graph(qic), map);
      if (found.empty())
        throw qicsel::NoEmbeddingError("no isomorphic layout exists on this coupling map");
      write_output(opt.out, qicsel::layouts_to_json(found));
    } else if (partition_cmd->parsed()) {
      const auto circuit = load_circuit(opt.circuit);
      const auto map = load_coupling(opt.coupling);
      map.validate();
      const auto qic = qicsel::build_qic(circuit);
      const auto layouts = qicsel::find_isomorphic_layouts(qicsel::interaction_graph(qic), map);
      if (layouts.empty())
        throw qicsel::NoEmbeddingError("no isomorphic layout exists on this coupling map");
      std::vector<qicsel::Qic> mapped;
      mapped.reserve(layouts.size());
      for (const auto& layout : layouts)
        mapped.push_back(qicsel::map_qic(qic, layout, map.num_qubits));
      qicsel::PartitionPlan plan;
      if (opt.mode == "disjoint" || opt.mode == "basic")
        plan = qicsel::partition_disjoint(layouts, opt.seed, opt.permutations, &mapped);
      else if (opt.mode == "distortion")
        plan = qicsel::partition_with_distortion(layouts, mapped, opt.threshold, opt.seed,
                                                 opt.permutations);
      else
        throw qicsel::ParseError("unknown mode '" + opt.mode + "' (disjoint|distortion)");
      write_output(opt.out, qicsel::plan_to_json(plan));
    } else if (simulate_cmd->parsed()) {
      const auto schedule = load_noise_or_drift(opt.noise, opt.drift);
      const auto snapshot = qicsel::snapshot_at(schedule, schedule.last_time());
      qicsel::ShotCounts counts;
      if (!qic_path.empty()) {
        const auto qic = qicsel::qic_from_json(read_file(qic_path));
        counts = qicsel::run_qic(qic, snapshot, opt.shots, opt.seed);
      } else if (!opt.circuit.empty()) {
        const auto circuit = load_circuit(opt.circuit);
        std::vector<int> measured(static_cast<std::size_t>(circuit.num_qubits));
        for (int q = 0; q < circuit.num_qubits; ++q) measured[static_cast<std::size_t>(q)] = q;
        counts = qicsel::run_clifford_circuit(circuit, measured, snapshot, opt.shots, opt.seed);
      } else {
        throw qicsel::ParseError("one of --qic or --circuit is required");
      }
      write_output(opt.out, qicsel::counts_to_json(counts));
    } else if (score_cmd->parsed()) {
      const auto counts = qicsel::counts_from_json(read_file(counts_path));
      std::vector<int> ordering(static_cast<std::size_t>(counts.width));
      for (int i = 0; i < counts.width; ++i) ordering[static_cast<std::size_t>(i)] = i;
      std::ostringstream os;
      os << "{\n  \"qic_score_counts\": " << qicsel::qic_score_counts(counts);
      if (counts.width >= 2) os << ",\n  \"qic_score_zz\": " << qicsel::qic_score_zz(counts, ordering);
      if (resamples >= 2) {
        const auto stats = qicsel::bootstrap_scores(counts, resamples, opt.seed, ordering);
        os << ",\n  \"bootstrap\": {\"resamples\": " << stats.resamples
           << ", \"counts_mean\": " << stats.counts_mean << ", \"counts_std\": " << stats.counts_std
           << ", \"zz_mean\": " << stats.zz_mean << ", \"zz_std\": " << stats.zz_std << "}";
      }
      os << "\n}";
      write_output(opt.out, os.str());
    } else if (select_cmd->parsed()) {
      const auto circuit = load_circuit(opt.circuit);
      const auto map = load_coupling(opt.coupling);
      map.validate();
      const auto schedule = load_noise_or_drift(opt.noise, opt.drift);
      qicsel::SelectOptions options;
      options.mode = parse_mode(opt.mode);
      options.threshold = opt.threshold;
      options.shots = opt.shots;
      options.seed = opt.seed;
      options.permutations = opt.permutations;
      options.jit_baseline = opt.jit_baseline;
      const auto report = qicsel::select_layout(circuit, map, schedule, options);
      write_output(opt.out, opt.format == "csv" ? qicsel::selection_to_csv(report)
                                                : qicsel::selection_to_json(report));
    } else if (report_cmd->parsed()) {
      std::vector<std::pair<std::string, int>> parsed;
      for (const std::string& entry : entries) {
        const std::size_t eq = entry.find('=');
        if (eq == std::string::npos)
          throw qicsel::ParseError("--executions expects label=count, got '" + entry + "'");
        parsed.emplace_back(entry.substr(0, eq), std::stoi(entry.substr(eq + 1)));
      }
      const auto report = qicsel::resource_report(parsed, opt.jit_baseline);
      write_output(opt.out, opt.format == "csv" ? qicsel::resource_to_csv(report)
                                                : qicsel::resource_to_json(report));
    }
  } catch (const qicsel::NoEmbeddingError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNoEmbedding;
  } catch (const qicsel::SimulationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSimulation;
  } catch (const qicsel::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
