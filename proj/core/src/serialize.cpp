//
// This file is part of the qicsel library released under the Apache-2.0 license.
// See README.md for more information.
//

#include "qicsel/serialize.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include <json.hpp>

#include "qasm.hpp"
#include "qicsel/errors.hpp"

namespace qicsel {
namespace {

using nlohmann::json;

json parse_json_text(std::string_view text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw ParseError(std::string(what) + ": malformed JSON");
  return j;
}

const json& require(const json& j, const char* field, const char* what) {
  auto it = j.find(field);
  if (it == j.end())
    throw ParseError(std::string(what) + ": missing field '" + field + "'");
  return *it;
}

int require_int(const json& j, const char* field, const char* what) {
  const json& v = require(j, field, what);
  if (!v.is_number_integer())
    throw ParseError(std::string(what) + ": field '" + field + "' must be an integer");
  return v.get<int>();
}

int parse_key_int(const std::string& key, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), value);
  if (ec != std::errc() || ptr != key.data() + key.size())
    throw ParseError(std::string(what) + ": key '" + key + "' is not an integer");
  return value;
}

json gate_to_json(const Gate& g) {
  json out;
  out["kind"] = std::string(gate_name(g.kind));
  json qubits = json::array();
  if (g.arity() >= 1) qubits.push_back(g.qubit0);
  if (g.arity() == 2) qubits.push_back(g.qubit1);
  out["qubits"] = std::move(qubits);
  if (takes_angle(g.kind)) out["param"] = g.param;
  return out;
}

Gate gate_from_json(const json& j) {
  const json& kind_field = require(j, "kind", "circuit gate");
  if (!kind_field.is_string()) throw ParseError("circuit gate: 'kind' must be a string");
  const auto kind = gate_kind_from_name(kind_field.get<std::string>());
  if (!kind)
    throw ParseError("circuit gate: unsupported gate '" + kind_field.get<std::string>() + "'");

  const json& qubits = require(j, "qubits", "circuit gate");
  if (!qubits.is_array()) throw ParseError("circuit gate: 'qubits' must be an array");

  Gate g;
  g.kind = *kind;
  const int want = g.arity();
  if (static_cast<int>(qubits.size()) != want)
    throw ParseError("circuit gate: '" + std::string(gate_name(*kind)) + "' expects " +
                     std::to_string(want) + " qubit operand(s)");
  if (want >= 1) g.qubit0 = qubits[0].get<int>();
  if (want == 2) g.qubit1 = qubits[1].get<int>();

  if (j.contains("param")) {
    if (!takes_angle(*kind))
      throw ParseError("circuit gate: '" + std::string(gate_name(*kind)) +
                       "' does not take a parameter");
    g.param = j["param"].get<double>();
  } else if (takes_angle(*kind)) {
    throw ParseError("circuit gate: '" + std::string(gate_name(*kind)) +
                     "' requires a 'param' angle");
  }
  return g;
}

json layout_to_json(const Layout& layout) { return json(layout.mapping); }

Layout layout_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": layout must be an array");
  Layout l;
  for (const auto& v : j) l.mapping.push_back(v.get<int>());
  return l;
}

json qic_to_json_obj(const Qic& qic) {
  json out;
  out["num_qubits"] = qic.num_qubits;
  json pairs = json::array();
  for (const auto& [pair, count] : qic.pair_counts.entries)
    pairs.push_back(json::array({pair.first, pair.second, count}));
  out["pairs"] = std::move(pairs);
  json layers = json::array();
  for (const auto& level : qic.layers) {
    json jl = json::array();
    for (const auto& [a, b] : level) jl.push_back(json::array({a, b}));
    layers.push_back(std::move(jl));
  }
  out["layers"] = std::move(layers);

  bool contiguous = static_cast<int>(qic.qubits.size()) == qic.num_qubits;
  if (contiguous)
    for (std::size_t i = 0; i < qic.qubits.size(); ++i)
      contiguous = contiguous && qic.qubits[i] == static_cast<int>(i);
  if (!contiguous) out["qubits"] = json(qic.qubits);
  return out;
}

Qic qic_from_json_obj(const json& j) {
  Qic qic;
  qic.num_qubits = require_int(j, "num_qubits", "qic");
  const json& pairs = require(j, "pairs", "qic");
  if (!pairs.is_array()) throw ParseError("qic: 'pairs' must be an array");
  for (const auto& entry : pairs) {
    if (!entry.is_array() || entry.size() != 3)
      throw ParseError("qic: each pair must be [a, b, count]");
    qic.pair_counts.add(entry[0].get<int>(), entry[1].get<int>(), entry[2].get<int>());
  }
  const json& layers = require(j, "layers", "qic");
  if (!layers.is_array()) throw ParseError("qic: 'layers' must be an array");
  for (const auto& level : layers) {
    std::vector<QubitPair> parsed;
    for (const auto& pair : level) {
      if (!pair.is_array() || pair.size() != 2) throw ParseError("qic: each layer entry is [a, b]");
      parsed.push_back(sorted_pair(pair[0].get<int>(), pair[1].get<int>()));
    }
    qic.layers.push_back(std::move(parsed));
  }

  if (j.contains("qubits")) {
    for (const auto& v : j["qubits"]) qic.qubits.push_back(v.get<int>());
  } else {
    qic.qubits.resize(static_cast<std::size_t>(qic.num_qubits));
    for (int q = 0; q < qic.num_qubits; ++q) qic.qubits[static_cast<std::size_t>(q)] = q;
  }
  qic.no_two_qubit_gates = qic.pair_counts.empty();
  try {
    qic.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("qic: ") + e.what());
  }
  return qic;
}

json noise_to_json_obj(const NoiseSnapshot& noise) {
  json out;
  json p1 = json::object(), p2 = json::object(), pm = json::object();
  for (const auto& [q, p] : noise.p1) p1[std::to_string(q)] = p;
  for (const auto& [q, p] : noise.pm) pm[std::to_string(q)] = p;
  for (const auto& [edge, p] : noise.p2)
    p2[std::to_string(edge.first) + "-" + std::to_string(edge.second)] = p;
  out["p1"] = std::move(p1);
  out["p2"] = std::move(p2);
  out["pm"] = std::move(pm);
  out["time"] = noise.time;
  return out;
}

NoiseSnapshot noise_from_json_obj(const json& j) {
  NoiseSnapshot noise;
  const json& p1 = require(j, "p1", "noise");
  const json& p2 = require(j, "p2", "noise");
  const json& pm = require(j, "pm", "noise");
  for (const auto& [key, value] : p1.items()) noise.p1[parse_key_int(key, "noise p1")] = value.get<double>();
  for (const auto& [key, value] : pm.items()) noise.pm[parse_key_int(key, "noise pm")] = value.get<double>();
  for (const auto& [key, value] : p2.items()) {
    const std::size_t dash = key.find('-');
    if (dash == std::string::npos)
      throw ParseError("noise p2: key '" + key + "' must look like \"a-b\"");
    const int a = parse_key_int(key.substr(0, dash), "noise p2");
    const int b = parse_key_int(key.substr(dash + 1), "noise p2");
    noise.p2[sorted_pair(a, b)] = value.get<double>();
  }
  if (j.contains("time")) noise.time = j["time"].get<double>();
  noise.validate();
  return noise;
}

json plan_to_json_obj(const PartitionPlan& plan) {
  json out;
  out["mode"] = plan.mode == PartitionMode::Disjoint ? "disjoint" : "distortion";
  if (plan.mode == PartitionMode::Distortion) out["threshold"] = plan.threshold;
  out["seed"] = plan.seed;
  out["permutations"] = plan.permutations;
  out["chosen_permutation"] = plan.chosen_permutation;

  json sets = json::array();
  for (const auto& set : plan.sets) {
    json js = json::array();
    for (const Layout& layout : set) js.push_back(layout_to_json(layout));
    sets.push_back(std::move(js));
  }
  out["sets"] = std::move(sets);

  json unions = json::array();
  for (const Qic& qic : plan.union_qics) unions.push_back(qic_to_json_obj(qic));
  out["union_qics"] = std::move(unions);
  out["distortions"] = json(plan.distortions);
  return out;
}

}  // namespace

CircuitFormat sniff_circuit_format(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    return c == 'O' ? CircuitFormat::Qasm2 : CircuitFormat::Json;
  }
  return CircuitFormat::Json;
}

UserCircuit parse_circuit(std::string_view text, CircuitFormat format) {
  if (format == CircuitFormat::Qasm2) return parse_qasm2(text);

  const json j = parse_json_text(text, "circuit");
  UserCircuit circuit;
  circuit.num_qubits = require_int(j, "num_qubits", "circuit");
  const json& gates = require(j, "gates", "circuit");
  if (!gates.is_array()) throw ParseError("circuit: 'gates' must be an array");
  for (const auto& g : gates) circuit.gates.push_back(gate_from_json(g));
  circuit.validate();
  return circuit;
}

std::string circuit_to_json(const UserCircuit& circuit) {
  json out;
  out["num_qubits"] = circuit.num_qubits;
  json gates = json::array();
  for (const Gate& g : circuit.gates) gates.push_back(gate_to_json(g));
  out["gates"] = std::move(gates);
  return out.dump(2);
}

std::string qic_to_json(const Qic& qic) { return qic_to_json_obj(qic).dump(2); }

Qic qic_from_json(std::string_view text) {
  return qic_from_json_obj(parse_json_text(text, "qic"));
}

std::string coupling_to_json(const CouplingMap& map) {
  json out;
  out["num_qubits"] = map.num_qubits;
  json edges = json::array();
  for (const auto& [a, b] : map.edges) edges.push_back(json::array({a, b}));
  out["edges"] = std::move(edges);
  return out.dump(2);
}

CouplingMap coupling_from_json(std::string_view text) {
  const json j = parse_json_text(text, "coupling map");
  CouplingMap map;
  map.num_qubits = require_int(j, "num_qubits", "coupling map");
  const json& edges = require(j, "edges", "coupling map");
  if (!edges.is_array()) throw ParseError("coupling map: 'edges' must be an array");
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) throw ParseError("coupling map: each edge is [a, b]");
    map.edges.push_back(sorted_pair(e[0].get<int>(), e[1].get<int>()));
  }
  map.normalize();
  map.validate();
  return map;
}

std::string layouts_to_json(const std::vector<Layout>& layouts) {
  json out = json::array();
  for (const Layout& layout : layouts) out.push_back(layout_to_json(layout));
  return out.dump(2);
}

std::vector<Layout> layouts_from_json(std::string_view text) {
  const json j = parse_json_text(text, "layouts");
  if (!j.is_array()) throw ParseError("layouts: expected a JSON array");
  std::vector<Layout> layouts;
  for (const auto& entry : j) layouts.push_back(layout_from_json(entry, "layouts"));
  return layouts;
}

std::string noise_to_json(const NoiseSnapshot& noise) { return noise_to_json_obj(noise).dump(2); }

NoiseSnapshot noise_from_json(std::string_view text) {
  return noise_from_json_obj(parse_json_text(text, "noise"));
}

std::string drift_to_json(const DriftSchedule& schedule) {
  json out;
  out["interpolation"] =
      schedule.interpolation == DriftSchedule::Interpolation::Step ? "step" : "linear";
  json snaps = json::array();
  for (const NoiseSnapshot& s : schedule.snapshots) snaps.push_back(noise_to_json_obj(s));
  out["snapshots"] = std::move(snaps);
  return out.dump(2);
}

DriftSchedule drift_from_json(std::string_view text) {
  const json j = parse_json_text(text, "drift");
  DriftSchedule schedule;
  const json& interp = require(j, "interpolation", "drift");
  if (interp == "step")
    schedule.interpolation = DriftSchedule::Interpolation::Step;
  else if (interp == "linear")
    schedule.interpolation = DriftSchedule::Interpolation::Linear;
  else
    throw ParseError("drift: interpolation must be \"step\" or \"linear\"");
  const json& snaps = require(j, "snapshots", "drift");
  if (!snaps.is_array()) throw ParseError("drift: 'snapshots' must be an array");
  for (const auto& s : snaps) schedule.snapshots.push_back(noise_from_json_obj(s));
  schedule.validate();
  return schedule;
}

std::string counts_to_json(const ShotCounts& counts) {
  json out;
  out["width"] = counts.width;
  out["shots"] = counts.shots;
  json histogram = json::object();
  for (const auto& [key, count] : counts.counts) histogram[key] = count;
  out["counts"] = std::move(histogram);
  return out.dump(2);
}

ShotCounts counts_from_json(std::string_view text) {
  const json j = parse_json_text(text, "counts");
  ShotCounts counts;
  counts.width = require_int(j, "width", "counts");
  const json& shots = require(j, "shots", "counts");
  counts.shots = shots.get<long long>();
  const json& histogram = require(j, "counts", "counts");
  long long total = 0;
  for (const auto& [key, value] : histogram.items()) {
    if (static_cast<int>(key.size()) != counts.width ||
        key.find_first_not_of("01") != std::string::npos)
      throw ParseError("counts: key '" + key + "' is not a width-" + std::to_string(counts.width) +
                       " bitstring");
    const long long c = value.get<long long>();
    if (c < 0) throw ParseError("counts: negative count for key '" + key + "'");
    counts.counts[key] = c;
    total += c;
  }
  if (total != counts.shots)
    throw ParseError("counts: histogram sums to " + std::to_string(total) + ", expected " +
                     std::to_string(counts.shots));
  return counts;
}

std::string plan_to_json(const PartitionPlan& plan) { return plan_to_json_obj(plan).dump(2); }

PartitionPlan plan_from_json(std::string_view text) {
  const json j = parse_json_text(text, "plan");
  PartitionPlan plan;
  const json& mode = require(j, "mode", "plan");
  if (mode == "disjoint")
    plan.mode = PartitionMode::Disjoint;
  else if (mode == "distortion")
    plan.mode = PartitionMode::Distortion;
  else
    throw ParseError("plan: mode must be \"disjoint\" or \"distortion\"");
  if (j.contains("threshold")) plan.threshold = j["threshold"].get<int>();
  plan.seed = require(j, "seed", "plan").get<std::uint64_t>();
  plan.permutations = require_int(j, "permutations", "plan");
  plan.chosen_permutation = require_int(j, "chosen_permutation", "plan");

  const json& sets = require(j, "sets", "plan");
  for (const auto& set : sets) {
    std::vector<Layout> parsed;
    for (const auto& layout : set) parsed.push_back(layout_from_json(layout, "plan"));
    plan.sets.push_back(std::move(parsed));
  }
  if (j.contains("union_qics"))
    for (const auto& qic : j["union_qics"]) plan.union_qics.push_back(qic_from_json_obj(qic));
  if (j.contains("distortions"))
    plan.distortions = j["distortions"].get<std::vector<std::vector<int>>>();
  return plan;
}

std::string selection_to_json(const SelectionReport& report) {
  json out;
  out["chosen"] = layout_to_json(report.chosen);
  json ranked = json::array();
  for (const LayoutScore& s : report.ranked) {
    json row;
    row["layout"] = layout_to_json(s.layout);
    row["qic_score_counts"] = s.qic_score_counts;
    row["qic_score_zz"] = s.qic_score_zz;
    row["mapomatic_score"] = s.mapomatic_score;
    row["shots"] = s.shots;
    ranked.push_back(std::move(row));
  }
  out["ranked"] = std::move(ranked);
  json mm = json::array();
  for (const Layout& layout : report.mapomatic_ranking) mm.push_back(layout_to_json(layout));
  out["mapomatic_ranking"] = std::move(mm);
  out["executions_used"] = report.executions_used;
  out["executions_basic"] = report.executions_basic;
  out["executions_jit"] = report.executions_jit;
  out["reduction_vs_jit"] = report.reduction_vs_jit;
  out["partition"] = plan_to_json_obj(report.plan);
  return out.dump(2);
}

namespace {

std::string format_layout_csv(const Layout& layout) {
  std::ostringstream os;
  for (int i = 0; i < layout.size(); ++i) {
    if (i) os << ' ';
    os << layout[i];
  }
  return os.str();
}

}  // namespace

std::string selection_to_csv(const SelectionReport& report) {
  std::ostringstream os;
  os << "rank,layout,qic_score_counts,qic_score_zz,mapomatic_score,shots\n";
  for (std::size_t i = 0; i < report.ranked.size(); ++i) {
    const LayoutScore& s = report.ranked[i];
    os << (i + 1) << ",\"" << format_layout_csv(s.layout) << "\"," << s.qic_score_counts << ','
       << s.qic_score_zz << ',' << s.mapomatic_score << ',' << s.shots << '\n';
  }
  os << "\nmetric,value\n";
  os << "chosen,\"" << format_layout_csv(report.chosen) << "\"\n";
  if (!report.mapomatic_ranking.empty())
    os << "mapomatic_best,\"" << format_layout_csv(report.mapomatic_ranking.front()) << "\"\n";
  os << "executions_used," << report.executions_used << '\n';
  os << "executions_basic," << report.executions_basic << '\n';
  os << "executions_jit," << report.executions_jit << '\n';
  os << "reduction_vs_jit," << report.reduction_vs_jit << '\n';
  return os.str();
}

std::string resource_to_json(const ResourceReport& report) {
  json out;
  out["jit_baseline"] = report.jit_baseline;
  json rows = json::array();
  for (const ResourceRow& row : report.rows) {
    json jr;
    jr["label"] = row.label;
    jr["executions"] = row.executions;
    jr["reduction_vs_jit"] = row.reduction_vs_jit;
    rows.push_back(std::move(jr));
  }
  out["rows"] = std::move(rows);
  out["mean_reduction"] = report.mean_reduction;
  return out.dump(2);
}

std::string resource_to_csv(const ResourceReport& report) {
  std::ostringstream os;
  os << "label,executions,jit_baseline,reduction_vs_jit\n";
  for (const ResourceRow& row : report.rows)
    os << row.label << ',' << row.executions << ',' << report.jit_baseline << ','
       << row.reduction_vs_jit << '\n';
  os << "mean,,," << report.mean_reduction << '\n';
  return os.str();
}

}  // namespace qicsel
