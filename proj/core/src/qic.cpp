//
// This file is part of the qicsel library released under the Apache-2.0 license.
// See README.md for more information.
//

#include "qicsel/qic.hpp"

#include <algorithm>
#include <stdexcept>

#include "qicsel/clifford.hpp"

namespace qicsel {

void PairCounts::add(int a, int b, int count) {
  if (a == b) throw std::invalid_argument("PairCounts: pair endpoints must differ");
  if (count <= 0) throw std::invalid_argument("PairCounts: counts must be positive");
  entries[sorted_pair(a, b)] += count;
}

int PairCounts::count(int a, int b) const {
  auto it = entries.find(sorted_pair(a, b));
  return it == entries.end() ? 0 : it->second;
}

long long PairCounts::total() const {
  long long sum = 0;
  for (const auto& [pair, count] : entries) sum += count;
  return sum;
}

std::map<int, int> PairCounts::endpoint_counts() const {
  std::map<int, int> incident;
  for (const auto& [pair, count] : entries) {
    incident[pair.first] += count;
    incident[pair.second] += count;
  }
  return incident;
}

void Qic::validate() const {
  if (!std::is_sorted(qubits.begin(), qubits.end()) ||
      std::adjacent_find(qubits.begin(), qubits.end()) != qubits.end())
    throw std::invalid_argument("Qic: active qubits must be sorted and unique");
  for (int q : qubits)
    if (q < 0 || q >= num_qubits) throw std::invalid_argument("Qic: active qubit out of range");

  PairCounts flattened;
  for (const auto& level : layers) {
    std::vector<int> seen;
    for (const auto& [a, b] : level) {
      if (!std::binary_search(qubits.begin(), qubits.end(), a) ||
          !std::binary_search(qubits.begin(), qubits.end(), b))
        throw std::invalid_argument("Qic: CNOT endpoint is not an active qubit");
      for (int q : {a, b}) {
        if (std::find(seen.begin(), seen.end(), q) != seen.end())
          throw std::invalid_argument("Qic: qubit repeated within a level");
        seen.push_back(q);
      }
      flattened.add(a, b);
    }
  }
  if (!(flattened == pair_counts))
    throw std::invalid_argument("Qic: layers do not flatten back to pair_counts");
}

std::vector<std::vector<QubitPair>> schedule_layers(const PairCounts& pair_counts,
                                                    int num_qubits) {
  std::vector<std::vector<QubitPair>> levels;
  // busy[level] marks qubits taken in that level
  std::vector<std::vector<char>> busy;
  auto ensure_level = [&](std::size_t lvl) {
    while (levels.size() <= lvl) {
      levels.emplace_back();
      busy.emplace_back(static_cast<std::size_t>(num_qubits), 0);
    }
  };

  for (const auto& [pair, count] : pair_counts.entries) {
    std::size_t from = 0;  // repeats of the same pair must land in later levels
    for (int rep = 0; rep < count; ++rep) {
      std::size_t lvl = from;
      for (;; ++lvl) {
        ensure_level(lvl);
        if (!busy[lvl][static_cast<std::size_t>(pair.first)] &&
            !busy[lvl][static_cast<std::size_t>(pair.second)])
          break;
      }
      levels[lvl].push_back(pair);
      busy[lvl][static_cast<std::size_t>(pair.first)] = 1;
      busy[lvl][static_cast<std::size_t>(pair.second)] = 1;
      from = lvl + 1;
    }
  }
  return levels;
}

Qic build_qic(const UserCircuit& circuit) {
  Qic qic;
  qic.num_qubits = circuit.num_qubits;
  qic.qubits.resize(static_cast<std::size_t>(circuit.num_qubits));
  for (int q = 0; q < circuit.num_qubits; ++q) qic.qubits[static_cast<std::size_t>(q)] = q;

  for (const Gate& g : circuit.gates)
    if (g.two_qubit()) qic.pair_counts.add(g.qubit0, g.qubit1);

  if (qic.pair_counts.empty()) {
    qic.no_two_qubit_gates = true;
    return qic;  // Hadamard sandwich only: senses SPAM and one-qubit noise
  }

  int min_count = 0;
  for (const auto& [pair, count] : qic.pair_counts.entries)
    min_count = min_count == 0 ? count : std::min(min_count, count);
  for (auto& [pair, count] : qic.pair_counts.entries)
    count = (count + min_count - 1) / min_count;

  qic.layers = schedule_layers(qic.pair_counts, qic.num_qubits);
  return qic;
}

UserCircuit qic_to_circuit(const Qic& qic) {
  UserCircuit c;
  c.num_qubits = qic.num_qubits;
  for (int q : qic.qubits) c.gates.push_back(Gate::h(q));
  for (const auto& level : qic.layers)
    for (const auto& [a, b] : level) c.gates.push_back(Gate::cx(a, b));
  for (int q : qic.qubits) c.gates.push_back(Gate::h(q));
  return c;
}

Qic map_qic(const Qic& qic, const Layout& layout, int device_num_qubits) {
  if (layout.size() != static_cast<int>(qic.qubits.size()))
    throw std::invalid_argument("map_qic: layout width differs from the QIC's active qubit count");
  for (int phys : layout)
    if (phys < 0 || phys >= device_num_qubits)
      throw std::invalid_argument("map_qic: physical qubit out of range");

  Qic mapped;
  mapped.num_qubits = device_num_qubits;
  mapped.no_two_qubit_gates = qic.no_two_qubit_gates;
  mapped.qubits.assign(layout.begin(), layout.end());
  std::sort(mapped.qubits.begin(), mapped.qubits.end());
  if (std::adjacent_find(mapped.qubits.begin(), mapped.qubits.end()) != mapped.qubits.end())
    throw std::invalid_argument("map_qic: layout repeats a physical qubit");

  // Virtual index -> position in qic.qubits; layout order follows that list.
  auto physical_of = [&](int virtual_qubit) {
    auto it = std::lower_bound(qic.qubits.begin(), qic.qubits.end(), virtual_qubit);
    return layout[static_cast<int>(it - qic.qubits.begin())];
  };

  for (const auto& [pair, count] : qic.pair_counts.entries)
    mapped.pair_counts.add(physical_of(pair.first), physical_of(pair.second), count);
  for (const auto& level : qic.layers) {
    std::vector<QubitPair> mapped_level;
    mapped_level.reserve(level.size());
    for (const auto& [a, b] : level)
      mapped_level.push_back(sorted_pair(physical_of(a), physical_of(b)));
    mapped.layers.push_back(std::move(mapped_level));
  }
  return mapped;
}

bool qic_is_identity_witness(const UserCircuit& clifford_circuit) {
  const auto outcome = deterministic_outcome(clifford_circuit);
  if (!outcome) return false;
  return outcome->find('1') == std::string::npos;
}

bool qic_is_identity_witness(const Qic& qic) {
  return qic_is_identity_witness(qic_to_circuit(qic));
}

}  // namespace qicsel
