//
// This file is part of the qicsel library released under the Apache-2.0 license.
// See README.md for more information.
//

#pragma once

#include <map>
#include <string>
#include <vector>

#include "qicsel/circuit.hpp"
#include "qicsel/coupling.hpp"

namespace qicsel {

/// Multiset of unordered qubit pairs -> CNOT count.
struct PairCounts {
  std::map<QubitPair, int> entries;

  void add(int a, int b, int count = 1);
  int count(int a, int b) const;  // 0 when absent
  bool empty() const { return entries.empty(); }
  long long total() const;
  /// Number of CNOT endpoints incident to each qubit.
  std::map<int, int> endpoint_counts() const;

  friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

/// Quality indicator circuit: a CNOT network sandwiched between two Hadamard
/// layers on its active qubits. The noise-free readout is all-zeros.
struct Qic {
  int num_qubits = 0;        // width of the register it addresses
  std::vector<int> qubits;   // sorted active qubits (Hadamards + measurement)
  PairCounts pair_counts;
  std::vector<std::vector<QubitPair>> layers;  // scheduled CNOT levels
  bool no_two_qubit_gates = false;  // source circuit had no two-qubit gate

  std::string ideal_outcome() const { return std::string(static_cast<std::size_t>(num_qubits), '0'); }
  int two_qubit_depth() const { return static_cast<int>(layers.size()); }
  long long cnot_count() const { return pair_counts.total(); }

  /// Checks the structural invariants: layers flatten back to pair_counts,
  /// no qubit repeats within a level, pair endpoints are active qubits.
  void validate() const;

  friend bool operator==(const Qic&, const Qic&) = default;
};

/// Census of two-qubit gates reduced by the minimum pair count (each entry
/// becomes ceil(count / min)), scheduled into CNOT levels and sandwiched
/// between Hadamard layers on every circuit qubit. A circuit without
/// two-qubit gates yields an empty network with no_two_qubit_gates set; such
/// a probe senses only SPAM and single-qubit noise.
Qic build_qic(const UserCircuit& circuit);

/// Greedy earliest-fit packing of the CNOT multiset into levels with no qubit
/// repeated per level. Pairs are placed in ascending pair order, repeated
/// CNOTs on a pair in consecutive passes, so the schedule is deterministic.
/// The level count is at least the maximum per-qubit CNOT multiplicity and at
/// most twice that bound.
std::vector<std::vector<QubitPair>> schedule_layers(const PairCounts& pair_counts, int num_qubits);

/// Expands a QIC into an explicit gate list (H layer, CNOT levels, H layer).
/// CNOT controls sit on the smaller qubit index.
UserCircuit qic_to_circuit(const Qic& qic);

/// Rewrites a virtual-register QIC onto physical qubits through a layout.
Qic map_qic(const Qic& qic, const Layout& layout, int device_num_qubits);

/// True iff noiseless stabilizer simulation of the QIC maps |0...0> back to
/// |0...0> with certainty. Holds for every build_qic output.
bool qic_is_identity_witness(const Qic& qic);

/// Same check for an arbitrary Clifford gate list.
bool qic_is_identity_witness(const UserCircuit& clifford_circuit);

}  // namespace qicsel
