//
// This file is part of the qicsel library released under the Apache-2.0 license.
// See README.md for more information.
//

#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace qicsel {

enum class GateKind { H, X, Z, RX, RZ, CX, CZ, RZZ, Swap, MeasureAll };

bool is_two_qubit(GateKind kind);
bool takes_angle(GateKind kind);
std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);

/// One circuit instruction. MeasureAll addresses the whole register and
/// carries no qubit operands.
struct Gate {
  GateKind kind = GateKind::H;
  int qubit0 = -1;
  int qubit1 = -1;
  double param = 0.0;

  int arity() const;
  bool two_qubit() const { return is_two_qubit(kind); }

  static Gate h(int q) { return {GateKind::H, q, -1, 0.0}; }
  static Gate x(int q) { return {GateKind::X, q, -1, 0.0}; }
  static Gate z(int q) { return {GateKind::Z, q, -1, 0.0}; }
  static Gate rx(int q, double angle) { return {GateKind::RX, q, -1, angle}; }
  static Gate rz(int q, double angle) { return {GateKind::RZ, q, -1, angle}; }
  static Gate cx(int control, int target) { return {GateKind::CX, control, target, 0.0}; }
  static Gate cz(int a, int b) { return {GateKind::CZ, a, b, 0.0}; }
  static Gate rzz(int a, int b, double angle) { return {GateKind::RZZ, a, b, angle}; }
  static Gate swap(int a, int b) { return {GateKind::Swap, a, b, 0.0}; }
  static Gate measure_all() { return {GateKind::MeasureAll, -1, -1, 0.0}; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Gate-list intermediate representation over virtual qubit indices.
struct UserCircuit {
  int num_qubits = 0;
  std::vector<Gate> gates;

  /// Throws ParseError if a gate references a qubit out of range, a two-qubit
  /// gate repeats an operand, or an angle is attached to the wrong kind.
  void validate() const;

  friend bool operator==(const UserCircuit&, const UserCircuit&) = default;
};

struct CircuitMetrics {
  int depth = 0;
  int two_qubit_depth = 0;
  int two_qubit_gate_count = 0;

  friend bool operator==(const CircuitMetrics&, const CircuitMetrics&) = default;
};

/// QAOA-style cost/mixer ladder on the path 0-1-...-(n-1). Each layer applies
/// RZZ on every adjacent pair (even pairs first, then odd pairs, so the
/// commuting layer packs to its drawn two-level depth) followed by RX on all
/// qubits.
UserCircuit make_qaoa_path(int num_qubits, int layers, std::span<const double> gammas,
                           std::span<const double> betas);

/// The circuit followed by its exact inverse; the noise-free output state is
/// |0...0>. Throws std::invalid_argument if the circuit measures.
UserCircuit make_mirror(const UserCircuit& circuit);

/// Greedy as-soon-as-possible leveling. RZZ occupies two time steps (its
/// standard two-CNOT decomposition); two_qubit_depth counts levels holding at
/// least one two-qubit gate.
CircuitMetrics metrics(const UserCircuit& circuit);

}  // namespace qicsel
