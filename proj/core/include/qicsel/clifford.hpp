//
// This file is part of the qicsel library released under the Apache-2.0 license.
// See README.md for more information.
//

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qicsel/circuit.hpp"

namespace qicsel {

bool is_clifford_gate(GateKind kind);

/// Aaronson-Gottesman stabilizer tableau restricted to the gate set
/// {H, X, Z, CX, CZ, SWAP}. Row i < n holds destabilizer i, row n + i holds
/// stabilizer i.
class StabilizerTableau {
 public:
  explicit StabilizerTableau(int num_qubits);

  int num_qubits() const { return n_; }

  void apply_h(int q);
  void apply_x(int q);
  void apply_z(int q);
  void apply_cx(int control, int target);
  void apply_cz(int a, int b);
  void apply_swap(int a, int b);

  /// Applies a Clifford gate; MeasureAll is a no-op (readout is queried via
  /// deterministic_outcome). Throws std::invalid_argument for non-Clifford
  /// kinds.
  void apply(const Gate& gate);

  /// All-qubit Z-basis readout when it is deterministic, std::nullopt when
  /// any qubit's outcome is random. Character i of the result is qubit i.
  std::optional<std::string> deterministic_outcome() const;

 private:
  int n_;
  // bit (row, q): x_[row * n_ + q], z_[row * n_ + q]; r_ holds row phases.
  std::vector<std::uint8_t> x_, z_, r_;

  std::uint8_t& x(int row, int q) { return x_[static_cast<std::size_t>(row) * n_ + q]; }
  std::uint8_t& z(int row, int q) { return z_[static_cast<std::size_t>(row) * n_ + q]; }
  std::uint8_t x(int row, int q) const { return x_[static_cast<std::size_t>(row) * n_ + q]; }
  std::uint8_t z(int row, int q) const { return z_[static_cast<std::size_t>(row) * n_ + q]; }
};

/// Runs a Clifford circuit on |0...0> and reports the all-qubit Z readout if
/// deterministic. Throws std::invalid_argument on non-Clifford gates.
std::optional<std::string> deterministic_outcome(const UserCircuit& circuit);

}  // namespace qicsel
