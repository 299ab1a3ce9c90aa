//
// This file is part of the qicsel library released under the Apache-2.0 license.
// See README.md for more information.
//

#include "qicsel/clifford.hpp"

#include <stdexcept>

namespace qicsel {

bool is_clifford_gate(GateKind kind) {
  switch (kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::Z:
    case GateKind::CX:
    case GateKind::CZ:
    case GateKind::Swap:
    case GateKind::MeasureAll:
      return true;
    default:
      return false;
  }
}

StabilizerTableau::StabilizerTableau(int num_qubits) : n_(num_qubits) {
  if (num_qubits < 0) throw std::invalid_argument("StabilizerTableau: negative qubit count");
  const std::size_t cells = 2 * static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_);
  x_.assign(cells, 0);
  z_.assign(cells, 0);
  r_.assign(2 * static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i) {
    x(i, i) = 1;           // destabilizer i = X_i
    z(n_ + i, i) = 1;      // stabilizer i = Z_i
  }
}

void StabilizerTableau::apply_h(int q) {
  for (int row = 0; row < 2 * n_; ++row) {
    r_[static_cast<std::size_t>(row)] ^= static_cast<std::uint8_t>(x(row, q) & z(row, q));
    std::swap(x(row, q), z(row, q));
  }
}

void StabilizerTableau::apply_x(int q) {
  for (int row = 0; row < 2 * n_; ++row) r_[static_cast<std::size_t>(row)] ^= z(row, q);
}

void StabilizerTableau::apply_z(int q) {
  for (int row = 0; row < 2 * n_; ++row) r_[static_cast<std::size_t>(row)] ^= x(row, q);
}

void StabilizerTableau::apply_cx(int control, int target) {
  for (int row = 0; row < 2 * n_; ++row) {
    r_[static_cast<std::size_t>(row)] ^= static_cast<std::uint8_t>(
        x(row, control) & z(row, target) & (x(row, target) ^ z(row, control) ^ 1));
    x(row, target) ^= x(row, control);
    z(row, control) ^= z(row, target);
  }
}

void StabilizerTableau::apply_cz(int a, int b) {
  apply_h(b);
  apply_cx(a, b);
  apply_h(b);
}

void StabilizerTableau::apply_swap(int a, int b) {
  for (int row = 0; row < 2 * n_; ++row) {
    std::swap(x(row, a), x(row, b));
    std::swap(z(row, a), z(row, b));
  }
}

void StabilizerTableau::apply(const Gate& gate) {
  switch (gate.kind) {
    case GateKind::H: apply_h(gate.qubit0); return;
    case GateKind::X: apply_x(gate.qubit0); return;
    case GateKind::Z: apply_z(gate.qubit0); return;
    case GateKind::CX: apply_cx(gate.qubit0, gate.qubit1); return;
    case GateKind::CZ: apply_cz(gate.qubit0, gate.qubit1); return;
    case GateKind::Swap: apply_swap(gate.qubit0, gate.qubit1); return;
    case GateKind::MeasureAll: return;
    default:
      throw std::invalid_argument("StabilizerTableau: gate '" + std::string(gate_name(gate.kind)) +
                                  "' is not in the Clifford subset");
  }
}

namespace {

// Phase exponent contribution of multiplying single-qubit Paulis
// (x1,z1) * (x2,z2), in units of i (mod 4).
int pauli_phase(int x1, int z1, int x2, int z2) {
  if (x1 == 0 && z1 == 0) return 0;
  if (x1 == 1 && z1 == 1) return z2 - x2;              // Y
  if (x1 == 1) return z2 * (2 * x2 - 1);               // X
  return x2 * (1 - 2 * z2);                            // Z
}

}  // namespace

std::optional<std::string> StabilizerTableau::deterministic_outcome() const {
  // Outcome of measuring Z_q is random iff some stabilizer has an X component
  // on q.
  for (int q = 0; q < n_; ++q)
    for (int row = n_; row < 2 * n_; ++row)
      if (x(row, q)) return std::nullopt;

  std::string outcome(static_cast<std::size_t>(n_), '0');
  std::vector<std::uint8_t> sx(static_cast<std::size_t>(n_));
  std::vector<std::uint8_t> sz(static_cast<std::size_t>(n_));
  for (int q = 0; q < n_; ++q) {
    // Accumulate the product of stabilizers indicated by destabilizer X
    // components on q; its phase is the measured bit.
    std::fill(sx.begin(), sx.end(), 0);
    std::fill(sz.begin(), sz.end(), 0);
    int phase = 0;  // units of i, mod 4
    for (int i = 0; i < n_; ++i) {
      if (!x(i, q)) continue;
      const int row = n_ + i;
      phase += 2 * r_[static_cast<std::size_t>(row)];
      for (int k = 0; k < n_; ++k) {
        phase += pauli_phase(sx[static_cast<std::size_t>(k)], sz[static_cast<std::size_t>(k)],
                             x(row, k), z(row, k));
        sx[static_cast<std::size_t>(k)] ^= x(row, k);
        sz[static_cast<std::size_t>(k)] ^= z(row, k);
      }
    }
    phase = ((phase % 4) + 4) % 4;
    outcome[static_cast<std::size_t>(q)] = phase == 2 ? '1' : '0';
  }
  return outcome;
}

std::optional<std::string> deterministic_outcome(const UserCircuit& circuit) {
  StabilizerTableau tableau(circuit.num_qubits);
  for (const Gate& g : circuit.gates) tableau.apply(g);
  return tableau.deterministic_outcome();
}

}  // namespace qicsel
