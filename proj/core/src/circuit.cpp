//
// This file is part of the qicsel library released under the Apache-2.0 license.
// See README.md for more information.
//

#include "qicsel/circuit.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qicsel/errors.hpp"

namespace qicsel {

bool is_two_qubit(GateKind kind) {
  switch (kind) {
    case GateKind::CX:
    case GateKind::CZ:
    case GateKind::RZZ:
    case GateKind::Swap:
      return true;
    default:
      return false;
  }
}

bool takes_angle(GateKind kind) {
  return kind == GateKind::RX || kind == GateKind::RZ || kind == GateKind::RZZ;
}

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Z: return "Z";
    case GateKind::RX: return "RX";
    case GateKind::RZ: return "RZ";
    case GateKind::CX: return "CX";
    case GateKind::CZ: return "CZ";
    case GateKind::RZZ: return "RZZ";
    case GateKind::Swap: return "SWAP";
    case GateKind::MeasureAll: return "MEASURE-ALL";
  }
  return "?";
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
  if (name == "H") return GateKind::H;
  if (name == "X") return GateKind::X;
  if (name == "Z") return GateKind::Z;
  if (name == "RX") return GateKind::RX;
  if (name == "RZ") return GateKind::RZ;
  if (name == "CX") return GateKind::CX;
  if (name == "CZ") return GateKind::CZ;
  if (name == "RZZ") return GateKind::RZZ;
  if (name == "SWAP") return GateKind::Swap;
  if (name == "MEASURE-ALL") return GateKind::MeasureAll;
  return std::nullopt;
}

int Gate::arity() const {
  if (kind == GateKind::MeasureAll) return 0;
  return is_two_qubit(kind) ? 2 : 1;
}

void UserCircuit::validate() const {
  if (num_qubits < 0) throw ParseError("circuit: num_qubits must be non-negative");
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    const std::string at = "gate " + std::to_string(i) + " (" + std::string(gate_name(g.kind)) + ")";
    const int arity = g.arity();
    auto check_qubit = [&](int q) {
      if (q < 0 || q >= num_qubits)
        throw ParseError(at + ": qubit index " + std::to_string(q) + " out of range [0, " +
                         std::to_string(num_qubits) + ")");
    };
    if (arity >= 1) check_qubit(g.qubit0);
    if (arity == 2) {
      check_qubit(g.qubit1);
      if (g.qubit0 == g.qubit1)
        throw ParseError(at + ": two-qubit gate repeats qubit " + std::to_string(g.qubit0));
    }
    if (arity == 0 && (g.qubit0 != -1 || g.qubit1 != -1))
      throw ParseError(at + ": carries qubit operands");
    if (arity == 1 && g.qubit1 != -1) throw ParseError(at + ": too many qubit operands");
    if (!takes_angle(g.kind) && g.param != 0.0)
      throw ParseError(at + ": does not take an angle parameter");
  }
}

UserCircuit make_qaoa_path(int num_qubits, int layers, std::span<const double> gammas,
                           std::span<const double> betas) {
  if (num_qubits < 2) throw std::invalid_argument("make_qaoa_path: need at least 2 qubits");
  if (layers < 1) throw std::invalid_argument("make_qaoa_path: need at least 1 layer");
  if (static_cast<int>(gammas.size()) != layers || static_cast<int>(betas.size()) != layers)
    throw std::invalid_argument("make_qaoa_path: gamma/beta length must equal the layer count");

  UserCircuit c;
  c.num_qubits = num_qubits;
  for (int q = 0; q < num_qubits; ++q) c.gates.push_back(Gate::h(q));
  for (int layer = 0; layer < layers; ++layer) {
    // RZZ on every adjacent pair; commuting gates emitted brickwork-style
    // (even pairs, then odd pairs) so the layer levels to depth two.
    for (int parity = 0; parity < 2; ++parity)
      for (int i = parity; i + 1 < num_qubits; i += 2)
        c.gates.push_back(Gate::rzz(i, i + 1, gammas[static_cast<std::size_t>(layer)]));
    for (int q = 0; q < num_qubits; ++q)
      c.gates.push_back(Gate::rx(q, betas[static_cast<std::size_t>(layer)]));
  }
  return c;
}

namespace {

Gate inverse_of(const Gate& g) {
  Gate inv = g;
  if (takes_angle(g.kind)) inv.param = -g.param;
  return inv;  // H, X, Z, CX, CZ, SWAP are self-inverse
}

}  // namespace

UserCircuit make_mirror(const UserCircuit& circuit) {
  for (const Gate& g : circuit.gates)
    if (g.kind == GateKind::MeasureAll)
      throw std::invalid_argument("make_mirror: circuit contains a measurement");

  UserCircuit mirror = circuit;
  mirror.gates.reserve(circuit.gates.size() * 2);
  for (auto it = circuit.gates.rbegin(); it != circuit.gates.rend(); ++it)
    mirror.gates.push_back(inverse_of(*it));
  return mirror;
}

CircuitMetrics metrics(const UserCircuit& circuit) {
  CircuitMetrics m;
  std::vector<int> frontier(static_cast<std::size_t>(circuit.num_qubits), 0);
  std::vector<char> level_has_2q;

  for (const Gate& g : circuit.gates) {
    const int duration = g.kind == GateKind::RZZ ? 2 : 1;
    int start = 0;
    if (g.kind == GateKind::MeasureAll) {
      for (int f : frontier) start = std::max(start, f);
      for (int& f : frontier) f = start + 1;
    } else {
      start = frontier[static_cast<std::size_t>(g.qubit0)];
      if (g.two_qubit()) start = std::max(start, frontier[static_cast<std::size_t>(g.qubit1)]);
      frontier[static_cast<std::size_t>(g.qubit0)] = start + duration;
      if (g.two_qubit()) {
        frontier[static_cast<std::size_t>(g.qubit1)] = start + duration;
        ++m.two_qubit_gate_count;
        if (static_cast<int>(level_has_2q.size()) < start + duration)
          level_has_2q.resize(static_cast<std::size_t>(start + duration), 0);
        for (int lvl = start; lvl < start + duration; ++lvl)
          level_has_2q[static_cast<std::size_t>(lvl)] = 1;
      }
    }
  }

  for (int f : frontier) m.depth = std::max(m.depth, f);
  for (char flag : level_has_2q) m.two_qubit_depth += flag;
  return m;
}

}  // namespace qicsel
