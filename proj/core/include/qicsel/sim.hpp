//
// This file is part of the qicsel library released under the Apache-2.0 license.
// See README.md for more information.
//

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qicsel/circuit.hpp"
#include "qicsel/noise.hpp"
#include "qicsel/qic.hpp"

namespace qicsel {

/// Measured-bitstring histogram. Character i of each key is qubit i of the
/// register (left origin).
struct ShotCounts {
  int width = 0;
  long long shots = 0;
  std::map<std::string, long long> counts;

  long long count_of(const std::string& key) const;
  std::string all_zeros_key() const { return std::string(static_cast<std::size_t>(width), '0'); }

  friend bool operator==(const ShotCounts&, const ShotCounts&) = default;
};

/// Pauli-frame Monte Carlo over a Clifford circuit whose noise-free readout is
/// deterministic. Per shot, a Pauli error frame is propagated through the
/// circuit; after each one-qubit gate a uniform non-identity Pauli is injected
/// with probability p1, after each two-qubit gate a uniform non-identity
/// two-qubit Pauli (15 choices) with probability p2; measured bits then flip
/// with probability pm. Qubits outside `measured` report '0'.
///
/// Shots are drawn in fixed-size chunks with seeds derived from (seed, chunk),
/// so the histogram is identical for any worker count.
///
/// Throws SimulationError for missing noise entries or a non-deterministic
/// reference outcome, std::invalid_argument for non-Clifford gates.
ShotCounts run_clifford_circuit(const UserCircuit& circuit, const std::vector<int>& measured,
                                const NoiseSnapshot& noise, long long shots, std::uint64_t seed,
                                int workers = 1);

/// Executes a QIC: its active qubits carry the Hadamard sandwich and are
/// measured; the rest of the register stays idle and reads '0'.
ShotCounts run_qic(const Qic& qic, const NoiseSnapshot& noise, long long shots,
                   std::uint64_t seed, int workers = 1);

/// Projects each key onto the kept positions in the given order and sums
/// counts. Throws std::invalid_argument for an empty, repeated or
/// out-of-range keep list.
ShotCounts marginalize(const ShotCounts& counts, const std::vector<int>& keep);

}  // namespace qicsel
