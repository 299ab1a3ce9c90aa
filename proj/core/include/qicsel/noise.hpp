//
// This file is part of the qicsel library released under the Apache-2.0 license.
// See README.md for more information.
//

#pragma once

#include <cstdint>
#include <map>

#include "qicsel/coupling.hpp"

namespace qicsel {

/// Per-qubit/per-edge error rates at one point in time. p1: depolarizing
/// probability after a one-qubit gate; p2: two-qubit depolarizing probability
/// after a CNOT/CZ/SWAP; pm: readout flip probability.
struct NoiseSnapshot {
  std::map<int, double> p1;
  std::map<QubitPair, double> p2;
  std::map<int, double> pm;
  double time = 0.0;

  /// Throws SimulationError when the entry is missing.
  double one_qubit_rate(int q) const;
  double two_qubit_rate(int a, int b) const;
  double readout_rate(int q) const;

  /// Throws ParseError on probabilities outside [0, 1].
  void validate() const;

  static NoiseSnapshot uniform(const CouplingMap& map, double p1, double p2, double pm,
                               double time = 0.0);
  /// Log-uniform rates in representative hardware ranges: p1 in [1e-3, 1e-2],
  /// p2 in [1e-2, 1e-1], pm in [1e-3, 5e-2].
  static NoiseSnapshot random_heterogeneous(const CouplingMap& map, std::uint64_t seed,
                                            double time = 0.0);
};

/// Time-ordered noise snapshots with step or per-parameter linear
/// interpolation.
struct DriftSchedule {
  enum class Interpolation { Step, Linear };

  Interpolation interpolation = Interpolation::Step;
  std::vector<NoiseSnapshot> snapshots;

  /// Throws ParseError when empty, out of order, or (for Linear) when
  /// snapshots disagree on their key sets.
  void validate() const;

  double first_time() const;
  double last_time() const;

  static DriftSchedule single(NoiseSnapshot snapshot);
};

/// Step: latest snapshot with time <= t. Linear: per-parameter interpolation
/// clamped to [0, 1]; queries past the last snapshot return it unchanged.
/// Throws std::invalid_argument for t before the first snapshot.
NoiseSnapshot snapshot_at(const DriftSchedule& schedule, double t);

}  // namespace qicsel
