//
// This file is part of the qicsel library released under the Apache-2.0 license.
// See README.md for more information.
//

#pragma once

#include <cstdint>
#include <vector>

#include "qicsel/coupling.hpp"
#include "qicsel/noise.hpp"
#include "qicsel/qic.hpp"
#include "qicsel/sim.hpp"

namespace qicsel {

/// Frequency of the all-zeros key (m / M). Higher is better.
double qic_score_counts(const ShotCounts& counts);

/// Mean nearest-neighbour ZZ expectation: per shot, each adjacent virtual
/// pair contributes +1 when the two bits agree and -1 otherwise; averaged
/// over pairs, then shots. `ordering[i]` is the key position of virtual
/// qubit i. Ideal value is +1.
double qic_score_zz(const ShotCounts& counts, const std::vector<int>& ordering);

/// Calibration-data score s = 1 - prod(1 - e_x) over every scheduled gate
/// instance of the layout's QIC (two Hadamards per active qubit, each CNOT
/// instance) and every measured qubit. Lower is better.
double mapomatic_score(const Layout& layout, const Qic& virtual_qic, const NoiseSnapshot& noise);

/// Same product over the gate instances of a user circuit routed through the
/// layout, plus readout terms for every circuit qubit.
double mapomatic_score_circuit(const Layout& layout, const UserCircuit& circuit,
                               const NoiseSnapshot& noise);

struct BootstrapStats {
  double counts_mean = 0.0;
  double counts_std = 0.0;
  double zz_mean = 0.0;
  double zz_std = 0.0;
  int resamples = 0;
};

/// Multinomial resampling of the histogram at fixed shot count; both QIC
/// scores are recomputed per resample. Requires resamples >= 2.
BootstrapStats bootstrap_scores(const ShotCounts& counts, int resamples, std::uint64_t seed,
                                const std::vector<int>& ordering);

}  // namespace qicsel
