//
// This file is part of the qicsel library released under the Apache-2.0 license.
// See README.md for more information.
//

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qicsel/circuit.hpp"
#include "qicsel/coupling.hpp"
#include "qicsel/noise.hpp"
#include "qicsel/partition.hpp"

namespace qicsel {

enum class SelectionMode { Basic, Disjoint, Distortion };

struct SelectOptions {
  SelectionMode mode = SelectionMode::Basic;
  int threshold = 0;  // Distortion mode
  long long shots = 4096;
  std::uint64_t seed = 0;
  int permutations = 20;
  int jit_baseline = 132;
  int workers = 1;
  /// Score the user circuit instead of the QIC in the calibration product.
  bool mapomatic_on_user_circuit = false;
};

struct LayoutScore {
  Layout layout;
  double qic_score_counts = 0.0;
  double qic_score_zz = 0.0;
  double mapomatic_score = 0.0;
  long long shots = 0;
};

struct SelectionReport {
  std::vector<LayoutScore> ranked;        // best QIC score first
  std::vector<Layout> mapomatic_ranking;  // best (lowest) calibration score first
  Layout chosen;
  int executions_used = 0;
  int executions_basic = 0;
  int executions_jit = 0;
  double reduction_vs_jit = 0.0;
  PartitionPlan plan;
};

/// End-to-end pipeline: QIC construction, layout enumeration, batching per
/// mode (Basic runs one execution per layout), execution at the schedule's
/// last timestamp, marginalization, scoring and ranking by qic_score_counts
/// (ties by qic_score_zz, then lexicographic layout). The calibration ranking
/// is computed from the schedule's first snapshot, i.e. possibly stale data.
/// Throws NoEmbeddingError when no isomorphic layout exists.
SelectionReport select_layout(const UserCircuit& circuit, const CouplingMap& map,
                              const DriftSchedule& schedule, const SelectOptions& options);

/// Static-noise convenience overload (stale and current snapshots coincide).
SelectionReport select_layout(const UserCircuit& circuit, const CouplingMap& map,
                              const NoiseSnapshot& noise, const SelectOptions& options);

struct ResourceRow {
  std::string label;
  int executions = 0;
  double reduction_vs_jit = 0.0;
};

struct ResourceReport {
  int jit_baseline = 0;
  std::vector<ResourceRow> rows;
  double mean_reduction = 0.0;  // percent
};

/// Per-row relative reduction against a fixed characterization baseline and
/// the mean across rows. Requires jit_baseline >= 1.
ResourceReport resource_report(const std::vector<std::pair<std::string, int>>& executions,
                               int jit_baseline);

}  // namespace qicsel
