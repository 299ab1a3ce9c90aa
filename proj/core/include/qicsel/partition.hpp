//
// This file is part of the qicsel library released under the Apache-2.0 license.
// See README.md for more information.
//

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "qicsel/coupling.hpp"
#include "qicsel/qic.hpp"

namespace qicsel {

enum class PartitionMode { Disjoint, Distortion };

/// Distortion of one layout inside a union QIC: per physical qubit, the
/// absolute change in incident CNOT endpoints between the layout's own QIC
/// and the union QIC (gates toward qubits outside the layout included).
struct DistortionReport {
  std::map<int, int> per_qubit;
  int total = 0;
};

/// A batching of layouts into union executions.
struct PartitionPlan {
  PartitionMode mode = PartitionMode::Disjoint;
  int threshold = 0;  // meaningful in Distortion mode
  std::uint64_t seed = 0;
  int permutations = 0;
  int chosen_permutation = -1;

  std::vector<std::vector<Layout>> sets;
  std::vector<Qic> union_qics;                // aligned with sets; empty if no QICs were supplied
  std::vector<std::vector<int>> distortions;  // aligned with sets/members

  int num_sets() const { return static_cast<int>(sets.size()); }
  int max_total_distortion() const;
};

/// Union QIC of a set of physical-register QICs: active qubits are the union
/// of the members'; each pair carries ceil(sum of counts / number of members
/// with that pair); the network is rescheduled.
Qic union_with_distortion(std::span<const Qic> member_qics);

DistortionReport distortion(const Layout& layout, const Qic& own_qic, const Qic& union_qic);

/// Builds the tentative union over set + candidate and accepts iff every
/// member's total distortion (candidate included) stays within the threshold.
bool is_distortion_disjoint(std::span<const Layout> set, std::span<const Qic> set_qics,
                            const Layout& candidate, const Qic& candidate_qic, int threshold);

/// Greedy first-fit batching of physically disjoint layouts, run over
/// `permutations` seeded random orderings; the plan with fewest sets wins,
/// ties by lowest permutation index. When per-layout QICs are supplied the
/// plan carries the per-set union QICs (side-by-side concatenations) and
/// all-zero distortion tables.
PartitionPlan partition_disjoint(const std::vector<Layout>& layouts, std::uint64_t seed,
                                 int permutations, const std::vector<Qic>* qics = nullptr,
                                 int workers = 1);

/// Greedy first-fit batching under a per-layout total distortion threshold,
/// best over `permutations` seeded random orderings. Ties: fewest sets, then
/// lowest summed distortion, then lowest permutation index.
PartitionPlan partition_with_distortion(const std::vector<Layout>& layouts,
                                        const std::vector<Qic>& qics, int threshold,
                                        std::uint64_t seed, int permutations, int workers = 1);

/// Exact minimum number of feasible sets via subset dynamic programming.
/// Exponential; throws std::invalid_argument above the cap.
int exact_min_partition_disjoint(const std::vector<Layout>& layouts, int cap = 12);
int exact_min_partition_distortion(const std::vector<Layout>& layouts,
                                   const std::vector<Qic>& qics, int threshold, int cap = 12);

}  // namespace qicsel
