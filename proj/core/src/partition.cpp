//
// This file is part of the qicsel library released under the Apache-2.0 license.
// See README.md for more information.
//

#include "qicsel/partition.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "parallel.hpp"
#include "qicsel/rng.hpp"

namespace qicsel {

int PartitionPlan::max_total_distortion() const {
  int worst = 0;
  for (const auto& set : distortions)
    for (int d : set) worst = std::max(worst, d);
  return worst;
}

namespace {

// Running per-pair sums over a set of member QICs; enough to rebuild the
// ceil-average union without touching the members again.
struct PairAccumulator {
  std::map<QubitPair, std::pair<long long, int>> entries;  // pair -> (sum, members with pair)

  void add(const Qic& qic) {
    for (const auto& [pair, count] : qic.pair_counts.entries) {
      auto& [sum, members] = entries[pair];
      sum += count;
      members += 1;
    }
  }

  // Per-qubit CNOT endpoints of the ceil-average union.
  std::map<int, int> union_endpoint_counts() const {
    std::map<int, int> incident;
    for (const auto& [pair, acc] : entries) {
      const int avg = static_cast<int>((acc.first + acc.second - 1) / acc.second);
      incident[pair.first] += avg;
      incident[pair.second] += avg;
    }
    return incident;
  }
};

int total_distortion_against(const std::map<int, int>& union_incident, const Layout& layout,
                             const std::map<int, int>& own_incident) {
  int total = 0;
  for (int q : layout) {
    auto own_it = own_incident.find(q);
    const int own = own_it == own_incident.end() ? 0 : own_it->second;
    auto uni_it = union_incident.find(q);
    const int uni = uni_it == union_incident.end() ? 0 : uni_it->second;
    total += std::abs(own - uni);
  }
  return total;
}

struct GreedyOutcome {
  std::vector<std::vector<int>> sets;  // member indices in placement order
  long long distortion_sum = 0;        // distortion mode only
};

GreedyOutcome greedy_disjoint(const std::vector<Layout>& layouts, const std::vector<int>& order,
                              int num_words) {
  GreedyOutcome out;
  std::vector<std::vector<std::uint64_t>> set_masks;
  std::vector<std::vector<std::uint64_t>> layout_masks(layouts.size());
  for (std::size_t i = 0; i < layouts.size(); ++i) {
    layout_masks[i].assign(static_cast<std::size_t>(num_words), 0);
    for (int q : layouts[i])
      layout_masks[i][static_cast<std::size_t>(q / 64)] |= 1ULL << (q % 64);
  }

  for (int idx : order) {
    const auto& mask = layout_masks[static_cast<std::size_t>(idx)];
    bool placed = false;
    for (std::size_t s = 0; s < out.sets.size(); ++s) {
      bool overlap = false;
      for (int w = 0; w < num_words; ++w)
        if (set_masks[s][static_cast<std::size_t>(w)] & mask[static_cast<std::size_t>(w)]) {
          overlap = true;
          break;
        }
      if (!overlap) {
        out.sets[s].push_back(idx);
        for (int w = 0; w < num_words; ++w)
          set_masks[s][static_cast<std::size_t>(w)] |= mask[static_cast<std::size_t>(w)];
        placed = true;
        break;
      }
    }
    if (!placed) {
      out.sets.push_back({idx});
      set_masks.push_back(mask);
    }
  }
  return out;
}

GreedyOutcome greedy_distortion(const std::vector<Layout>& layouts, const std::vector<Qic>& qics,
                                int threshold, const std::vector<int>& order) {
  GreedyOutcome out;
  std::vector<PairAccumulator> accumulators;
  std::vector<std::map<int, int>> own_incident(layouts.size());
  for (std::size_t i = 0; i < layouts.size(); ++i)
    own_incident[i] = qics[i].pair_counts.endpoint_counts();

  auto fits = [&](const std::vector<int>& members, const PairAccumulator& acc, int candidate) {
    PairAccumulator tentative = acc;
    tentative.add(qics[static_cast<std::size_t>(candidate)]);
    const auto union_incident = tentative.union_endpoint_counts();
    for (int member : members) {
      const auto& layout = layouts[static_cast<std::size_t>(member)];
      if (total_distortion_against(union_incident, layout,
                                   own_incident[static_cast<std::size_t>(member)]) > threshold)
        return false;
    }
    const auto& cand_layout = layouts[static_cast<std::size_t>(candidate)];
    return total_distortion_against(union_incident, cand_layout,
                                    own_incident[static_cast<std::size_t>(candidate)]) <= threshold;
  };

  for (int idx : order) {
    bool placed = false;
    for (std::size_t s = 0; s < out.sets.size(); ++s) {
      if (fits(out.sets[s], accumulators[s], idx)) {
        out.sets[s].push_back(idx);
        accumulators[s].add(qics[static_cast<std::size_t>(idx)]);
        placed = true;
        break;
      }
    }
    if (!placed) {
      out.sets.push_back({idx});
      accumulators.emplace_back();
      accumulators.back().add(qics[static_cast<std::size_t>(idx)]);
    }
  }

  for (std::size_t s = 0; s < out.sets.size(); ++s) {
    const auto union_incident = accumulators[s].union_endpoint_counts();
    for (int member : out.sets[s])
      out.distortion_sum +=
          total_distortion_against(union_incident, layouts[static_cast<std::size_t>(member)],
                                   own_incident[static_cast<std::size_t>(member)]);
  }
  return out;
}

std::vector<int> permuted_order(std::size_t count, std::uint64_t seed, int permutation) {
  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(permutation)));
  shuffle_deterministic(order, rng);
  return order;
}

PartitionPlan materialize(const std::vector<Layout>& layouts, const std::vector<Qic>* qics,
                          const GreedyOutcome& best, PartitionMode mode, int threshold,
                          std::uint64_t seed, int permutations, int chosen) {
  PartitionPlan plan;
  plan.mode = mode;
  plan.threshold = threshold;
  plan.seed = seed;
  plan.permutations = permutations;
  plan.chosen_permutation = chosen;

  for (const auto& member_indices : best.sets) {
    std::vector<Layout> set;
    set.reserve(member_indices.size());
    for (int idx : member_indices) set.push_back(layouts[static_cast<std::size_t>(idx)]);
    plan.sets.push_back(std::move(set));

    if (qics != nullptr) {
      std::vector<Qic> member_qics;
      member_qics.reserve(member_indices.size());
      for (int idx : member_indices) member_qics.push_back((*qics)[static_cast<std::size_t>(idx)]);
      Qic union_qic = union_with_distortion(member_qics);

      std::vector<int> totals;
      totals.reserve(member_indices.size());
      for (std::size_t m = 0; m < member_indices.size(); ++m)
        totals.push_back(
            distortion(plan.sets.back()[m], member_qics[m], union_qic).total);
      plan.union_qics.push_back(std::move(union_qic));
      plan.distortions.push_back(std::move(totals));
    }
  }
  return plan;
}

}  // namespace

Qic union_with_distortion(std::span<const Qic> member_qics) {
  if (member_qics.empty())
    throw std::invalid_argument("union_with_distortion: empty set of member QICs");

  Qic out;
  out.num_qubits = member_qics.front().num_qubits;
  for (const Qic& qic : member_qics) {
    if (qic.num_qubits != out.num_qubits)
      throw std::invalid_argument("union_with_distortion: members address different registers");
    out.qubits.insert(out.qubits.end(), qic.qubits.begin(), qic.qubits.end());
  }
  std::sort(out.qubits.begin(), out.qubits.end());
  out.qubits.erase(std::unique(out.qubits.begin(), out.qubits.end()), out.qubits.end());

  PairAccumulator acc;
  for (const Qic& qic : member_qics) acc.add(qic);
  for (const auto& [pair, entry] : acc.entries) {
    const int avg = static_cast<int>((entry.first + entry.second - 1) / entry.second);
    out.pair_counts.add(pair.first, pair.second, avg);
  }

  out.no_two_qubit_gates = out.pair_counts.empty();
  out.layers = schedule_layers(out.pair_counts, out.num_qubits);
  return out;
}

DistortionReport distortion(const Layout& layout, const Qic& own_qic, const Qic& union_qic) {
  for (int q : layout)
    if (!std::binary_search(union_qic.qubits.begin(), union_qic.qubits.end(), q))
      throw std::invalid_argument("distortion: layout qubit " + std::to_string(q) +
                                  " is not part of the union QIC");

  const auto own_incident = own_qic.pair_counts.endpoint_counts();
  const auto union_incident = union_qic.pair_counts.endpoint_counts();

  DistortionReport report;
  for (int q : layout) {
    auto own_it = own_incident.find(q);
    const int own = own_it == own_incident.end() ? 0 : own_it->second;
    auto uni_it = union_incident.find(q);
    const int uni = uni_it == union_incident.end() ? 0 : uni_it->second;
    const int delta = std::abs(own - uni);
    report.per_qubit[q] = delta;
    report.total += delta;
  }
  return report;
}

bool is_distortion_disjoint(std::span<const Layout> set, std::span<const Qic> set_qics,
                            const Layout& candidate, const Qic& candidate_qic, int threshold) {
  if (threshold < 0) throw std::invalid_argument("is_distortion_disjoint: negative threshold");
  if (set.size() != set_qics.size())
    throw std::invalid_argument("is_distortion_disjoint: set and QIC counts differ");

  std::vector<Qic> members(set_qics.begin(), set_qics.end());
  members.push_back(candidate_qic);
  const Qic union_qic = union_with_distortion(members);

  for (std::size_t i = 0; i < set.size(); ++i)
    if (distortion(set[i], set_qics[i], union_qic).total > threshold) return false;
  return distortion(candidate, candidate_qic, union_qic).total <= threshold;
}

PartitionPlan partition_disjoint(const std::vector<Layout>& layouts, std::uint64_t seed,
                                 int permutations, const std::vector<Qic>* qics, int workers) {
  if (layouts.empty()) throw std::invalid_argument("partition_disjoint: no layouts");
  if (permutations < 1) throw std::invalid_argument("partition_disjoint: permutations must be >= 1");
  if (qics != nullptr && qics->size() != layouts.size())
    throw std::invalid_argument("partition_disjoint: layout/QIC counts differ");

  int max_qubit = 0;
  for (const Layout& l : layouts)
    for (int q : l) max_qubit = std::max(max_qubit, q);
  const int num_words = max_qubit / 64 + 1;

  std::vector<std::size_t> set_counts(static_cast<std::size_t>(permutations));
  parallel_for(permutations, workers, [&](int k) {
    const auto order = permuted_order(layouts.size(), seed, k);
    set_counts[static_cast<std::size_t>(k)] = greedy_disjoint(layouts, order, num_words).sets.size();
  });

  int chosen = 0;
  for (int k = 1; k < permutations; ++k)
    if (set_counts[static_cast<std::size_t>(k)] < set_counts[static_cast<std::size_t>(chosen)])
      chosen = k;

  const auto best = greedy_disjoint(layouts, permuted_order(layouts.size(), seed, chosen), num_words);
  return materialize(layouts, qics, best, PartitionMode::Disjoint, 0, seed, permutations, chosen);
}

PartitionPlan partition_with_distortion(const std::vector<Layout>& layouts,
                                        const std::vector<Qic>& qics, int threshold,
                                        std::uint64_t seed, int permutations, int workers) {
  if (layouts.empty()) throw std::invalid_argument("partition_with_distortion: no layouts");
  if (threshold < 0) throw std::invalid_argument("partition_with_distortion: negative threshold");
  if (permutations < 1)
    throw std::invalid_argument("partition_with_distortion: permutations must be >= 1");
  if (qics.size() != layouts.size())
    throw std::invalid_argument("partition_with_distortion: layout/QIC counts differ");

  struct TrialResult {
    std::size_t sets = 0;
    long long distortion_sum = 0;
  };
  std::vector<TrialResult> trials(static_cast<std::size_t>(permutations));
  parallel_for(permutations, workers, [&](int k) {
    const auto order = permuted_order(layouts.size(), seed, k);
    const auto outcome = greedy_distortion(layouts, qics, threshold, order);
    trials[static_cast<std::size_t>(k)] = {outcome.sets.size(), outcome.distortion_sum};
  });

  // Fewest sets, then lowest summed distortion, then lowest permutation index.
  int chosen = 0;
  for (int k = 1; k < permutations; ++k) {
    const auto& cur = trials[static_cast<std::size_t>(k)];
    const auto& best = trials[static_cast<std::size_t>(chosen)];
    if (cur.sets < best.sets ||
        (cur.sets == best.sets && cur.distortion_sum < best.distortion_sum))
      chosen = k;
  }

  const auto best =
      greedy_distortion(layouts, qics, threshold, permuted_order(layouts.size(), seed, chosen));
  return materialize(layouts, &qics, best, PartitionMode::Distortion, threshold, seed,
                     permutations, chosen);
}

namespace {

int exact_min_partition_impl(std::size_t count, const std::vector<char>& feasible) {
  const std::size_t full = (static_cast<std::size_t>(1) << count) - 1;
  std::vector<int> dp(full + 1, std::numeric_limits<int>::max());
  dp[0] = 0;
  for (std::size_t mask = 1; mask <= full; ++mask) {
    const std::size_t low = mask & (~mask + 1);  // isolate lowest set bit
    for (std::size_t sub = mask; sub != 0; sub = (sub - 1) & mask) {
      if (!(sub & low)) continue;  // every block must cover the lowest member
      if (!feasible[sub]) continue;
      if (dp[mask ^ sub] != std::numeric_limits<int>::max())
        dp[mask] = std::min(dp[mask], dp[mask ^ sub] + 1);
    }
  }
  return dp[full];
}

}  // namespace

int exact_min_partition_disjoint(const std::vector<Layout>& layouts, int cap) {
  const std::size_t count = layouts.size();
  if (count == 0) return 0;
  if (static_cast<int>(count) > cap)
    throw std::invalid_argument("exact_min_partition: instance too large (" +
                                std::to_string(count) + " layouts, cap " + std::to_string(cap) + ")");

  // conflict[i] = bitmask of layouts overlapping layout i
  std::vector<std::size_t> conflict(count, 0);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j)
      if (layouts[i].overlaps(layouts[j])) {
        conflict[i] |= static_cast<std::size_t>(1) << j;
        conflict[j] |= static_cast<std::size_t>(1) << i;
      }

  const std::size_t full = (static_cast<std::size_t>(1) << count) - 1;
  std::vector<char> feasible(full + 1, 0);
  for (std::size_t mask = 1; mask <= full; ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < count && ok; ++i)
      if ((mask >> i) & 1) ok = (conflict[i] & mask) == 0;
    feasible[mask] = ok;
  }
  return exact_min_partition_impl(count, feasible);
}

int exact_min_partition_distortion(const std::vector<Layout>& layouts,
                                   const std::vector<Qic>& qics, int threshold, int cap) {
  const std::size_t count = layouts.size();
  if (count == 0) return 0;
  if (static_cast<int>(count) > cap)
    throw std::invalid_argument("exact_min_partition: instance too large (" +
                                std::to_string(count) + " layouts, cap " + std::to_string(cap) + ")");
  if (qics.size() != layouts.size())
    throw std::invalid_argument("exact_min_partition: layout/QIC counts differ");
  if (threshold < 0) throw std::invalid_argument("exact_min_partition: negative threshold");

  const std::size_t full = (static_cast<std::size_t>(1) << count) - 1;
  std::vector<char> feasible(full + 1, 0);
  std::vector<Qic> members;
  for (std::size_t mask = 1; mask <= full; ++mask) {
    members.clear();
    for (std::size_t i = 0; i < count; ++i)
      if ((mask >> i) & 1) members.push_back(qics[i]);
    if (members.size() == 1) {
      feasible[mask] = 1;
      continue;
    }
    const Qic union_qic = union_with_distortion(members);
    bool ok = true;
    for (std::size_t i = 0; i < count && ok; ++i)
      if ((mask >> i) & 1) ok = distortion(layouts[i], qics[i], union_qic).total <= threshold;
    feasible[mask] = ok;
  }
  return exact_min_partition_impl(count, feasible);
}

}  // namespace qicsel
