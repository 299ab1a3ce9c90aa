//
// This file is part of the qicsel library released under the Apache-2.0 license.
// See README.md for more information.
//

#include "qicsel/select.hpp"

#include <algorithm>
#include <stdexcept>

#include "parallel.hpp"
#include "qicsel/errors.hpp"
#include "qicsel/layout_search.hpp"
#include "qicsel/qic.hpp"
#include "qicsel/rng.hpp"
#include "qicsel/scoring.hpp"
#include "qicsel/sim.hpp"

namespace qicsel {

SelectionReport select_layout(const UserCircuit& circuit, const CouplingMap& map,
                              const DriftSchedule& schedule, const SelectOptions& options) {
  schedule.validate();
  map.validate();
  circuit.validate();
  if (options.shots < 1) throw std::invalid_argument("select_layout: shots must be >= 1");

  const Qic qic = build_qic(circuit);
  const PatternGraph pattern = interaction_graph(qic);
  const std::vector<Layout> layouts = find_isomorphic_layouts(pattern, map);
  if (layouts.empty())
    throw NoEmbeddingError("select_layout: no isomorphic layout of the interaction graph exists");

  std::vector<Qic> mapped;
  mapped.reserve(layouts.size());
  for (const Layout& layout : layouts) mapped.push_back(map_qic(qic, layout, map.num_qubits));

  // Batching. Basic mode runs one execution per layout.
  PartitionPlan plan;
  switch (options.mode) {
    case SelectionMode::Basic: {
      plan.mode = PartitionMode::Disjoint;
      plan.seed = options.seed;
      plan.permutations = 0;
      plan.chosen_permutation = -1;
      for (std::size_t i = 0; i < layouts.size(); ++i) {
        plan.sets.push_back({layouts[i]});
        plan.union_qics.push_back(mapped[i]);
        plan.distortions.push_back({0});
      }
      break;
    }
    case SelectionMode::Disjoint:
      plan = partition_disjoint(layouts, options.seed, options.permutations, &mapped,
                                options.workers);
      break;
    case SelectionMode::Distortion:
      plan = partition_with_distortion(layouts, mapped, options.threshold, options.seed,
                                       options.permutations, options.workers);
      break;
  }

  const NoiseSnapshot current = snapshot_at(schedule, schedule.last_time());
  const NoiseSnapshot stale = snapshot_at(schedule, schedule.first_time());

  // One union execution per set, each on its own deterministic seed stream.
  std::vector<ShotCounts> set_counts(plan.sets.size());
  parallel_for(plan.num_sets(), options.workers, [&](int s) {
    set_counts[static_cast<std::size_t>(s)] =
        run_qic(plan.union_qics[static_cast<std::size_t>(s)], current, options.shots,
                derive_seed(options.seed, 0x5e7ULL + static_cast<std::uint64_t>(s)), 1);
  });

  SelectionReport report;
  std::vector<int> ordering(static_cast<std::size_t>(pattern.num_vertices));
  for (std::size_t i = 0; i < ordering.size(); ++i) ordering[i] = static_cast<int>(i);

  for (std::size_t s = 0; s < plan.sets.size(); ++s) {
    for (const Layout& layout : plan.sets[s]) {
      const ShotCounts marginal = marginalize(set_counts[s], layout.mapping);
      LayoutScore score;
      score.layout = layout;
      score.shots = options.shots;
      score.qic_score_counts = qic_score_counts(marginal);
      score.qic_score_zz =
          pattern.num_vertices >= 2 ? qic_score_zz(marginal, ordering) : score.qic_score_counts;
      score.mapomatic_score = options.mapomatic_on_user_circuit
                                  ? mapomatic_score_circuit(layout, circuit, stale)
                                  : mapomatic_score(layout, qic, stale);
      report.ranked.push_back(std::move(score));
    }
  }

  std::sort(report.ranked.begin(), report.ranked.end(),
            [](const LayoutScore& a, const LayoutScore& b) {
              if (a.qic_score_counts != b.qic_score_counts)
                return a.qic_score_counts > b.qic_score_counts;
              if (a.qic_score_zz != b.qic_score_zz) return a.qic_score_zz > b.qic_score_zz;
              return a.layout < b.layout;
            });

  std::vector<std::pair<double, Layout>> by_mapomatic;
  by_mapomatic.reserve(report.ranked.size());
  for (const LayoutScore& s : report.ranked) by_mapomatic.push_back({s.mapomatic_score, s.layout});
  std::sort(by_mapomatic.begin(), by_mapomatic.end());
  for (auto& [score, layout] : by_mapomatic) report.mapomatic_ranking.push_back(std::move(layout));

  report.chosen = report.ranked.front().layout;
  report.executions_used = plan.num_sets();
  report.executions_basic = static_cast<int>(layouts.size());
  report.executions_jit = options.jit_baseline;
  report.reduction_vs_jit = 100.0 *
                            static_cast<double>(options.jit_baseline - report.executions_used) /
                            static_cast<double>(options.jit_baseline);
  report.plan = std::move(plan);
  return report;
}

SelectionReport select_layout(const UserCircuit& circuit, const CouplingMap& map,
                              const NoiseSnapshot& noise, const SelectOptions& options) {
  return select_layout(circuit, map, DriftSchedule::single(noise), options);
}

ResourceReport resource_report(const std::vector<std::pair<std::string, int>>& executions,
                               int jit_baseline) {
  if (jit_baseline < 1) throw std::invalid_argument("resource_report: baseline must be >= 1");

  ResourceReport report;
  report.jit_baseline = jit_baseline;
  double sum = 0.0;
  for (const auto& [label, count] : executions) {
    ResourceRow row;
    row.label = label;
    row.executions = count;
    row.reduction_vs_jit =
        100.0 * static_cast<double>(jit_baseline - count) / static_cast<double>(jit_baseline);
    sum += row.reduction_vs_jit;
    report.rows.push_back(std::move(row));
  }
  report.mean_reduction = report.rows.empty() ? 0.0 : sum / static_cast<double>(report.rows.size());
  return report;
}

}  // namespace qicsel
