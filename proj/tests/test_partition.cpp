#include <doctest.h>

#include <array>
#include <random>
#include <span>
#include <stdexcept>

#include "qicsel/circuit.hpp"
#include "qicsel/layout_search.hpp"
#include "qicsel/partition.hpp"
#include "qicsel/qic.hpp"
#include "qicsel/rng.hpp"

using namespace qicsel;

namespace {

Qic qic_on(int num_qubits, std::vector<int> qubits, const std::vector<std::array<int, 3>>& pairs) {
  Qic qic;
  qic.num_qubits = num_qubits;
  qic.qubits = std::move(qubits);
  for (const auto& [a, b, count] : pairs) qic.pair_counts.add(a, b, count);
  qic.layers = schedule_layers(qic.pair_counts, num_qubits);
  return qic;
}

// The three overlapping-layout QICs of the worked union example.
struct OverlapFixture {
  std::vector<Layout> layouts = {Layout{{0, 1, 2}}, Layout{{3, 2, 1}}, Layout{{2, 1, 0}}};
  std::vector<Qic> qics = {
      qic_on(4, {0, 1, 2}, {{{0, 1, 1}}, {{1, 2, 3}}}),
      qic_on(4, {1, 2, 3}, {{{1, 2, 3}}, {{2, 3, 1}}}),
      qic_on(4, {0, 1, 2}, {{{0, 1, 3}}, {{1, 2, 1}}}),
  };
};

Qic path6_qic() {
  UserCircuit c;
  c.num_qubits = 6;
  for (int i = 0; i < 5; ++i) c.gates.push_back(Gate::cx(i, i + 1));
  return build_qic(c);
}

}  // namespace

TEST_CASE("ceil-average union arithmetic") {
  OverlapFixture fx;
  const Qic u = union_with_distortion(fx.qics);
  CHECK(u.pair_counts.count(0, 1) == 2);  // ceil((1+3)/2)
  CHECK(u.pair_counts.count(1, 2) == 3);  // ceil((3+3+1)/3)
  CHECK(u.pair_counts.count(2, 3) == 1);
  CHECK(u.qubits == std::vector<int>{0, 1, 2, 3});
  CHECK_NOTHROW(u.validate());
}

TEST_CASE("distortion of the worked example") {
  OverlapFixture fx;
  const Qic u = union_with_distortion(fx.qics);
  const DistortionReport report = distortion(fx.layouts[0], fx.qics[0], u);
  CHECK(report.per_qubit.at(0) == 1);
  CHECK(report.total == 3);
}

TEST_CASE("single-member union is the member itself") {
  OverlapFixture fx;
  const Qic u = union_with_distortion(std::span<const Qic>(&fx.qics[0], 1));
  CHECK(u.pair_counts == fx.qics[0].pair_counts);
  CHECK(u.qubits == fx.qics[0].qubits);
  CHECK(distortion(fx.layouts[0], fx.qics[0], u).total == 0);
}

TEST_CASE("union of disjoint members concatenates side by side") {
  const Qic a = qic_on(8, {0, 1, 2}, {{{0, 1, 2}}, {{1, 2, 1}}});
  const Qic b = qic_on(8, {4, 5, 6}, {{{4, 5, 1}}, {{5, 6, 3}}});
  const std::vector<Qic> members = {a, b};
  const Qic u = union_with_distortion(members);
  CHECK(u.cnot_count() == a.cnot_count() + b.cnot_count());
  CHECK(distortion(Layout{{0, 1, 2}}, a, u).total == 0);
  CHECK(distortion(Layout{{4, 5, 6}}, b, u).total == 0);
}

TEST_CASE("distortion-compatibility check") {
  OverlapFixture fx;
  const std::span<const Layout> set(fx.layouts.data(), 2);
  const std::span<const Qic> set_qics(fx.qics.data(), 2);

  // Recomputed totals for the worked example are {3, 2, 5}, so 5 is the
  // tightest threshold admitting all three layouts into one set.
  const Qic u = union_with_distortion(fx.qics);
  CHECK(distortion(fx.layouts[0], fx.qics[0], u).total == 3);
  CHECK(distortion(fx.layouts[1], fx.qics[1], u).total == 2);
  CHECK(distortion(fx.layouts[2], fx.qics[2], u).total == 5);
  CHECK(is_distortion_disjoint(set, set_qics, fx.layouts[2], fx.qics[2], 5));
  CHECK(!is_distortion_disjoint(set, set_qics, fx.layouts[2], fx.qics[2], 4));
  CHECK(!is_distortion_disjoint(set, set_qics, fx.layouts[2], fx.qics[2], 3));
  // Against an empty set the union equals the candidate's own probe.
  CHECK(is_distortion_disjoint({}, {}, fx.layouts[0], fx.qics[0], 0));
}

TEST_CASE("disjoint partition of trivially compatible layouts") {
  std::vector<Layout> apart = {Layout{{0, 1}}, Layout{{2, 3}}, Layout{{4, 5}}};
  CHECK(partition_disjoint(apart, 0, 4).num_sets() == 1);

  std::vector<Layout> clashing = {Layout{{0, 1}}, Layout{{1, 2}}, Layout{{2, 0}}};
  CHECK(partition_disjoint(clashing, 0, 4).num_sets() == 3);
}

TEST_CASE("plans are deterministic in (seed, permutations)") {
  const Qic qic = path6_qic();
  const auto layouts =
      find_isomorphic_layouts(interaction_graph(qic), CouplingMap::heavy_hex_27());
  std::vector<Qic> mapped;
  for (const Layout& l : layouts) mapped.push_back(map_qic(qic, l, 27));

  const PartitionPlan a = partition_with_distortion(layouts, mapped, 1, 42, 8);
  const PartitionPlan b = partition_with_distortion(layouts, mapped, 1, 42, 8);
  CHECK(a.sets == b.sets);
  CHECK(a.chosen_permutation == b.chosen_permutation);
  CHECK(a.distortions == b.distortions);

  const PartitionPlan par = partition_with_distortion(layouts, mapped, 1, 42, 8, /*workers=*/4);
  CHECK(par.sets == a.sets);
  CHECK(par.chosen_permutation == a.chosen_permutation);
}

TEST_CASE("threshold soundness on random sublists") {
  const Qic qic = path6_qic();
  const auto all_layouts =
      find_isomorphic_layouts(interaction_graph(qic), CouplingMap::heavy_hex_27());
  std::mt19937_64 rng(31337);

  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Layout> layouts;
    for (const Layout& l : all_layouts)
      if (bounded(rng, 3) == 0) layouts.push_back(l);
    if (layouts.size() < 2) continue;
    std::vector<Qic> mapped;
    for (const Layout& l : layouts) mapped.push_back(map_qic(qic, l, 27));
    const int threshold = static_cast<int>(bounded(rng, 4));
    const PartitionPlan plan =
        partition_with_distortion(layouts, mapped, threshold, rng(), 4);

    CHECK(plan.max_total_distortion() <= threshold);
    for (const Qic& u : plan.union_qics) CHECK_NOTHROW(u.validate());
    // recompute every distortion from scratch against the recorded unions
    std::size_t covered = 0;
    for (std::size_t s = 0; s < plan.sets.size(); ++s) {
      for (std::size_t m = 0; m < plan.sets[s].size(); ++m) {
        const Qic own = map_qic(qic, plan.sets[s][m], 27);
        const int total = distortion(plan.sets[s][m], own, plan.union_qics[s]).total;
        CHECK(total <= threshold);
        CHECK(total == plan.distortions[s][m]);
        ++covered;
      }
    }
    CHECK(covered == layouts.size());  // partition covers every layout exactly once
  }
}

TEST_CASE("disjoint plans keep sets physically disjoint and cover every layout") {
  const Qic qic = path6_qic();
  const auto all_layouts =
      find_isomorphic_layouts(interaction_graph(qic), CouplingMap::heavy_hex_27());
  std::mt19937_64 rng(424242);

  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Layout> layouts;
    for (const Layout& l : all_layouts)
      if (bounded(rng, 3) == 0) layouts.push_back(l);
    if (layouts.empty()) continue;
    std::vector<Qic> mapped;
    for (const Layout& l : layouts) mapped.push_back(map_qic(qic, l, 27));
    const PartitionPlan plan = partition_disjoint(layouts, rng(), 4, &mapped);

    std::size_t covered = 0;
    for (const auto& set : plan.sets) {
      for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j) CHECK(!set[i].overlaps(set[j]));
      covered += set.size();
    }
    CHECK(covered == layouts.size());
    // disjoint members are never distorted by their union
    for (const auto& totals : plan.distortions)
      for (int total : totals) CHECK(total == 0);
    for (const Qic& u : plan.union_qics) CHECK_NOTHROW(u.validate());
    std::vector<Layout> flattened;
    for (const auto& set : plan.sets) flattened.insert(flattened.end(), set.begin(), set.end());
    std::sort(flattened.begin(), flattened.end());
    std::vector<Layout> expected = layouts;
    std::sort(expected.begin(), expected.end());
    CHECK(flattened == expected);
  }
}

TEST_CASE("a threshold-T plan is feasible at any higher threshold") {
  const Qic qic = path6_qic();
  const auto layouts =
      find_isomorphic_layouts(interaction_graph(qic), CouplingMap::heavy_hex_27());
  std::vector<Qic> mapped;
  for (const Layout& l : layouts) mapped.push_back(map_qic(qic, l, 27));

  const PartitionPlan plan = partition_with_distortion(layouts, mapped, 1, 7, 6);
  for (int higher : {2, 3, 10}) {
    for (const auto& set : plan.distortions)
      for (int total : set) CHECK(total <= higher);
  }
}

TEST_CASE("permutations spread at threshold 2") {
  const Qic qic = path6_qic();
  const auto layouts =
      find_isomorphic_layouts(interaction_graph(qic), CouplingMap::heavy_hex_27());
  std::vector<Qic> mapped;
  for (const Layout& l : layouts) mapped.push_back(map_qic(qic, l, 27));

  int lo = 1 << 30, hi = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int sets = partition_with_distortion(layouts, mapped, 2, seed, 1).num_sets();
    lo = std::min(lo, sets);
    hi = std::max(hi, sets);
  }
  CHECK(lo < hi);  // single-permutation outcomes are order dependent
}

TEST_CASE("exact minimum partition") {
  // three pairwise-disjoint layouts fit one set
  std::vector<Layout> apart = {Layout{{0, 1}}, Layout{{2, 3}}, Layout{{4, 5}}};
  CHECK(exact_min_partition_disjoint(apart) == 1);

  // a five-cycle of pairwise conflicts needs three sets
  std::vector<Layout> odd_cycle;
  for (int i = 0; i < 5; ++i) odd_cycle.push_back(Layout{{i, (i + 1) % 5}});
  CHECK(exact_min_partition_disjoint(odd_cycle) == 3);

  // the two disjoint embeddings from the 27-qubit device
  std::vector<Layout> pair = {Layout{{18, 21, 23, 24, 25, 26}}, Layout{{3, 2, 1, 4, 7, 6}}};
  CHECK(exact_min_partition_disjoint(pair) == 1);

  std::vector<Layout> too_many(13, Layout{{0}});
  CHECK_THROWS_AS(exact_min_partition_disjoint(too_many), std::invalid_argument);
}

TEST_CASE("greedy never beats the exact oracle") {
  const Qic qic = path6_qic();
  const auto all_layouts =
      find_isomorphic_layouts(interaction_graph(qic), CouplingMap::heavy_hex_27());
  std::mt19937_64 rng(2718);

  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Layout> layouts;
    std::vector<Qic> mapped;
    const int want = 4 + static_cast<int>(bounded(rng, 7));  // 4..10 layouts
    while (static_cast<int>(layouts.size()) < want) {
      const Layout& l = all_layouts[bounded(rng, all_layouts.size())];
      if (std::find(layouts.begin(), layouts.end(), l) == layouts.end()) {
        layouts.push_back(l);
        mapped.push_back(map_qic(qic, l, 27));
      }
    }

    const int greedy_disjoint = partition_disjoint(layouts, rng(), 6).num_sets();
    CHECK(greedy_disjoint >= exact_min_partition_disjoint(layouts));

    const int threshold = static_cast<int>(bounded(rng, 3));
    const int greedy_dist =
        partition_with_distortion(layouts, mapped, threshold, rng(), 6).num_sets();
    CHECK(greedy_dist >= exact_min_partition_distortion(layouts, mapped, threshold));
  }
}
