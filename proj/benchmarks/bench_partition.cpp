#include <benchmark/benchmark.h>

#include <vector>

#include "qicsel/circuit.hpp"
#include "qicsel/layout_search.hpp"
#include "qicsel/partition.hpp"
#include "qicsel/qic.hpp"

namespace {

struct Fixture {
  qicsel::Qic qic;
  std::vector<qicsel::Layout> layouts;
  std::vector<qicsel::Qic> mapped;

  Fixture() {
    qicsel::UserCircuit c;
    c.num_qubits = 6;
    for (int i = 0; i < 5; ++i) c.gates.push_back(qicsel::Gate::cx(i, i + 1));
    qic = qicsel::build_qic(c);
    layouts = qicsel::find_isomorphic_layouts(qicsel::interaction_graph(qic),
                                              qicsel::CouplingMap::heavy_hex_27());
    for (const auto& layout : layouts) mapped.push_back(qicsel::map_qic(qic, layout, 27));
  }
};

const Fixture& fixture() {
  static Fixture fx;
  return fx;
}

void BM_PartitionDisjoint(benchmark::State& state) {
  const auto& fx = fixture();
  for (auto _ : state) {
    auto plan = qicsel::partition_disjoint(fx.layouts, 1, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(plan);
  }
}
BENCHMARK(BM_PartitionDisjoint)->Arg(1)->Arg(20);

void BM_PartitionDistortion(benchmark::State& state) {
  const auto& fx = fixture();
  for (auto _ : state) {
    auto plan = qicsel::partition_with_distortion(fx.layouts, fx.mapped,
                                                  static_cast<int>(state.range(0)), 1, 20);
    benchmark::DoNotOptimize(plan);
  }
}
BENCHMARK(BM_PartitionDistortion)->Arg(0)->Arg(1)->Arg(2);

void BM_ExactOracle(benchmark::State& state) {
  const auto& fx = fixture();
  const std::vector<qicsel::Layout> subset(fx.layouts.begin(),
                                           fx.layouts.begin() + state.range(0));
  for (auto _ : state) {
    const int sets = qicsel::exact_min_partition_disjoint(subset, 12);
    benchmark::DoNotOptimize(sets);
  }
}
BENCHMARK(BM_ExactOracle)->Arg(8)->Arg(10)->Arg(12);

}  // namespace
