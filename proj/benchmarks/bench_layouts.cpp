#include <benchmark/benchmark.h>

#include "qicsel/circuit.hpp"
#include "qicsel/layout_search.hpp"
#include "qicsel/qic.hpp"

namespace {

qicsel::PatternGraph path_pattern(int n) {
  qicsel::UserCircuit c;
  c.num_qubits = n;
  for (int i = 0; i + 1 < n; ++i) c.gates.push_back(qicsel::Gate::cx(i, i + 1));
  return qicsel::interaction_graph(qicsel::build_qic(c));
}

void BM_Layouts27(benchmark::State& state) {
  const auto map = qicsel::CouplingMap::heavy_hex_27();
  const auto pattern = path_pattern(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto layouts = qicsel::find_isomorphic_layouts(pattern, map);
    benchmark::DoNotOptimize(layouts);
  }
}
BENCHMARK(BM_Layouts27)->Arg(6)->Arg(10)->Arg(14)->Arg(20);

void BM_Layouts127(benchmark::State& state) {
  const auto map = qicsel::CouplingMap::heavy_hex_127();
  const auto pattern = path_pattern(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto layouts = qicsel::find_isomorphic_layouts(pattern, map);
    benchmark::DoNotOptimize(layouts);
  }
}
BENCHMARK(BM_Layouts127)->Arg(6)->Arg(10);

}  // namespace
