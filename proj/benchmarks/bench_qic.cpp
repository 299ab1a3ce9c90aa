#include <benchmark/benchmark.h>

#include <cstdint>

#include "qicsel/circuit.hpp"
#include "qicsel/qic.hpp"

namespace {

qicsel::UserCircuit ladder(int width, int repetitions) {
  qicsel::UserCircuit c;
  c.num_qubits = width;
  for (int rep = 0; rep < repetitions; ++rep)
    for (int i = 0; i + 1 < width; ++i) c.gates.push_back(qicsel::Gate::cx(i, i + 1));
  return c;
}

void BM_BuildQic(benchmark::State& state) {
  const auto circuit = ladder(64, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto qic = qicsel::build_qic(circuit);
    benchmark::DoNotOptimize(qic);
  }
  state.SetComplexityN(static_cast<std::int64_t>(circuit.gates.size()));
}
BENCHMARK(BM_BuildQic)->RangeMultiplier(2)->Range(64, 4096)->Complexity(benchmark::oN);

void BM_ScheduleLayers(benchmark::State& state) {
  const auto qic = qicsel::build_qic(ladder(static_cast<int>(state.range(0)), 3));
  for (auto _ : state) {
    auto layers = qicsel::schedule_layers(qic.pair_counts, qic.num_qubits);
    benchmark::DoNotOptimize(layers);
  }
}
BENCHMARK(BM_ScheduleLayers)->Arg(16)->Arg(64)->Arg(127);

}  // namespace
