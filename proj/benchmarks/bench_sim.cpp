#include <benchmark/benchmark.h>

#include "qicsel/circuit.hpp"
#include "qicsel/noise.hpp"
#include "qicsel/qic.hpp"
#include "qicsel/sim.hpp"

namespace {

void BM_RunQic(benchmark::State& state) {
  const auto map = qicsel::CouplingMap::heavy_hex_27();
  qicsel::UserCircuit c;
  c.num_qubits = 27;
  for (const auto& [a, b] : map.edges) c.gates.push_back(qicsel::Gate::cx(a, b));
  const auto qic = qicsel::build_qic(c);
  const auto noise = qicsel::NoiseSnapshot::random_heterogeneous(map, 17);

  const long long shots = state.range(0);
  for (auto _ : state) {
    auto counts = qicsel::run_qic(qic, noise, shots, 5);
    benchmark::DoNotOptimize(counts);
  }
  state.SetItemsProcessed(state.iterations() * shots);
}
BENCHMARK(BM_RunQic)->Arg(1024)->Arg(4096)->Arg(16384);

void BM_RunQicWorkers(benchmark::State& state) {
  const auto map = qicsel::CouplingMap::heavy_hex_127();
  qicsel::UserCircuit c;
  c.num_qubits = 127;
  for (const auto& [a, b] : map.edges) c.gates.push_back(qicsel::Gate::cx(a, b));
  const auto qic = qicsel::build_qic(c);
  const auto noise = qicsel::NoiseSnapshot::random_heterogeneous(map, 18);

  for (auto _ : state) {
    auto counts = qicsel::run_qic(qic, noise, 65536, 5, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(counts);
  }
}
BENCHMARK(BM_RunQicWorkers)->Arg(1)->Arg(2)->Arg(4);

void BM_Marginalize(benchmark::State& state) {
  const auto map = qicsel::CouplingMap::heavy_hex_27();
  qicsel::UserCircuit c;
  c.num_qubits = 27;
  for (const auto& [a, b] : map.edges) c.gates.push_back(qicsel::Gate::cx(a, b));
  const auto qic = qicsel::build_qic(c);
  const auto noise = qicsel::NoiseSnapshot::random_heterogeneous(map, 19);
  const auto counts = qicsel::run_qic(qic, noise, 16384, 5);

  for (auto _ : state) {
    auto margin = qicsel::marginalize(counts, {18, 21, 23, 24, 25, 26});
    benchmark::DoNotOptimize(margin);
  }
}
BENCHMARK(BM_Marginalize)->Unit(benchmark::kMicrosecond);

}  // namespace
