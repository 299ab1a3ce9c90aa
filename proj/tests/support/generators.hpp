// Random fixtures and small statistics helpers shared by the test suites.
#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "qicsel/circuit.hpp"
#include "qicsel/coupling.hpp"
#include "qicsel/noise.hpp"
#include "qicsel/rng.hpp"
#include "qicsel/sim.hpp"

namespace qicsel::testing {

/// Random circuit over the full gate set (angles included).
inline UserCircuit random_circuit(std::mt19937_64& rng, int max_qubits, int max_gates) {
  UserCircuit c;
  c.num_qubits = 2 + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(max_qubits - 1)));
  const int gates = 1 + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(max_gates)));
  for (int i = 0; i < gates; ++i) {
    const int q0 = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(c.num_qubits)));
    int q1 = q0;
    while (q1 == q0) q1 = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(c.num_qubits)));
    const double angle = uniform_in(rng, -3.14, 3.14);
    switch (bounded(rng, 9)) {
      case 0: c.gates.push_back(Gate::h(q0)); break;
      case 1: c.gates.push_back(Gate::x(q0)); break;
      case 2: c.gates.push_back(Gate::z(q0)); break;
      case 3: c.gates.push_back(Gate::rx(q0, angle)); break;
      case 4: c.gates.push_back(Gate::rz(q0, angle)); break;
      case 5: c.gates.push_back(Gate::cx(q0, q1)); break;
      case 6: c.gates.push_back(Gate::cz(q0, q1)); break;
      case 7: c.gates.push_back(Gate::rzz(q0, q1, angle)); break;
      default: c.gates.push_back(Gate::swap(q0, q1)); break;
    }
  }
  return c;
}

/// Random Clifford circuit with a deterministic all-qubit readout: a Hadamard
/// sandwich around a {CX, X, Z, SWAP} core, or a plain {CX, X, SWAP} circuit.
inline UserCircuit random_deterministic_clifford(std::mt19937_64& rng, int num_qubits,
                                                 int max_core_gates) {
  UserCircuit c;
  c.num_qubits = num_qubits;
  const bool sandwich = bounded(rng, 2) == 0;
  if (sandwich)
    for (int q = 0; q < num_qubits; ++q) c.gates.push_back(Gate::h(q));
  const int gates = 1 + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(max_core_gates)));
  for (int i = 0; i < gates; ++i) {
    const int q0 = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(num_qubits)));
    int q1 = q0;
    while (q1 == q0) q1 = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(num_qubits)));
    switch (bounded(rng, 4)) {
      case 0: c.gates.push_back(Gate::cx(q0, q1)); break;
      case 1: c.gates.push_back(Gate::x(q0)); break;
      case 2: c.gates.push_back(sandwich ? Gate::z(q0) : Gate::x(q0)); break;
      default: c.gates.push_back(Gate::swap(q0, q1)); break;
    }
  }
  if (sandwich)
    for (int q = 0; q < num_qubits; ++q) c.gates.push_back(Gate::h(q));
  return c;
}

/// Noise snapshot with entries for every qubit and every qubit pair (so
/// arbitrary test circuits find their edges), rates drawn uniformly.
inline NoiseSnapshot random_dense_noise(std::mt19937_64& rng, int num_qubits, double p1_max,
                                        double p2_max, double pm_max) {
  NoiseSnapshot noise;
  for (int q = 0; q < num_qubits; ++q) {
    noise.p1[q] = uniform_in(rng, 0.0, p1_max);
    noise.pm[q] = uniform_in(rng, 0.0, pm_max);
  }
  for (int a = 0; a < num_qubits; ++a)
    for (int b = a + 1; b < num_qubits; ++b) noise.p2[{a, b}] = uniform_in(rng, 0.0, p2_max);
  return noise;
}

inline double total_variation(const ShotCounts& counts, const std::vector<double>& exact) {
  // exact is indexed by basis index with bit q = qubit q
  double tv = 0.0;
  std::vector<double> empirical(exact.size(), 0.0);
  for (const auto& [key, count] : counts.counts) {
    std::size_t index = 0;
    for (std::size_t q = 0; q < key.size(); ++q)
      if (key[q] == '1') index |= std::size_t{1} << q;
    empirical[index] = static_cast<double>(count) / static_cast<double>(counts.shots);
  }
  for (std::size_t i = 0; i < exact.size(); ++i) tv += std::abs(empirical[i] - exact[i]);
  return 0.5 * tv;
}

/// Spearman rank correlation (average ranks for ties).
inline double spearman(const std::vector<double>& xs, const std::vector<double>& ys) {
  auto ranks = [](const std::vector<double>& v) {
    std::vector<std::size_t> order(v.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> rank(v.size());
    std::size_t i = 0;
    while (i < order.size()) {
      std::size_t j = i;
      while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
      const double avg = 0.5 * (static_cast<double>(i) + static_cast<double>(j)) + 1.0;
      for (std::size_t k = i; k <= j; ++k) rank[order[k]] = avg;
      i = j + 1;
    }
    return rank;
  };
  const auto rx = ranks(xs);
  const auto ry = ranks(ys);
  const double n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += rx[i];
    my += ry[i];
  }
  mx /= n;
  my /= n;
  double cov = 0, vx = 0, vy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    cov += (rx[i] - mx) * (ry[i] - my);
    vx += (rx[i] - mx) * (rx[i] - mx);
    vy += (ry[i] - my) * (ry[i] - my);
  }
  return cov / std::sqrt(vx * vy);
}

}  // namespace qicsel::testing
