//
// This file is part of the qicsel library released under the Apache-2.0 license.
// See README.md for more information.
//

#include "qicsel/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qicsel/rng.hpp"

namespace qicsel {

double qic_score_counts(const ShotCounts& counts) {
  if (counts.shots < 1) throw std::invalid_argument("qic_score_counts: shots must be >= 1");
  return static_cast<double>(counts.count_of(counts.all_zeros_key())) /
         static_cast<double>(counts.shots);
}

double qic_score_zz(const ShotCounts& counts, const std::vector<int>& ordering) {
  if (counts.shots < 1) throw std::invalid_argument("qic_score_zz: shots must be >= 1");
  if (ordering.size() < 2)
    throw std::invalid_argument("qic_score_zz: ordering needs at least two qubits");
  for (int pos : ordering)
    if (pos < 0 || pos >= counts.width)
      throw std::invalid_argument("qic_score_zz: ordering references position " +
                                  std::to_string(pos) + " outside width " +
                                  std::to_string(counts.width));

  const std::size_t pairs = ordering.size() - 1;
  double sum = 0.0;
  for (const auto& [key, count] : counts.counts) {
    int agreement = 0;  // (+1 / -1) summed over adjacent pairs
    for (std::size_t i = 0; i + 1 < ordering.size(); ++i) {
      const char a = key[static_cast<std::size_t>(ordering[i])];
      const char b = key[static_cast<std::size_t>(ordering[i + 1])];
      agreement += a == b ? 1 : -1;
    }
    sum += static_cast<double>(count) * static_cast<double>(agreement);
  }
  return sum / (static_cast<double>(counts.shots) * static_cast<double>(pairs));
}

namespace {

double success_product_qic(const Layout& layout, const Qic& virtual_qic,
                           const NoiseSnapshot& noise) {
  double product = 1.0;
  // Two Hadamard layers over the active qubits, then the CNOT network, then
  // readout of every active qubit.
  for (int i = 0; i < layout.size(); ++i) {
    const double p1 = noise.one_qubit_rate(layout[i]);
    product *= (1.0 - p1) * (1.0 - p1);
  }
  auto physical_of = [&](int v) {
    auto it = std::lower_bound(virtual_qic.qubits.begin(), virtual_qic.qubits.end(), v);
    return layout[static_cast<int>(it - virtual_qic.qubits.begin())];
  };
  for (const auto& [pair, count] : virtual_qic.pair_counts.entries) {
    const double p2 = noise.two_qubit_rate(physical_of(pair.first), physical_of(pair.second));
    for (int rep = 0; rep < count; ++rep) product *= 1.0 - p2;
  }
  for (int i = 0; i < layout.size(); ++i) product *= 1.0 - noise.readout_rate(layout[i]);
  return product;
}

}  // namespace

double mapomatic_score(const Layout& layout, const Qic& virtual_qic, const NoiseSnapshot& noise) {
  if (layout.size() != static_cast<int>(virtual_qic.qubits.size()))
    throw std::invalid_argument("mapomatic_score: layout width differs from the QIC");
  return 1.0 - success_product_qic(layout, virtual_qic, noise);
}

double mapomatic_score_circuit(const Layout& layout, const UserCircuit& circuit,
                               const NoiseSnapshot& noise) {
  if (layout.size() != circuit.num_qubits)
    throw std::invalid_argument("mapomatic_score_circuit: layout width differs from the circuit");
  double product = 1.0;
  for (const Gate& g : circuit.gates) {
    if (g.kind == GateKind::MeasureAll) continue;  // readout handled below
    if (g.two_qubit())
      product *= 1.0 - noise.two_qubit_rate(layout[g.qubit0], layout[g.qubit1]);
    else
      product *= 1.0 - noise.one_qubit_rate(layout[g.qubit0]);
  }
  for (int i = 0; i < layout.size(); ++i) product *= 1.0 - noise.readout_rate(layout[i]);
  return 1.0 - product;
}

BootstrapStats bootstrap_scores(const ShotCounts& counts, int resamples, std::uint64_t seed,
                                const std::vector<int>& ordering) {
  if (resamples < 2) throw std::invalid_argument("bootstrap_scores: resamples must be >= 2");
  if (counts.shots < 1) throw std::invalid_argument("bootstrap_scores: empty histogram");

  // Cumulative layout of the histogram, in key order.
  std::vector<std::string> keys;
  std::vector<long long> cumulative;
  long long running = 0;
  for (const auto& [key, count] : counts.counts) {
    running += count;
    keys.push_back(key);
    cumulative.push_back(running);
  }

  std::vector<double> counts_scores, zz_scores;
  counts_scores.reserve(static_cast<std::size_t>(resamples));
  zz_scores.reserve(static_cast<std::size_t>(resamples));

  ShotCounts resampled;
  resampled.width = counts.width;
  resampled.shots = counts.shots;
  for (int r = 0; r < resamples; ++r) {
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    resampled.counts.clear();
    for (long long shot = 0; shot < counts.shots; ++shot) {
      const auto draw = static_cast<long long>(bounded(rng, static_cast<std::uint64_t>(counts.shots)));
      const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), draw);
      ++resampled.counts[keys[static_cast<std::size_t>(it - cumulative.begin())]];
    }
    counts_scores.push_back(qic_score_counts(resampled));
    zz_scores.push_back(qic_score_zz(resampled, ordering));
  }

  auto mean_of = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
  };
  auto std_of = [](const std::vector<double>& v, double mean) {
    double s = 0.0;
    for (double x : v) s += (x - mean) * (x - mean);
    return std::sqrt(s / static_cast<double>(v.size() - 1));
  };

  BootstrapStats stats;
  stats.resamples = resamples;
  stats.counts_mean = mean_of(counts_scores);
  stats.counts_std = std_of(counts_scores, stats.counts_mean);
  stats.zz_mean = mean_of(zz_scores);
  stats.zz_std = std_of(zz_scores, stats.zz_mean);
  return stats;
}

}  // namespace qicsel
