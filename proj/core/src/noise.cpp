//
// This file is part of the qicsel library released under the Apache-2.0 license.
// See README.md for more information.
//

#include "qicsel/noise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qicsel/errors.hpp"
#include "qicsel/rng.hpp"

namespace qicsel {

double NoiseSnapshot::one_qubit_rate(int q) const {
  auto it = p1.find(q);
  if (it == p1.end())
    throw SimulationError("noise: missing one-qubit rate for qubit " + std::to_string(q));
  return it->second;
}

double NoiseSnapshot::two_qubit_rate(int a, int b) const {
  auto it = p2.find(sorted_pair(a, b));
  if (it == p2.end())
    throw SimulationError("noise: missing two-qubit rate for edge (" + std::to_string(a) + "," +
                          std::to_string(b) + ")");
  return it->second;
}

double NoiseSnapshot::readout_rate(int q) const {
  auto it = pm.find(q);
  if (it == pm.end())
    throw SimulationError("noise: missing readout rate for qubit " + std::to_string(q));
  return it->second;
}

void NoiseSnapshot::validate() const {
  auto in_range = [](double p) { return p >= 0.0 && p <= 1.0 && std::isfinite(p); };
  for (const auto& [q, p] : p1)
    if (q < 0 || !in_range(p)) throw ParseError("noise: bad p1 entry for qubit " + std::to_string(q));
  for (const auto& [q, p] : pm)
    if (q < 0 || !in_range(p)) throw ParseError("noise: bad pm entry for qubit " + std::to_string(q));
  for (const auto& [edge, p] : p2)
    if (edge.first < 0 || edge.second <= edge.first || !in_range(p))
      throw ParseError("noise: bad p2 entry for edge (" + std::to_string(edge.first) + "," +
                       std::to_string(edge.second) + ")");
}

NoiseSnapshot NoiseSnapshot::uniform(const CouplingMap& map, double p1, double p2, double pm,
                                     double time) {
  NoiseSnapshot s;
  s.time = time;
  for (int q = 0; q < map.num_qubits; ++q) {
    s.p1[q] = p1;
    s.pm[q] = pm;
  }
  for (const auto& edge : map.edges) s.p2[edge] = p2;
  s.validate();
  return s;
}

namespace {

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(uniform_in(rng, std::log(lo), std::log(hi)));
}

}  // namespace

NoiseSnapshot NoiseSnapshot::random_heterogeneous(const CouplingMap& map, std::uint64_t seed,
                                                  double time) {
  std::mt19937_64 rng(splitmix64(seed));
  NoiseSnapshot s;
  s.time = time;
  for (int q = 0; q < map.num_qubits; ++q) {
    s.p1[q] = log_uniform(rng, 1e-3, 1e-2);
    s.pm[q] = log_uniform(rng, 1e-3, 5e-2);
  }
  for (const auto& edge : map.edges) s.p2[edge] = log_uniform(rng, 1e-2, 1e-1);
  return s;
}

void DriftSchedule::validate() const {
  if (snapshots.empty()) throw ParseError("drift: schedule needs at least one snapshot");
  for (std::size_t i = 0; i < snapshots.size(); ++i) {
    snapshots[i].validate();
    if (i > 0 && !(snapshots[i - 1].time < snapshots[i].time))
      throw ParseError("drift: snapshot times must be strictly increasing");
  }
  if (interpolation == Interpolation::Linear) {
    for (std::size_t i = 1; i < snapshots.size(); ++i) {
      const NoiseSnapshot& a = snapshots[0];
      const NoiseSnapshot& b = snapshots[i];
      auto same_keys = [](const auto& lhs, const auto& rhs) {
        if (lhs.size() != rhs.size()) return false;
        auto it = rhs.begin();
        for (const auto& [k, v] : lhs) {
          if (it->first != k) return false;
          ++it;
        }
        return true;
      };
      if (!same_keys(a.p1, b.p1) || !same_keys(a.p2, b.p2) || !same_keys(a.pm, b.pm))
        throw ParseError("drift: linear interpolation needs identical key sets across snapshots");
    }
  }
}

double DriftSchedule::first_time() const { return snapshots.front().time; }
double DriftSchedule::last_time() const { return snapshots.back().time; }

DriftSchedule DriftSchedule::single(NoiseSnapshot snapshot) {
  DriftSchedule s;
  s.interpolation = Interpolation::Step;
  s.snapshots.push_back(std::move(snapshot));
  return s;
}

NoiseSnapshot snapshot_at(const DriftSchedule& schedule, double t) {
  schedule.validate();
  if (t < schedule.first_time())
    throw std::invalid_argument("snapshot_at: time precedes the first snapshot");
  if (t >= schedule.last_time()) return schedule.snapshots.back();

  std::size_t hi = 1;
  while (schedule.snapshots[hi].time <= t) ++hi;
  const NoiseSnapshot& a = schedule.snapshots[hi - 1];
  if (schedule.interpolation == DriftSchedule::Interpolation::Step) {
    NoiseSnapshot out = a;
    out.time = t;
    return out;
  }

  const NoiseSnapshot& b = schedule.snapshots[hi];
  const double w = (t - a.time) / (b.time - a.time);
  auto lerp = [&](double x, double y) { return std::clamp(x + w * (y - x), 0.0, 1.0); };

  NoiseSnapshot out;
  out.time = t;
  for (const auto& [q, p] : a.p1) out.p1[q] = lerp(p, b.p1.at(q));
  for (const auto& [q, p] : a.pm) out.pm[q] = lerp(p, b.pm.at(q));
  for (const auto& [edge, p] : a.p2) out.p2[edge] = lerp(p, b.p2.at(edge));
  return out;
}

}  // namespace qicsel
