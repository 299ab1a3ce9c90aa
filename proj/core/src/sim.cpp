//
// This file is part of the qicsel library released under the Apache-2.0 license.
// See README.md for more information.
//

#include "qicsel/sim.hpp"

#include <algorithm>
#include <stdexcept>

#include "parallel.hpp"
#include "qicsel/clifford.hpp"
#include "qicsel/errors.hpp"
#include "qicsel/rng.hpp"

namespace qicsel {

long long ShotCounts::count_of(const std::string& key) const {
  auto it = counts.find(key);
  return it == counts.end() ? 0 : it->second;
}

namespace {

constexpr long long kShotChunk = 8192;

struct FrameOp {
  GateKind kind;
  int q0;
  int q1;
  double noise_prob;  // 0 disables the draw entirely
};

void apply_pauli_code(int code, int q, std::vector<std::uint8_t>& fx,
                      std::vector<std::uint8_t>& fz) {
  // code 0 = I; bit 0 flips the frame's X component, bit 1 its Z component
  if (code & 1) fx[static_cast<std::size_t>(q)] ^= 1;
  if (code & 2) fz[static_cast<std::size_t>(q)] ^= 1;
}

}  // namespace

ShotCounts run_clifford_circuit(const UserCircuit& circuit, const std::vector<int>& measured,
                                const NoiseSnapshot& noise, long long shots, std::uint64_t seed,
                                int workers) {
  if (shots < 1) throw std::invalid_argument("run_clifford_circuit: shots must be >= 1");
  circuit.validate();
  if (measured.empty()) throw std::invalid_argument("run_clifford_circuit: empty measured set");
  for (int q : measured)
    if (q < 0 || q >= circuit.num_qubits)
      throw std::invalid_argument("run_clifford_circuit: measured qubit out of range");

  for (const Gate& g : circuit.gates)
    if (!is_clifford_gate(g.kind))
      throw std::invalid_argument("run_clifford_circuit: gate '" +
                                  std::string(gate_name(g.kind)) + "' is not Clifford");

  const auto ideal = deterministic_outcome(circuit);
  if (!ideal)
    throw SimulationError("run_clifford_circuit: noise-free readout is not deterministic");

  // Resolve every touched noise entry up front so missing data fails fast.
  std::vector<FrameOp> ops;
  ops.reserve(circuit.gates.size());
  for (const Gate& g : circuit.gates) {
    if (g.kind == GateKind::MeasureAll) continue;
    FrameOp op{g.kind, g.qubit0, g.qubit1, 0.0};
    op.noise_prob = g.two_qubit() ? noise.two_qubit_rate(g.qubit0, g.qubit1)
                                  : noise.one_qubit_rate(g.qubit0);
    ops.push_back(op);
  }
  std::vector<double> readout(measured.size());
  for (std::size_t i = 0; i < measured.size(); ++i)
    readout[i] = noise.readout_rate(measured[static_cast<std::size_t>(i)]);

  std::string key_template(static_cast<std::size_t>(circuit.num_qubits), '0');
  for (int q : measured)
    key_template[static_cast<std::size_t>(q)] = (*ideal)[static_cast<std::size_t>(q)];

  const int num_chunks = static_cast<int>((shots + kShotChunk - 1) / kShotChunk);
  std::vector<std::map<std::string, long long>> partial(static_cast<std::size_t>(num_chunks));

  parallel_for(num_chunks, workers, [&](int chunk) {
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(chunk)));
    const long long begin = static_cast<long long>(chunk) * kShotChunk;
    const long long end = std::min(shots, begin + kShotChunk);
    auto& local = partial[static_cast<std::size_t>(chunk)];

    std::vector<std::uint8_t> fx(static_cast<std::size_t>(circuit.num_qubits));
    std::vector<std::uint8_t> fz(static_cast<std::size_t>(circuit.num_qubits));
    std::string key;

    for (long long shot = begin; shot < end; ++shot) {
      std::fill(fx.begin(), fx.end(), 0);
      std::fill(fz.begin(), fz.end(), 0);

      for (const FrameOp& op : ops) {
        const auto a = static_cast<std::size_t>(op.q0);
        switch (op.kind) {
          case GateKind::H:
            std::swap(fx[a], fz[a]);
            break;
          case GateKind::CX: {
            const auto b = static_cast<std::size_t>(op.q1);
            fx[b] ^= fx[a];
            fz[a] ^= fz[b];
            break;
          }
          case GateKind::CZ: {
            const auto b = static_cast<std::size_t>(op.q1);
            fz[b] ^= fx[a];
            fz[a] ^= fx[b];
            break;
          }
          case GateKind::Swap: {
            const auto b = static_cast<std::size_t>(op.q1);
            std::swap(fx[a], fx[b]);
            std::swap(fz[a], fz[b]);
            break;
          }
          default:
            break;  // X and Z commute with the frame up to phase
        }
        if (op.noise_prob > 0.0 && uniform_unit(rng) < op.noise_prob) {
          if (op.kind == GateKind::CX || op.kind == GateKind::CZ || op.kind == GateKind::Swap) {
            const int pick = static_cast<int>(bounded(rng, 15)) + 1;  // skip I(x)I
            apply_pauli_code(pick & 3, op.q0, fx, fz);
            apply_pauli_code(pick >> 2, op.q1, fx, fz);
          } else {
            apply_pauli_code(static_cast<int>(bounded(rng, 3)) + 1, op.q0, fx, fz);
          }
        }
      }

      key = key_template;
      for (std::size_t i = 0; i < measured.size(); ++i) {
        const auto q = static_cast<std::size_t>(measured[i]);
        bool bit = key[q] == '1';
        bit ^= fx[q] != 0;
        if (readout[i] > 0.0 && uniform_unit(rng) < readout[i]) bit = !bit;
        key[q] = bit ? '1' : '0';
      }
      ++local[key];
    }
  });

  ShotCounts result;
  result.width = circuit.num_qubits;
  result.shots = shots;
  for (const auto& local : partial)
    for (const auto& [key, count] : local) result.counts[key] += count;
  return result;
}

ShotCounts run_qic(const Qic& qic, const NoiseSnapshot& noise, long long shots,
                   std::uint64_t seed, int workers) {
  return run_clifford_circuit(qic_to_circuit(qic), qic.qubits, noise, shots, seed, workers);
}

ShotCounts marginalize(const ShotCounts& counts, const std::vector<int>& keep) {
  if (keep.empty()) throw std::invalid_argument("marginalize: empty keep list");
  std::vector<int> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("marginalize: keep list repeats a qubit");
  for (int q : keep)
    if (q < 0 || q >= counts.width)
      throw std::invalid_argument("marginalize: qubit " + std::to_string(q) +
                                  " not present in counts of width " + std::to_string(counts.width));

  ShotCounts out;
  out.width = static_cast<int>(keep.size());
  out.shots = counts.shots;
  std::string projected(keep.size(), '0');
  for (const auto& [key, count] : counts.counts) {
    for (std::size_t j = 0; j < keep.size(); ++j)
      projected[j] = key[static_cast<std::size_t>(keep[j])];
    out.counts[projected] += count;
  }
  return out;
}

}  // namespace qicsel
