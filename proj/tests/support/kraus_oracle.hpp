// Density-matrix oracle with depolarizing and readout channels. Computes the
// exact output distribution of a noisy Clifford circuit on <= ~8 qubits,
// independently of the Pauli-frame engine.
#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "qicsel/circuit.hpp"
#include "qicsel/noise.hpp"

namespace qicsel::testing {

class DensityMatrix {
 public:
  explicit DensityMatrix(int num_qubits)
      : n_(num_qubits), dim_(std::size_t{1} << num_qubits), rho_(dim_ * dim_) {
    if (num_qubits > 8) throw std::invalid_argument("density oracle: too many qubits");
    rho_[0] = 1.0;  // |0...0><0...0|
  }

  void apply_unitary(const Gate& g) {
    apply_gate_rows(g);
    apply_gate_cols(g);
  }

  // rho -> (1-p) rho + p/3 sum_{P in X,Y,Z} P rho P
  void apply_depolarizing1(int q, double p) {
    if (p == 0.0) return;
    std::vector<std::complex<double>> mix(dim_ * dim_, 0.0);
    for (const GateKind pauli : {GateKind::X, GateKind::Z}) {
      DensityMatrix copy = *this;
      copy.apply_unitary({pauli, q, -1, 0.0});
      add_scaled(mix, copy.rho_, p / 3.0);
    }
    {
      DensityMatrix copy = *this;  // Y = iXZ; phases cancel in P rho P
      copy.apply_unitary({GateKind::Z, q, -1, 0.0});
      copy.apply_unitary({GateKind::X, q, -1, 0.0});
      add_scaled(mix, copy.rho_, p / 3.0);
    }
    scale(rho_, 1.0 - p);
    add_scaled(rho_, mix, 1.0);
  }

  // rho -> (1-p) rho + p/15 sum over the 15 non-identity two-qubit Paulis
  void apply_depolarizing2(int qa, int qb, double p) {
    if (p == 0.0) return;
    std::vector<std::complex<double>> mix(dim_ * dim_, 0.0);
    for (int code = 1; code < 16; ++code) {
      DensityMatrix copy = *this;
      copy.apply_pauli_code(code & 3, qa);
      copy.apply_pauli_code(code >> 2, qb);
      add_scaled(mix, copy.rho_, p / 15.0);
    }
    scale(rho_, 1.0 - p);
    add_scaled(rho_, mix, 1.0);
  }

  // Diagonal in the computational basis; index bit q = qubit q.
  std::vector<double> measurement_probabilities() const {
    std::vector<double> probs(dim_);
    for (std::size_t i = 0; i < dim_; ++i) probs[i] = rho_[i * dim_ + i].real();
    return probs;
  }

 private:
  int n_;
  std::size_t dim_;
  std::vector<std::complex<double>> rho_;

  void apply_pauli_code(int code, int q) {
    // code bit 0 = X factor, bit 1 = Z factor (phase irrelevant under P.P)
    if (code & 1) apply_unitary({GateKind::X, q, -1, 0.0});
    if (code & 2) apply_unitary({GateKind::Z, q, -1, 0.0});
  }

  static void add_scaled(std::vector<std::complex<double>>& dst,
                         const std::vector<std::complex<double>>& src, double w) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += w * src[i];
  }
  static void scale(std::vector<std::complex<double>>& m, double w) {
    for (auto& v : m) v *= w;
  }

  // U rho: transform row index of each column.
  void apply_gate_rows(const Gate& g) {
    for (std::size_t col = 0; col < dim_; ++col) transform_axis(g, /*row_axis=*/true, col);
  }
  // rho U^dagger: every supported gate matrix is real, so conj(U) = U.
  void apply_gate_cols(const Gate& g) {
    for (std::size_t row = 0; row < dim_; ++row) transform_axis(g, /*row_axis=*/false, row);
  }

  std::complex<double>& at(std::size_t row, std::size_t col) { return rho_[row * dim_ + col]; }

  void transform_axis(const Gate& g, bool row_axis, std::size_t fixed) {
    auto get = [&](std::size_t idx) -> std::complex<double>& {
      return row_axis ? at(idx, fixed) : at(fixed, idx);
    };
    const std::size_t a = std::size_t{1} << g.qubit0;
    const std::size_t b = g.two_qubit() ? std::size_t{1} << g.qubit1 : 0;

    using C = std::complex<double>;

    switch (g.kind) {
      case GateKind::H: {
        const double s = 1.0 / std::sqrt(2.0);
        for (std::size_t idx = 0; idx < dim_; ++idx) {
          if (idx & a) continue;
          const C v0 = get(idx), v1 = get(idx | a);
          get(idx) = s * (v0 + v1);
          get(idx | a) = s * (v0 - v1);
        }
        break;
      }
      case GateKind::X:
        for (std::size_t idx = 0; idx < dim_; ++idx)
          if (!(idx & a)) std::swap(get(idx), get(idx | a));
        break;
      case GateKind::Z:
        for (std::size_t idx = 0; idx < dim_; ++idx)
          if (idx & a) get(idx) = -get(idx);
        break;
      case GateKind::CX:
        for (std::size_t idx = 0; idx < dim_; ++idx)
          if ((idx & a) && !(idx & b)) std::swap(get(idx), get(idx | b));
        break;
      case GateKind::CZ:
        for (std::size_t idx = 0; idx < dim_; ++idx)
          if ((idx & a) && (idx & b)) get(idx) = -get(idx);
        break;
      case GateKind::Swap:
        for (std::size_t idx = 0; idx < dim_; ++idx)
          if ((idx & a) && !(idx & b)) std::swap(get(idx), get(idx ^ a ^ b));
        break;
      default:
        throw std::invalid_argument("density oracle: unsupported gate");
    }
  }
};

/// Exact output distribution of a Clifford circuit under the engine's noise
/// model: depolarizing after every gate, readout flips on every qubit.
/// Index bit q of the result corresponds to qubit q.
inline std::vector<double> exact_noisy_distribution(const UserCircuit& circuit,
                                                    const NoiseSnapshot& noise) {
  DensityMatrix rho(circuit.num_qubits);
  for (const Gate& g : circuit.gates) {
    if (g.kind == GateKind::MeasureAll) continue;
    rho.apply_unitary(g);
    if (g.two_qubit())
      rho.apply_depolarizing2(g.qubit0, g.qubit1, noise.two_qubit_rate(g.qubit0, g.qubit1));
    else
      rho.apply_depolarizing1(g.qubit0, noise.one_qubit_rate(g.qubit0));
  }

  std::vector<double> probs = rho.measurement_probabilities();
  for (int q = 0; q < circuit.num_qubits; ++q) {
    const double pm = noise.readout_rate(q);
    if (pm == 0.0) continue;
    const std::size_t bit = std::size_t{1} << q;
    std::vector<double> flipped(probs.size());
    for (std::size_t i = 0; i < probs.size(); ++i)
      flipped[i] = (1.0 - pm) * probs[i] + pm * probs[i ^ bit];
    probs = std::move(flipped);
  }
  return probs;
}

}  // namespace qicsel::testing
