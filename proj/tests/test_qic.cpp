#include <doctest.h>

#include <chrono>
#include <random>

#include "qicsel/circuit.hpp"
#include "qicsel/qic.hpp"
#include "qicsel/rng.hpp"
#include "support/generators.hpp"
#include "support/statevector.hpp"

using namespace qicsel;

namespace {
UserCircuit qaoa6(int p) {
  std::vector<double> gammas(static_cast<std::size_t>(p), 0.4);
  std::vector<double> betas(static_cast<std::size_t>(p), 0.7);
  return make_qaoa_path(6, p, gammas, betas);
}
}  // namespace

TEST_CASE("ladder circuit reduces to a depth-2 path network") {
  const Qic qic = build_qic(qaoa6(2));
  REQUIRE(qic.pair_counts.entries.size() == 5);
  for (int i = 0; i < 5; ++i) CHECK(qic.pair_counts.count(i, i + 1) == 1);
  CHECK(qic.two_qubit_depth() == 2);
  CHECK(!qic.no_two_qubit_gates);
  CHECK_NOTHROW(qic.validate());
}

TEST_CASE("qic is independent of the ladder depth") {
  const Qic reference = build_qic(qaoa6(2));
  for (int p : {1, 3, 5, 7, 9, 11}) CHECK(build_qic(qaoa6(p)) == reference);
}

TEST_CASE("census reduction") {
  UserCircuit single{2, {Gate::cx(0, 1)}};
  CHECK(build_qic(single).pair_counts.entries == std::map<QubitPair, int>{{{0, 1}, 1}});

  // counts 5 and 2 reduce to ceil(5/2)=3 and 1
  UserCircuit skewed{3, {}};
  for (int i = 0; i < 5; ++i) skewed.gates.push_back(Gate::cx(0, 1));
  for (int i = 0; i < 2; ++i) skewed.gates.push_back(Gate::cz(1, 2));
  const Qic qic = build_qic(skewed);
  CHECK(qic.pair_counts.count(0, 1) == 3);
  CHECK(qic.pair_counts.count(1, 2) == 1);
}

TEST_CASE("degenerate circuit yields a Hadamard sandwich with a warning flag") {
  UserCircuit single_qubit_only{3, {Gate::h(0), Gate::rx(1, 0.2)}};
  const Qic qic = build_qic(single_qubit_only);
  CHECK(qic.no_two_qubit_gates);
  CHECK(qic.pair_counts.empty());
  CHECK(qic.layers.empty());
  CHECK(qic_is_identity_witness(qic));
}

TEST_CASE("layer scheduling") {
  PairCounts path;
  for (int i = 0; i < 5; ++i) path.add(i, i + 1);
  const auto levels = schedule_layers(path, 6);
  REQUIRE(levels.size() == 2);
  CHECK(levels[0] == std::vector<QubitPair>{{0, 1}, {2, 3}, {4, 5}});
  CHECK(levels[1] == std::vector<QubitPair>{{1, 2}, {3, 4}});

  PairCounts repeated;
  repeated.add(0, 1, 3);
  CHECK(schedule_layers(repeated, 2).size() == 3);

  PairCounts star;
  star.add(0, 1);
  star.add(0, 2);
  star.add(0, 3);
  CHECK(schedule_layers(star, 4).size() == 3);
}

TEST_CASE("schedule depth stays within twice the incidence bound") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 100; ++trial) {
    const UserCircuit c = testing::random_circuit(rng, 10, 120);
    const Qic qic = build_qic(c);
    if (qic.no_two_qubit_gates) continue;
    int bound = 0;
    for (const auto& [q, incident] : qic.pair_counts.endpoint_counts())
      bound = std::max(bound, incident);
    CHECK(qic.two_qubit_depth() >= bound);
    CHECK(qic.two_qubit_depth() <= 2 * bound);
    CHECK_NOTHROW(qic.validate());
  }
}

TEST_CASE("identity witness holds for built QICs") {
  std::mt19937_64 rng(556);
  for (int trial = 0; trial < 50; ++trial) {
    const UserCircuit c = testing::random_circuit(rng, 12, 200);
    CHECK(qic_is_identity_witness(build_qic(c)));
  }
}

TEST_CASE("identity witness rejects a tampered sandwich") {
  auto sandwich_with = [](const Gate& extra) {
    UserCircuit c{3, {}};
    for (int q = 0; q < 3; ++q) c.gates.push_back(Gate::h(q));
    c.gates.push_back(Gate::cx(0, 1));
    c.gates.push_back(Gate::cx(1, 2));
    c.gates.push_back(extra);
    for (int q = 0; q < 3; ++q) c.gates.push_back(Gate::h(q));
    return c;
  };

  // A Z between the Hadamard layers conjugates to an X and flips the readout.
  const UserCircuit tampered = sandwich_with(Gate::z(0));
  CHECK(!qic_is_identity_witness(tampered));
  testing::Statevector sv(3);
  sv.apply_all(tampered);
  CHECK(sv.probability_all_zeros() < 1.0 - 1e-9);

  // An X there is harmless: it fixes the uniform superposition.
  const UserCircuit benign = sandwich_with(Gate::x(0));
  CHECK(qic_is_identity_witness(benign));
  testing::Statevector sv2(3);
  sv2.apply_all(benign);
  CHECK(sv2.probability_all_zeros() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("reduced counts have minimum 1 and sorted keys") {
  std::mt19937_64 rng(557);
  for (int trial = 0; trial < 100; ++trial) {
    const Qic qic = build_qic(testing::random_circuit(rng, 10, 150));
    if (qic.no_two_qubit_gates) continue;
    int min_count = 1 << 30;
    for (const auto& [pair, count] : qic.pair_counts.entries) {
      CHECK(pair.first < pair.second);
      CHECK(count >= 1);
      min_count = std::min(min_count, count);
    }
    CHECK(min_count == 1);
  }
}

TEST_CASE("mapping a qic onto physical qubits") {
  const Qic qic = build_qic(qaoa6(1));
  const Layout layout{{18, 21, 23, 24, 25, 26}};
  const Qic mapped = map_qic(qic, layout, 27);
  CHECK(mapped.num_qubits == 27);
  CHECK(mapped.qubits == std::vector<int>{18, 21, 23, 24, 25, 26});
  CHECK(mapped.pair_counts.count(18, 21) == 1);
  CHECK(mapped.pair_counts.count(25, 26) == 1);
  CHECK(mapped.two_qubit_depth() == qic.two_qubit_depth());
  CHECK_NOTHROW(mapped.validate());
}

TEST_CASE("construction time scales linearly with gate count") {
  // Best-of-five timing at two sizes; a linear algorithm stays well under 2.5x
  // when the gate count doubles at fixed width.
  auto ladder = [](int pairs_repeated) {
    UserCircuit c;
    c.num_qubits = 64;
    for (int rep = 0; rep < pairs_repeated; ++rep)
      for (int i = 0; i + 1 < 64; ++i) c.gates.push_back(Gate::cx(i, i + 1));
    return c;
  };
  auto time_build = [](const UserCircuit& c) {
    double best = 1e100;
    for (int rep = 0; rep < 5; ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      const Qic qic = build_qic(c);
      const auto t1 = std::chrono::steady_clock::now();
      if (qic.num_qubits != 64) std::abort();  // defeat dead-code elimination
      best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
  };
  const UserCircuit small = ladder(1500);
  const UserCircuit large = ladder(3000);
  const double t_small = time_build(small);
  const double t_large = time_build(large);
  CHECK(t_large / t_small < 2.5);
}
