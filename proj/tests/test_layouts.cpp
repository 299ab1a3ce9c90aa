#include <doctest.h>

#include <algorithm>
#include <random>

#include "qicsel/circuit.hpp"
#include "qicsel/layout_search.hpp"
#include "qicsel/qic.hpp"
#include "qicsel/rng.hpp"

using namespace qicsel;

namespace {

Qic path_qic(int n) {
  UserCircuit c;
  c.num_qubits = n;
  for (int i = 0; i + 1 < n; ++i) c.gates.push_back(Gate::cx(i, i + 1));
  return build_qic(c);
}

// Exhaustive oracle: every injective tuple whose pattern edges land on map
// edges. Only viable for small maps.
std::vector<Layout> brute_force_layouts(const PatternGraph& pattern, const CouplingMap& map) {
  std::vector<Layout> result;
  std::vector<int> mapping(static_cast<std::size_t>(pattern.num_vertices), -1);
  std::vector<char> used(static_cast<std::size_t>(map.num_qubits), 0);
  auto rec = [&](auto&& self, int v) -> void {
    if (v == pattern.num_vertices) {
      Layout l{mapping};
      if (l.embeds(pattern.edges, map)) result.push_back(std::move(l));
      return;
    }
    for (int phys = 0; phys < map.num_qubits; ++phys) {
      if (used[static_cast<std::size_t>(phys)]) continue;
      used[static_cast<std::size_t>(phys)] = 1;
      mapping[static_cast<std::size_t>(v)] = phys;
      self(self, v + 1);
      used[static_cast<std::size_t>(phys)] = 0;
    }
  };
  rec(rec, 0);
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace

TEST_CASE("interaction graph") {
  const PatternGraph path = interaction_graph(path_qic(6));
  CHECK(path.num_vertices == 6);
  CHECK(path.edges == std::vector<QubitPair>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});

  Qic empty;
  empty.num_qubits = 3;
  empty.qubits = {0, 1, 2};
  empty.no_two_qubit_gates = true;
  const PatternGraph edgeless = interaction_graph(empty);
  CHECK(edgeless.num_vertices == 3);
  CHECK(edgeless.edges.empty());

  Qic repeated;
  repeated.num_qubits = 2;
  repeated.qubits = {0, 1};
  repeated.pair_counts.add(0, 1, 3);
  repeated.layers = schedule_layers(repeated.pair_counts, 2);
  CHECK(interaction_graph(repeated).edges == std::vector<QubitPair>{{0, 1}});
}

TEST_CASE("heavy-hex fixtures are well formed") {
  const CouplingMap hh27 = CouplingMap::heavy_hex_27();
  CHECK(hh27.num_qubits == 27);
  CHECK(hh27.edges.size() == 28);
  CHECK_NOTHROW(hh27.validate());

  const CouplingMap hh127 = CouplingMap::heavy_hex_127();
  CHECK(hh127.num_qubits == 127);
  CHECK(hh127.edges.size() == 144);
  CHECK_NOTHROW(hh127.validate());
  for (int q = 0; q < 127; ++q) CHECK(hh127.degree(q) <= 3);
}

TEST_CASE("six-qubit path enumerations on the 27-qubit device") {
  const auto layouts =
      find_isomorphic_layouts(interaction_graph(path_qic(6)), CouplingMap::heavy_hex_27());
  CHECK(layouts.size() == 104);
  CHECK(std::is_sorted(layouts.begin(), layouts.end()));

  // known embeddings
  for (const Layout& expected :
       {Layout{{18, 21, 23, 24, 25, 26}}, Layout{{3, 2, 1, 4, 7, 6}},
        Layout{{19, 22, 25, 24, 23, 21}}, Layout{{18, 21, 23, 24, 25, 22}},
        Layout{{19, 16, 14, 13, 12, 15}}, Layout{{20, 19, 22, 25, 24, 23}}})
    CHECK(std::binary_search(layouts.begin(), layouts.end(), expected));

  // every layout embeds the pattern
  const auto pattern = interaction_graph(path_qic(6));
  for (const Layout& l : layouts) CHECK(l.embeds(pattern.edges, CouplingMap::heavy_hex_27()));
}

TEST_CASE("orientations count separately") {
  const auto layouts =
      find_isomorphic_layouts(interaction_graph(path_qic(2)), CouplingMap::line(2));
  REQUIRE(layouts.size() == 2);
  CHECK(layouts[0] == Layout{{0, 1}});
  CHECK(layouts[1] == Layout{{1, 0}});
}

TEST_CASE("triangle cannot embed into a tree") {
  PatternGraph triangle;
  triangle.num_vertices = 3;
  triangle.edges = {{0, 1}, {0, 2}, {1, 2}};
  CHECK(find_isomorphic_layouts(triangle, CouplingMap::line(8)).empty());
  CHECK(find_isomorphic_layouts(triangle, CouplingMap::heavy_hex_27()).empty());
}

TEST_CASE("path into a cycle has 2n embeddings") {
  for (int n = 3; n <= 12; ++n) {
    const CouplingMap ring = CouplingMap::ring(n);
    for (int k = 2; k <= n; ++k) {
      const auto layouts = find_isomorphic_layouts(interaction_graph(path_qic(k)), ring);
      CHECK(static_cast<int>(layouts.size()) == 2 * n);
    }
  }
}

TEST_CASE("search agrees with the exhaustive oracle on small maps") {
  std::mt19937_64 rng(90210);
  const CouplingMap maps[] = {CouplingMap::line(6), CouplingMap::ring(6), CouplingMap::grid(2, 4),
                              CouplingMap::grid(2, 3)};
  for (const CouplingMap& map : maps) {
    for (int trial = 0; trial < 6; ++trial) {
      PatternGraph pattern;
      pattern.num_vertices = 2 + static_cast<int>(bounded(rng, 3));  // 2..4 vertices
      for (int a = 0; a < pattern.num_vertices; ++a)
        for (int b = a + 1; b < pattern.num_vertices; ++b)
          if (bounded(rng, 2) == 0) pattern.edges.push_back({a, b});
      CHECK(find_isomorphic_layouts(pattern, map) == brute_force_layouts(pattern, map));
    }
  }
}

TEST_CASE("disjointness against a set") {
  const std::vector<Layout> set1 = {Layout{{18, 21, 23, 24, 25, 26}}};
  CHECK(is_layout_disjoint_with_set(set1, Layout{{3, 2, 1, 4, 7, 6}}));

  const std::vector<Layout> set2 = {Layout{{18, 21, 23, 24, 25, 22}}};
  CHECK(!is_layout_disjoint_with_set(set2, Layout{{19, 22, 25, 24, 23, 21}}));

  CHECK(is_layout_disjoint_with_set({}, Layout{{0, 1, 2}}));
}
