//
// This file is part of the qicsel library released under the Apache-2.0 license.
// See README.md for more information.
//

#pragma once

#include <compare>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace qicsel {

/// Unordered qubit pair, stored as (min, max).
using QubitPair = std::pair<int, int>;

inline QubitPair sorted_pair(int a, int b) {
  return a < b ? QubitPair{a, b} : QubitPair{b, a};
}

/// Undirected hardware connectivity graph.
struct CouplingMap {
  int num_qubits = 0;
  std::vector<QubitPair> edges;  // sorted, unique, endpoints distinct

  /// Throws ParseError on loops, duplicate edges or out-of-range endpoints.
  void validate() const;
  void normalize();  // sorts pairs and the edge list, drops duplicates
  bool has_edge(int a, int b) const;
  const std::vector<int>& neighbors(int q) const;
  int degree(int q) const;

  static CouplingMap line(int n);
  static CouplingMap grid(int rows, int cols);
  static CouplingMap ring(int n);
  /// 27-qubit heavy-hex device topology.
  static CouplingMap heavy_hex_27();
  /// 127-qubit heavy-hex device topology.
  static CouplingMap heavy_hex_127();
  /// Resolves "heavy-hex-27", "heavy-hex-127", "line-N", "ring-N" or
  /// "grid-RxC"; returns std::nullopt-like empty map on unknown names via
  /// ParseError.
  static CouplingMap fixture(std::string_view name);

 private:
  mutable std::vector<std::vector<int>> adjacency_;  // built lazily
  void build_adjacency() const;
};

/// Ordered virtual->physical assignment: mapping[i] hosts virtual qubit i.
struct Layout {
  std::vector<int> mapping;

  int size() const { return static_cast<int>(mapping.size()); }
  int operator[](int i) const { return mapping[static_cast<std::size_t>(i)]; }
  auto begin() const { return mapping.begin(); }
  auto end() const { return mapping.end(); }

  bool overlaps(const Layout& other) const;
  /// True iff every adjacent-in-pattern pair lands on a coupling edge.
  bool embeds(const std::vector<QubitPair>& pattern_edges, const CouplingMap& map) const;

  friend bool operator==(const Layout&, const Layout&) = default;
  friend auto operator<=>(const Layout&, const Layout&) = default;
};

}  // namespace qicsel
