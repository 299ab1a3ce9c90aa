//
// This file is part of the qicsel library released under the Apache-2.0 license.
// See README.md for more information.
//

#include "qicsel/coupling.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "qicsel/errors.hpp"

namespace qicsel {

void CouplingMap::validate() const {
  if (num_qubits < 0) throw ParseError("coupling map: negative qubit count");
  for (const auto& [a, b] : edges) {
    if (a == b) throw ParseError("coupling map: loop edge on qubit " + std::to_string(a));
    if (a < 0 || b < 0 || a >= num_qubits || b >= num_qubits)
      throw ParseError("coupling map: edge (" + std::to_string(a) + "," + std::to_string(b) +
                       ") out of range");
  }
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i] <= edges[i - 1])
      throw ParseError("coupling map: edges must be sorted and unique; call normalize()");
}

void CouplingMap::normalize() {
  for (auto& e : edges) e = sorted_pair(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  adjacency_.clear();
}

bool CouplingMap::has_edge(int a, int b) const {
  return std::binary_search(edges.begin(), edges.end(), sorted_pair(a, b));
}

void CouplingMap::build_adjacency() const {
  adjacency_.assign(static_cast<std::size_t>(num_qubits), {});
  for (const auto& [a, b] : edges) {
    adjacency_[static_cast<std::size_t>(a)].push_back(b);
    adjacency_[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

const std::vector<int>& CouplingMap::neighbors(int q) const {
  if (adjacency_.empty()) build_adjacency();
  return adjacency_[static_cast<std::size_t>(q)];
}

int CouplingMap::degree(int q) const { return static_cast<int>(neighbors(q).size()); }

CouplingMap CouplingMap::line(int n) {
  CouplingMap map;
  map.num_qubits = n;
  for (int i = 0; i + 1 < n; ++i) map.edges.push_back({i, i + 1});
  return map;
}

CouplingMap CouplingMap::ring(int n) {
  CouplingMap map = line(n);
  if (n >= 3) map.edges.push_back({0, n - 1});
  map.normalize();
  return map;
}

CouplingMap CouplingMap::grid(int rows, int cols) {
  CouplingMap map;
  map.num_qubits = rows * cols;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) map.edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) map.edges.push_back({id(r, c), id(r + 1, c)});
    }
  map.normalize();
  return map;
}

CouplingMap CouplingMap::heavy_hex_27() {
  CouplingMap map;
  map.num_qubits = 27;
  map.edges = {{0, 1},   {1, 2},   {1, 4},   {2, 3},   {3, 5},   {4, 7},   {5, 8},
               {6, 7},   {7, 10},  {8, 9},   {8, 11},  {10, 12}, {11, 14}, {12, 13},
               {12, 15}, {13, 14}, {14, 16}, {15, 18}, {16, 19}, {17, 18}, {18, 21},
               {19, 20}, {19, 22}, {21, 23}, {22, 25}, {23, 24}, {24, 25}, {25, 26}};
  map.normalize();
  return map;
}

CouplingMap CouplingMap::heavy_hex_127() {
  CouplingMap map;
  map.num_qubits = 127;

  const int row_start[7] = {0, 18, 37, 56, 75, 94, 113};
  const int row_len[7] = {14, 15, 15, 15, 15, 15, 14};
  const int bridge_start[6] = {14, 33, 52, 71, 90, 109};

  for (int r = 0; r < 7; ++r)
    for (int i = 0; i + 1 < row_len[r]; ++i)
      map.edges.push_back({row_start[r] + i, row_start[r] + i + 1});

  // Four bridge qubits between consecutive rows; columns alternate between
  // offsets {0,4,8,12} and {2,6,10,14}. The short outer rows sit shifted by
  // one column, so the last gap lands on {1,5,9,13} below.
  for (int gap = 0; gap < 6; ++gap) {
    const int offset = gap % 2 == 0 ? 0 : 2;
    const int offset_below = gap == 5 ? offset - 1 : offset;
    for (int k = 0; k < 4; ++k) {
      const int bridge = bridge_start[gap] + k;
      map.edges.push_back({row_start[gap] + offset + 4 * k, bridge});
      map.edges.push_back({bridge, row_start[gap + 1] + offset_below + 4 * k});
    }
  }
  map.normalize();
  return map;
}

CouplingMap CouplingMap::fixture(std::string_view name) {
  if (name == "heavy-hex-27") return heavy_hex_27();
  if (name == "heavy-hex-127") return heavy_hex_127();

  auto parse_int = [&](std::string_view s) -> int {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || value <= 0)
      throw ParseError("unknown coupling fixture '" + std::string(name) + "'");
    return value;
  };
  if (name.starts_with("line-")) return line(parse_int(name.substr(5)));
  if (name.starts_with("ring-")) return ring(parse_int(name.substr(5)));
  if (name.starts_with("grid-")) {
    const std::string_view dims = name.substr(5);
    const std::size_t x = dims.find('x');
    if (x == std::string_view::npos)
      throw ParseError("unknown coupling fixture '" + std::string(name) + "'");
    return grid(parse_int(dims.substr(0, x)), parse_int(dims.substr(x + 1)));
  }
  throw ParseError("unknown coupling fixture '" + std::string(name) + "'");
}

bool Layout::overlaps(const Layout& other) const {
  for (int q : mapping)
    for (int p : other.mapping)
      if (p == q) return true;
  return false;
}

bool Layout::embeds(const std::vector<QubitPair>& pattern_edges, const CouplingMap& map) const {
  for (const auto& [a, b] : pattern_edges) {
    if (a >= size() || b >= size()) return false;
    if (!map.has_edge((*this)[a], (*this)[b])) return false;
  }
  return true;
}

}  // namespace qicsel
