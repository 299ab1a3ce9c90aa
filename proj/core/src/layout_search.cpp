//
// This file is part of the qicsel library released under the Apache-2.0 license.
// See README.md for more information.
//

#include "qicsel/layout_search.hpp"

#include <algorithm>
#include <numeric>

namespace qicsel {

int PatternGraph::degree(int v) const {
  int d = 0;
  for (const auto& [a, b] : edges) d += (a == v) + (b == v);
  return d;
}

std::vector<std::vector<int>> PatternGraph::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(num_vertices));
  for (const auto& [a, b] : edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  return adj;
}

PatternGraph interaction_graph(const Qic& qic) {
  PatternGraph g;
  g.num_vertices = static_cast<int>(qic.qubits.size());
  // Pair keys refer to active-qubit labels; compress to [0, k) positions.
  auto position_of = [&](int q) {
    auto it = std::lower_bound(qic.qubits.begin(), qic.qubits.end(), q);
    return static_cast<int>(it - qic.qubits.begin());
  };
  for (const auto& [pair, count] : qic.pair_counts.entries)
    g.edges.push_back(sorted_pair(position_of(pair.first), position_of(pair.second)));
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

namespace {

struct SearchState {
  const PatternGraph& pattern;
  const CouplingMap& map;
  std::vector<std::vector<int>> pattern_adj;
  std::vector<int> order;        // pattern vertices in match order
  std::vector<int> image;        // pattern vertex -> physical qubit (-1 unset)
  std::vector<char> used;        // physical qubit taken
  std::vector<Layout>& out;

  void search(std::size_t depth) {
    if (depth == order.size()) {
      out.push_back(Layout{image});
      return;
    }
    const int v = order[depth];
    const int v_deg = static_cast<int>(pattern_adj[static_cast<std::size_t>(v)].size());

    // Candidates: neighbours of an already-mapped pattern neighbour, or every
    // free physical qubit when v starts a new component.
    int anchor = -1;
    for (int u : pattern_adj[static_cast<std::size_t>(v)])
      if (image[static_cast<std::size_t>(u)] >= 0) {
        anchor = image[static_cast<std::size_t>(u)];
        break;
      }

    auto try_candidate = [&](int phys) {
      if (used[static_cast<std::size_t>(phys)]) return;
      if (map.degree(phys) < v_deg) return;
      for (int u : pattern_adj[static_cast<std::size_t>(v)]) {
        const int mapped = image[static_cast<std::size_t>(u)];
        if (mapped >= 0 && !map.has_edge(phys, mapped)) return;
      }
      image[static_cast<std::size_t>(v)] = phys;
      used[static_cast<std::size_t>(phys)] = 1;
      search(depth + 1);
      used[static_cast<std::size_t>(phys)] = 0;
      image[static_cast<std::size_t>(v)] = -1;
    };

    if (anchor >= 0) {
      for (int phys : map.neighbors(anchor)) try_candidate(phys);
    } else {
      for (int phys = 0; phys < map.num_qubits; ++phys) try_candidate(phys);
    }
  }
};

// Match order: highest-degree vertex first, then vertices adjacent to the
// already-ordered set (so candidate sets stay anchored), components one after
// another.
std::vector<int> match_order(const PatternGraph& pattern) {
  const auto adj = pattern.adjacency();
  const int n = pattern.num_vertices;
  std::vector<int> order;
  std::vector<char> placed(static_cast<std::size_t>(n), 0);

  auto degree = [&](int v) { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); };

  while (static_cast<int>(order.size()) < n) {
    int best = -1;
    bool best_connected = false;
    for (int v = 0; v < n; ++v) {
      if (placed[static_cast<std::size_t>(v)]) continue;
      bool connected = false;
      for (int u : adj[static_cast<std::size_t>(v)])
        if (placed[static_cast<std::size_t>(u)]) {
          connected = true;
          break;
        }
      if (best < 0 || (connected && !best_connected) ||
          (connected == best_connected && degree(v) > degree(best))) {
        best = v;
        best_connected = connected;
      }
    }
    order.push_back(best);
    placed[static_cast<std::size_t>(best)] = 1;
  }
  return order;
}

}  // namespace

std::vector<Layout> find_isomorphic_layouts(const PatternGraph& pattern, const CouplingMap& map) {
  std::vector<Layout> result;
  if (pattern.num_vertices > map.num_qubits) return result;
  if (pattern.num_vertices == 0) {
    result.push_back(Layout{});
    return result;
  }

  SearchState state{pattern,
                    map,
                    pattern.adjacency(),
                    match_order(pattern),
                    std::vector<int>(static_cast<std::size_t>(pattern.num_vertices), -1),
                    std::vector<char>(static_cast<std::size_t>(map.num_qubits), 0),
                    result};
  state.search(0);
  std::sort(result.begin(), result.end());
  return result;
}

bool is_layout_disjoint_with_set(const std::vector<Layout>& set, const Layout& candidate) {
  for (const Layout& member : set)
    if (member.overlaps(candidate)) return false;
  return true;
}

}  // namespace qicsel
