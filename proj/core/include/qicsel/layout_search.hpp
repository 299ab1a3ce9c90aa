//
// This file is part of the qicsel library released under the Apache-2.0 license.
// See README.md for more information.
//

#pragma once

#include <vector>

#include "qicsel/coupling.hpp"
#include "qicsel/qic.hpp"

namespace qicsel {

/// Undirected interaction pattern of a QIC: one edge per distinct pair key.
struct PatternGraph {
  int num_vertices = 0;
  std::vector<QubitPair> edges;  // sorted, unique

  int degree(int v) const;
  std::vector<std::vector<int>> adjacency() const;
};

PatternGraph interaction_graph(const Qic& qic);

/// All injective vertex mappings embedding the pattern's edges into the
/// coupling map (subgraph monomorphism, VF2-style backtracking with degree
/// pruning). Distinct ordered mappings are distinct layouts; the result is
/// sorted lexicographically.
std::vector<Layout> find_isomorphic_layouts(const PatternGraph& pattern, const CouplingMap& map);

/// True iff the candidate shares no physical qubit with any layout in the set.
bool is_layout_disjoint_with_set(const std::vector<Layout>& set, const Layout& candidate);

}  // namespace qicsel
