#pragma once

#include <cstddef>
#include <vector>

#include "spfg/graph.hpp"

namespace spfg {

// Result of extending a prescribed edge set until the terminals are
// connected. `edges` is sorted ascending; on infeasible results it echoes
// the prescribed set.
struct ExtensionResult {
  std::vector<int> edges;
  bool feasible = false;

  std::size_t size() const { return edges.size(); }
};

// Minimum-cardinality superset of `prescribed` whose edge subgraph
// connects s and t. Contracts every connected component of the prescribed
// subgraph to a super-vertex, finds a shortest path there, and lifts it
// back through the recorded original edge ids. Feasible iff s and t are
// connected in the base graph; adds exactly dist(s,t)-in-the-contraction
// edges, which is optimal. Deterministic.
ExtensionResult extend(const Graph& g, const std::vector<int>& prescribed,
                       int s, int t);

// Reference oracle: scans all supersets of `prescribed` with at most `cap`
// edges in increasing size (lexicographic within a size) and returns the
// first that connects s and t. Guarded to graphs with <= 20 edges.
ExtensionResult oracle_extend(const Graph& g, const std::vector<int>& prescribed,
                              int s, int t, int cap);

}  // namespace spfg
