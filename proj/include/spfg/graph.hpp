#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace spfg {

// ==================== Graph ====================
//
// Simple undirected graph with 0-based vertex ids and positional edge ids.
// Edge ids are stable: edge i is edges()[i] forever; views and algorithms
// never renumber them. Endpoint pairs are normalized to (min,max) at
// construction. Self-loops and duplicate edges are rejected.
class Graph {
public:
  Graph() = default;
  Graph(int num_vertices, std::vector<std::pair<int, int>> edge_list);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::pair<int, int> endpoints(int edge_id) const;

  // (neighbor, edge id), sorted by ascending neighbor id.
  const std::vector<std::pair<int, int>>& adjacency(int v) const;
  int degree(int v) const;

  // Edge id joining u and v, if present.
  std::optional<int> edge_between(int u, int v) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

// ==================== ForcingGraph ====================
//
// Companion constraint graph whose vertices are the edge ids of a Graph.
// A pair (i,j) means: any admissible edge set must contain edge i or edge j.
// Pairs are normalized to (min,max), sorted, and must be unique and loop-free.
class ForcingGraph {
public:
  ForcingGraph() = default;
  ForcingGraph(int num_vertices, std::vector<std::pair<int, int>> pairs);

  int num_vertices() const { return n_; }
  int num_pairs() const { return static_cast<int>(pairs_.size()); }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  // Neighbor ids, ascending.
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;
  bool adjacent(int u, int v) const;

  bool operator==(const ForcingGraph& other) const {
    return n_ == other.n_ && pairs_ == other.pairs_;
  }

private:
  int n_ = 0;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::vector<int>> adj_;
};

// ==================== Instance ====================
//
// One problem instance: base graph, forcing graph over its edge ids,
// terminals s != t, and edge budget k. A modulator (edge-id set X whose
// removal from the forcing graph is meant to leave it 2K2-free) plus its
// own budget ell may be attached for the modulator-parameterized solver.
struct Instance {
  Graph graph;
  ForcingGraph forcing;
  int s = 0;
  int t = 1;
  int k = 0;
  std::optional<std::vector<int>> modulator;  // sorted edge ids
  std::optional<int> ell;

  bool operator==(const Instance& other) const = default;
};

// Throws std::invalid_argument when structural invariants fail:
// forcing.num_vertices() == graph.num_edges(), valid distinct terminals,
// k >= 0, modulator ids valid and sorted unique, ell >= 0 and present
// exactly when the modulator is.
void validate_instance(const Instance& inst);

// ==================== EdgeSubgraphView ====================
//
// G(V, E') for E' a subset of edge ids: the full vertex set with only the
// kept edges. Used for connectivity questions about candidate solutions.
class EdgeSubgraphView {
public:
  EdgeSubgraphView(const Graph& base, const std::vector<int>& kept_edges);

  const Graph& base() const { return *base_; }
  bool keeps(int edge_id) const { return kept_[static_cast<size_t>(edge_id)] != 0; }
  std::vector<int> kept_edges() const;

private:
  const Graph* base_;
  std::vector<char> kept_;
};

// Vertex sets of the connected components of the view, each sorted
// ascending, ordered by smallest member. Isolated vertices form
// singleton components.
std::vector<std::vector<int>> connected_components(const EdgeSubgraphView& view);

// ==================== identify ====================
//
// Contract each part (a set of vertices) to a single super-vertex.
// Vertices outside all parts keep their relative order and are numbered
// first; part i becomes vertex (#kept + i). Loops vanish; parallel edges
// collapse, and each surviving edge records the smallest original edge id
// that realizes it so paths can be lifted back.
struct IdentifyResult {
  Graph graph;
  std::vector<int> vertex_map;   // original vertex id -> new vertex id
  std::vector<int> edge_origin;  // new edge id -> original edge id
};

IdentifyResult identify(const Graph& g, const std::vector<std::vector<int>>& parts);

// ==================== shortest paths ====================
//
// Shortest x-y path whose *internal* vertices all lie in allowed_internal
// (x and y themselves are exempt), with at most max_len edges. Returns the
// edge ids along the path, or nullopt. Deterministic: BFS expands
// neighbors in ascending vertex id and parent pointers are fixed at first
// discovery. Requires x != y.
std::optional<std::vector<int>> shortest_path_restricted(
    const Graph& g, int x, int y, const std::vector<int>& allowed_internal,
    int max_len);

// Unrestricted variant: every vertex may appear as an internal.
std::optional<std::vector<int>> shortest_path(const Graph& g, int x, int y,
                                              int max_len);

// ==================== misc ====================

// Euler necessary condition for planarity: m <= 3n - 6 (true when n < 3).
// A cheap gate, not a planarity test.
bool planar_edge_bound_check(const Graph& g);

// Checker-side connectivity primitive (union-find, independent of the
// BFS/view machinery above): do the given edges connect u and v?
bool edges_connect(const Graph& g, const std::vector<int>& edge_ids, int u, int v);

}  // namespace spfg
