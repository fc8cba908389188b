#include "spfg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace spfg {

namespace {

void check_vertex(int v, int n, const char* what) {
  if (v < 0 || v >= n) {
    throw std::invalid_argument(std::string(what) + " id " + std::to_string(v) +
                                " out of range [0, " + std::to_string(n) + ")");
  }
}

}  // namespace

// -------------------- Graph --------------------

Graph::Graph(int num_vertices, std::vector<std::pair<int, int>> edge_list)
    : n_(num_vertices), edges_(std::move(edge_list)) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (auto& [u, v] : edges_) {
    check_vertex(u, n_, "vertex");
    check_vertex(v, n_, "vertex");
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ")");
    }
  }
  adj_.assign(static_cast<size_t>(n_), {});
  for (int id = 0; id < num_edges(); ++id) {
    auto [u, v] = edges_[static_cast<size_t>(id)];
    adj_[static_cast<size_t>(u)].push_back({v, id});
    adj_[static_cast<size_t>(v)].push_back({u, id});
  }
  for (auto& lst : adj_) std::sort(lst.begin(), lst.end());
}

std::pair<int, int> Graph::endpoints(int edge_id) const {
  if (edge_id < 0 || edge_id >= num_edges()) {
    throw std::invalid_argument("edge id " + std::to_string(edge_id) +
                                " out of range");
  }
  return edges_[static_cast<size_t>(edge_id)];
}

const std::vector<std::pair<int, int>>& Graph::adjacency(int v) const {
  check_vertex(v, n_, "vertex");
  return adj_[static_cast<size_t>(v)];
}

int Graph::degree(int v) const {
  return static_cast<int>(adjacency(v).size());
}

std::optional<int> Graph::edge_between(int u, int v) const {
  check_vertex(u, n_, "vertex");
  check_vertex(v, n_, "vertex");
  const auto& lst = adj_[static_cast<size_t>(u)];
  auto it = std::lower_bound(lst.begin(), lst.end(), std::pair<int, int>{v, -1});
  if (it != lst.end() && it->first == v) return it->second;
  return std::nullopt;
}

// -------------------- ForcingGraph --------------------

ForcingGraph::ForcingGraph(int num_vertices, std::vector<std::pair<int, int>> pairs)
    : n_(num_vertices), pairs_(std::move(pairs)) {
  if (n_ < 0) throw std::invalid_argument("negative forcing vertex count");
  for (auto& [i, j] : pairs_) {
    check_vertex(i, n_, "forcing vertex");
    check_vertex(j, n_, "forcing vertex");
    if (i == j) {
      throw std::invalid_argument("forcing pair with identical endpoints " +
                                  std::to_string(i));
    }
    if (i > j) std::swap(i, j);
  }
  std::sort(pairs_.begin(), pairs_.end());
  if (std::adjacent_find(pairs_.begin(), pairs_.end()) != pairs_.end()) {
    throw std::invalid_argument("duplicate forcing pair");
  }
  adj_.assign(static_cast<size_t>(n_), {});
  for (auto [i, j] : pairs_) {
    adj_[static_cast<size_t>(i)].push_back(j);
    adj_[static_cast<size_t>(j)].push_back(i);
  }
  for (auto& lst : adj_) std::sort(lst.begin(), lst.end());
}

const std::vector<int>& ForcingGraph::neighbors(int v) const {
  check_vertex(v, n_, "forcing vertex");
  return adj_[static_cast<size_t>(v)];
}

int ForcingGraph::degree(int v) const {
  return static_cast<int>(neighbors(v).size());
}

bool ForcingGraph::adjacent(int u, int v) const {
  const auto& lst = neighbors(u);
  return std::binary_search(lst.begin(), lst.end(), v);
}

// -------------------- Instance --------------------

void validate_instance(const Instance& inst) {
  const int n = inst.graph.num_vertices();
  const int m = inst.graph.num_edges();
  if (inst.forcing.num_vertices() != m) {
    throw std::invalid_argument(
        "forcing graph has " + std::to_string(inst.forcing.num_vertices()) +
        " vertices but the graph has " + std::to_string(m) + " edges");
  }
  check_vertex(inst.s, n, "terminal");
  check_vertex(inst.t, n, "terminal");
  if (inst.s == inst.t) throw std::invalid_argument("terminals must differ");
  if (inst.k < 0) throw std::invalid_argument("negative budget k");
  if (inst.modulator.has_value() != inst.ell.has_value()) {
    throw std::invalid_argument("modulator and budget must be given together");
  }
  if (inst.modulator) {
    const auto& X = *inst.modulator;
    for (int id : X) check_vertex(id, m, "modulator edge");
    if (!std::is_sorted(X.begin(), X.end()) ||
        std::adjacent_find(X.begin(), X.end()) != X.end()) {
      throw std::invalid_argument("modulator ids must be sorted and unique");
    }
    if (*inst.ell < 0) throw std::invalid_argument("negative budget ell");
  }
}

// -------------------- EdgeSubgraphView --------------------

EdgeSubgraphView::EdgeSubgraphView(const Graph& base,
                                   const std::vector<int>& kept_edges)
    : base_(&base), kept_(static_cast<size_t>(base.num_edges()), 0) {
  for (int id : kept_edges) {
    if (id < 0 || id >= base.num_edges()) {
      throw std::invalid_argument("kept edge id " + std::to_string(id) +
                                  " out of range");
    }
    kept_[static_cast<size_t>(id)] = 1;
  }
}

std::vector<int> EdgeSubgraphView::kept_edges() const {
  std::vector<int> out;
  for (int id = 0; id < base_->num_edges(); ++id) {
    if (kept_[static_cast<size_t>(id)]) out.push_back(id);
  }
  return out;
}

std::vector<std::vector<int>> connected_components(const EdgeSubgraphView& view) {
  const Graph& g = view.base();
  const int n = g.num_vertices();
  std::vector<char> visited(static_cast<size_t>(n), 0);
  std::vector<std::vector<int>> components;
  std::vector<int> queue;
  for (int start = 0; start < n; ++start) {
    if (visited[static_cast<size_t>(start)]) continue;
    visited[static_cast<size_t>(start)] = 1;
    queue.assign(1, start);
    std::vector<int> comp;
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      comp.push_back(u);
      for (auto [w, id] : g.adjacency(u)) {
        if (!view.keeps(id) || visited[static_cast<size_t>(w)]) continue;
        visited[static_cast<size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

// -------------------- identify --------------------

IdentifyResult identify(const Graph& g, const std::vector<std::vector<int>>& parts) {
  const int n = g.num_vertices();
  std::vector<int> part_of(static_cast<size_t>(n), -1);
  for (size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].empty()) throw std::invalid_argument("empty part");
    for (int v : parts[p]) {
      check_vertex(v, n, "part vertex");
      if (part_of[static_cast<size_t>(v)] != -1) {
        throw std::invalid_argument("parts overlap at vertex " + std::to_string(v));
      }
      part_of[static_cast<size_t>(v)] = static_cast<int>(p);
    }
  }

  IdentifyResult result;
  result.vertex_map.assign(static_cast<size_t>(n), -1);
  int kept = 0;
  for (int v = 0; v < n; ++v) {
    if (part_of[static_cast<size_t>(v)] == -1) {
      result.vertex_map[static_cast<size_t>(v)] = kept++;
    }
  }
  for (int v = 0; v < n; ++v) {
    int p = part_of[static_cast<size_t>(v)];
    if (p != -1) result.vertex_map[static_cast<size_t>(v)] = kept + p;
  }
  const int new_n = kept + static_cast<int>(parts.size());

  // Walk original edges in id order; the first edge realizing a new
  // (unordered) endpoint pair defines the super-edge and its origin.
  std::vector<std::pair<int, int>> new_edges;
  std::set<std::pair<int, int>> seen;
  for (int id = 0; id < g.num_edges(); ++id) {
    auto [u, v] = g.endpoints(id);
    int a = result.vertex_map[static_cast<size_t>(u)];
    int b = result.vertex_map[static_cast<size_t>(v)];
    if (a == b) continue;  // internal to a part
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) continue;  // parallel edge collapses
    new_edges.push_back({a, b});
    result.edge_origin.push_back(id);
  }
  result.graph = Graph(new_n, std::move(new_edges));
  return result;
}

// -------------------- shortest paths --------------------

std::optional<std::vector<int>> shortest_path_restricted(
    const Graph& g, int x, int y, const std::vector<int>& allowed_internal,
    int max_len) {
  const int n = g.num_vertices();
  check_vertex(x, n, "vertex");
  check_vertex(y, n, "vertex");
  if (x == y) throw std::invalid_argument("path endpoints must differ");
  if (max_len <= 0) return std::nullopt;

  std::vector<char> allowed(static_cast<size_t>(n), 0);
  for (int v : allowed_internal) {
    check_vertex(v, n, "allowed vertex");
    allowed[static_cast<size_t>(v)] = 1;
  }

  std::vector<int> dist(static_cast<size_t>(n), -1);
  std::vector<int> parent_edge(static_cast<size_t>(n), -1);
  std::vector<int> parent(static_cast<size_t>(n), -1);
  std::queue<int> queue;
  dist[static_cast<size_t>(x)] = 0;
  queue.push(x);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    if (u == y) break;
    if (dist[static_cast<size_t>(u)] >= max_len) continue;
    // Only x and allowed internals may be expanded; y is never expanded.
    if (u != x && !allowed[static_cast<size_t>(u)]) continue;
    for (auto [w, id] : g.adjacency(u)) {  // ascending neighbor order
      if (dist[static_cast<size_t>(w)] != -1) continue;
      if (w != y && !allowed[static_cast<size_t>(w)]) continue;
      dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
      parent[static_cast<size_t>(w)] = u;
      parent_edge[static_cast<size_t>(w)] = id;
      queue.push(w);
    }
  }
  if (dist[static_cast<size_t>(y)] == -1 || dist[static_cast<size_t>(y)] > max_len) {
    return std::nullopt;
  }
  std::vector<int> path;
  for (int v = y; v != x; v = parent[static_cast<size_t>(v)]) {
    path.push_back(parent_edge[static_cast<size_t>(v)]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<std::vector<int>> shortest_path(const Graph& g, int x, int y,
                                              int max_len) {
  std::vector<int> all(static_cast<size_t>(g.num_vertices()));
  std::iota(all.begin(), all.end(), 0);
  return shortest_path_restricted(g, x, y, all, max_len);
}

// -------------------- misc --------------------

bool planar_edge_bound_check(const Graph& g) {
  const long long n = g.num_vertices();
  if (n < 3) return true;
  return g.num_edges() <= 3 * n - 6;
}

bool edges_connect(const Graph& g, const std::vector<int>& edge_ids, int u, int v) {
  const int n = g.num_vertices();
  check_vertex(u, n, "vertex");
  check_vertex(v, n, "vertex");
  std::vector<int> root(static_cast<size_t>(n));
  std::iota(root.begin(), root.end(), 0);
  auto find = [&root](int a) {
    while (root[static_cast<size_t>(a)] != a) {
      root[static_cast<size_t>(a)] = root[static_cast<size_t>(root[static_cast<size_t>(a)])];
      a = root[static_cast<size_t>(a)];
    }
    return a;
  };
  for (int id : edge_ids) {
    auto [a, b] = g.endpoints(id);
    root[static_cast<size_t>(find(a))] = find(b);
  }
  return find(u) == find(v);
}

}  // namespace spfg
