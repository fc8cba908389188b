#include "spfg/extension.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace spfg {

namespace {

std::vector<int> sorted_unique(std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

}  // namespace

ExtensionResult extend(const Graph& g, const std::vector<int>& prescribed,
                       int s, int t) {
  if (s == t) throw std::invalid_argument("terminals must differ");
  std::vector<int> base = sorted_unique(prescribed);
  EdgeSubgraphView view(g, base);

  const auto components = connected_components(view);
  std::vector<int> comp_of(static_cast<size_t>(g.num_vertices()), -1);
  for (size_t c = 0; c < components.size(); ++c) {
    for (int v : components[c]) comp_of[static_cast<size_t>(v)] = static_cast<int>(c);
  }
  if (comp_of[static_cast<size_t>(s)] == comp_of[static_cast<size_t>(t)]) {
    return {std::move(base), true};  // already connected
  }

  // Contract every prescribed component (singletons are no-ops) and walk a
  // shortest path between the terminals' super-vertices.
  std::vector<std::vector<int>> parts;
  for (const auto& comp : components) {
    if (comp.size() >= 2) parts.push_back(comp);
  }
  IdentifyResult contracted = identify(g, parts);
  const int cs = contracted.vertex_map[static_cast<size_t>(s)];
  const int ct = contracted.vertex_map[static_cast<size_t>(t)];
  auto path = shortest_path(contracted.graph, cs, ct,
                            contracted.graph.num_vertices());
  if (!path) {
    return {std::move(base), false};  // s and t lie in different components of g
  }
  std::vector<int> result = std::move(base);
  for (int super_edge : *path) {
    result.push_back(contracted.edge_origin[static_cast<size_t>(super_edge)]);
  }
  return {sorted_unique(std::move(result)), true};
}

ExtensionResult oracle_extend(const Graph& g, const std::vector<int>& prescribed,
                              int s, int t, int cap) {
  if (g.num_edges() > 20) {
    throw std::invalid_argument("oracle limited to 20 edges");
  }
  if (s == t) throw std::invalid_argument("terminals must differ");
  std::vector<int> base = sorted_unique(prescribed);
  if (static_cast<int>(base.size()) > cap) return {std::move(base), false};

  std::vector<char> in_base(static_cast<size_t>(g.num_edges()), 0);
  for (int id : base) in_base[static_cast<size_t>(id)] = 1;
  std::vector<int> rest;
  for (int id = 0; id < g.num_edges(); ++id) {
    if (!in_base[static_cast<size_t>(id)]) rest.push_back(id);
  }

  const int max_extra =
      std::min(static_cast<int>(rest.size()), cap - static_cast<int>(base.size()));
  for (int extra = 0; extra <= max_extra; ++extra) {
    // Lexicographic combinations of `extra` ids out of rest.
    std::vector<int> pick(static_cast<size_t>(extra));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::vector<int> candidate = base;
      for (int idx : pick) candidate.push_back(rest[static_cast<size_t>(idx)]);
      std::sort(candidate.begin(), candidate.end());
      if (edges_connect(g, candidate, s, t)) return {std::move(candidate), true};

      // next combination
      int i = extra - 1;
      while (i >= 0 &&
             pick[static_cast<size_t>(i)] == static_cast<int>(rest.size()) - extra + i) {
        --i;
      }
      if (i < 0) break;
      ++pick[static_cast<size_t>(i)];
      for (int j = i + 1; j < extra; ++j) {
        pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
      }
    }
  }
  return {std::move(base), false};
}

}  // namespace spfg
