#include "spfg/kernelize.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "spfg/errors.hpp"
#include "spfg/solvers.hpp"

namespace spfg {

namespace {

long long sat_add(long long a, long long b) {
  long long r;
  return __builtin_add_overflow(a, b, &r) ? LLONG_MAX : r;
}

long long sat_mul(long long a, long long b) {
  long long r;
  return __builtin_mul_overflow(a, b, &r) ? LLONG_MAX : r;
}

long long choose2(long long x) {
  if (x <= 1) return 0;
  return (x % 2 == 0) ? sat_mul(x / 2, x - 1) : sat_mul(x, (x - 1) / 2);
}

std::vector<int> sorted_union(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

long long count_r_pairs(const ForcingGraph& forcing, const std::vector<int>& R) {
  std::vector<char> in_r(static_cast<size_t>(forcing.num_vertices()), 0);
  for (int v : R) in_r[static_cast<size_t>(v)] = 1;
  long long count = 0;
  for (auto [i, j] : forcing.pairs()) {
    if (in_r[static_cast<size_t>(i)] && in_r[static_cast<size_t>(j)]) ++count;
  }
  return count;
}

// Endpoints of the given edge ids plus both terminals, sorted.
std::vector<int> boundary_vertices(const Instance& inst,
                                   const std::vector<int>& edge_ids) {
  std::vector<char> mark(static_cast<size_t>(inst.graph.num_vertices()), 0);
  mark[static_cast<size_t>(inst.s)] = 1;
  mark[static_cast<size_t>(inst.t)] = 1;
  for (int id : edge_ids) {
    auto [u, v] = inst.graph.endpoints(id);
    mark[static_cast<size_t>(u)] = 1;
    mark[static_cast<size_t>(v)] = 1;
  }
  std::vector<int> out;
  for (int v = 0; v < inst.graph.num_vertices(); ++v) {
    if (mark[static_cast<size_t>(v)]) out.push_back(v);
  }
  return out;
}

// Marking core. For each boundary pair x < y (ascending), record a
// shortest path with internals outside the boundary and a shortest path
// in G, both capped at k edges. With live_only, a pair is skipped
// entirely unless *some* path with internals outside the boundary exists,
// and pairs_marked counts only the live pairs.
MarkResult mark_pairs(const Instance& inst, std::vector<int> boundary,
                      bool live_only) {
  const Graph& g = inst.graph;
  std::vector<char> in_boundary(static_cast<size_t>(g.num_vertices()), 0);
  for (int v : boundary) in_boundary[static_cast<size_t>(v)] = 1;
  std::vector<int> interior;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!in_boundary[static_cast<size_t>(v)]) interior.push_back(v);
  }

  MarkResult result;
  result.boundary = std::move(boundary);
  std::vector<char> marked(static_cast<size_t>(g.num_edges()), 0);
  auto mark_path = [&](const std::vector<int>& path) {
    for (int id : path) marked[static_cast<size_t>(id)] = 1;
    ++result.paths_marked;
  };

  for (size_t i = 0; i < result.boundary.size(); ++i) {
    for (size_t j = i + 1; j < result.boundary.size(); ++j) {
      const int x = result.boundary[i];
      const int y = result.boundary[j];
      if (live_only) {
        auto probe = shortest_path_restricted(g, x, y, interior, g.num_vertices());
        if (!probe) continue;
        ++result.pairs_marked;
        if (static_cast<int>(probe->size()) <= inst.k) mark_path(*probe);
      } else {
        ++result.pairs_marked;
        auto p = shortest_path_restricted(g, x, y, interior, inst.k);
        if (p) mark_path(*p);
      }
      auto q = shortest_path(g, x, y, inst.k);
      if (q) mark_path(*q);
    }
  }
  for (int id = 0; id < g.num_edges(); ++id) {
    if (marked[static_cast<size_t>(id)]) result.edges.push_back(id);
  }
  return result;
}

struct ReducedBuild {
  Instance reduced;
  std::vector<int> edge_map;
  std::vector<int> vertex_map;
};

// Restrict the instance to the kept edges: vertices are the kept
// endpoints plus the terminals, ids compacted in ascending original
// order; forcing pairs survive iff both endpoints are kept.
ReducedBuild build_reduced(const Instance& inst, const std::vector<int>& kept) {
  const Graph& g = inst.graph;
  std::vector<char> keep_vertex(static_cast<size_t>(g.num_vertices()), 0);
  keep_vertex[static_cast<size_t>(inst.s)] = 1;
  keep_vertex[static_cast<size_t>(inst.t)] = 1;
  for (int id : kept) {
    auto [u, v] = g.endpoints(id);
    keep_vertex[static_cast<size_t>(u)] = 1;
    keep_vertex[static_cast<size_t>(v)] = 1;
  }

  ReducedBuild build;
  std::vector<int> new_vertex(static_cast<size_t>(g.num_vertices()), -1);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (keep_vertex[static_cast<size_t>(v)]) {
      new_vertex[static_cast<size_t>(v)] = static_cast<int>(build.vertex_map.size());
      build.vertex_map.push_back(v);
    }
  }

  std::vector<int> new_edge(static_cast<size_t>(g.num_edges()), -1);
  std::vector<std::pair<int, int>> edges;
  for (int id : kept) {  // kept is sorted, so reduced ids follow original order
    auto [u, v] = g.endpoints(id);
    new_edge[static_cast<size_t>(id)] = static_cast<int>(edges.size());
    edges.push_back({new_vertex[static_cast<size_t>(u)],
                     new_vertex[static_cast<size_t>(v)]});
    build.edge_map.push_back(id);
  }

  std::vector<std::pair<int, int>> pairs;
  for (auto [i, j] : inst.forcing.pairs()) {
    if (new_edge[static_cast<size_t>(i)] != -1 &&
        new_edge[static_cast<size_t>(j)] != -1) {
      pairs.push_back({new_edge[static_cast<size_t>(i)],
                       new_edge[static_cast<size_t>(j)]});
    }
  }

  build.reduced.graph = Graph(static_cast<int>(build.vertex_map.size()),
                              std::move(edges));
  build.reduced.forcing =
      ForcingGraph(static_cast<int>(build.edge_map.size()), std::move(pairs));
  build.reduced.s = new_vertex[static_cast<size_t>(inst.s)];
  build.reduced.t = new_vertex[static_cast<size_t>(inst.t)];
  build.reduced.k = inst.k;
  return build;
}

long long general_bound(long long k) {
  const long long hr = sat_add(k, sat_mul(2, sat_mul(k, k)));  // |H u R|
  const long long patch = sat_mul(k, k + 1);
  const long long paths =
      sat_mul(sat_mul(2, k), choose2(sat_add(sat_mul(2, hr), 2)));
  return sat_add(hr, sat_add(patch, paths));
}

long long planar_bound(long long k, long long vl) {
  const long long hr = sat_add(k, sat_mul(2, sat_mul(k, k)));
  const long long patch = sat_mul(k, k + 1);
  const long long live = std::max<long long>(0, sat_add(sat_mul(3, vl), -6));
  const long long paths = sat_mul(sat_mul(2, k), live);
  return sat_add(hr, sat_add(patch, paths));
}

long long special_bound(long long k, long long vlf) {
  return sat_add(vlf, sat_mul(sat_mul(2, k), choose2(sat_add(sat_mul(2, vlf), 2))));
}

// Canonical NO kernel: two isolated terminals under the original budget.
// Used whenever a size bound proves the instance has no solution.
KernelResult reject_result(const Instance& inst, KernelMode mode,
                           Partition partition, long long r_pairs,
                           long long bound, long long vlf_size) {
  KernelResult result;
  result.reduced.graph = Graph(2, {});
  result.reduced.forcing = ForcingGraph(0, {});
  result.reduced.s = 0;
  result.reduced.t = 1;
  result.reduced.k = inst.k;
  result.audit.mode = mode;
  result.audit.rejected = true;
  result.audit.h_size = static_cast<long long>(partition.H.size());
  result.audit.r_size = static_cast<long long>(partition.R.size());
  result.audit.r_forcing_pairs = r_pairs;
  result.audit.vlf_size = vlf_size;
  result.audit.bound_formula = bound;
  result.audit.within_bound = true;  // nothing kept
  result.partition = std::move(partition);
  return result;
}

}  // namespace

std::string kernel_mode_name(KernelMode mode) {
  switch (mode) {
    case KernelMode::General: return "general";
    case KernelMode::Planar: return "planar";
    case KernelMode::Cluster: return "cluster";
    case KernelMode::BoundedDegree: return "bounded-degree";
  }
  return "?";
}

Partition compute_partition(const Instance& inst) {
  const ForcingGraph& f = inst.forcing;
  Partition part;
  std::vector<char> in_h(static_cast<size_t>(f.num_vertices()), 0);
  for (int v = 0; v < f.num_vertices(); ++v) {
    if (f.degree(v) >= inst.k + 1) {
      in_h[static_cast<size_t>(v)] = 1;
      part.H.push_back(v);
    }
  }
  for (int v = 0; v < f.num_vertices(); ++v) {
    if (in_h[static_cast<size_t>(v)]) continue;
    bool all_high = true;
    for (int w : f.neighbors(v)) {
      if (!in_h[static_cast<size_t>(w)]) {
        all_high = false;
        break;
      }
    }
    // Isolated vertices land here vacuously.
    if (all_high) {
      part.L.push_back(v);
    } else {
      part.R.push_back(v);
    }
  }
  return part;
}

PartitionResult partition_hlr(const Instance& inst) {
  PartitionResult result;
  result.partition = compute_partition(inst);
  result.r_pair_count = count_r_pairs(inst.forcing, result.partition.R);
  const long long k = inst.k;
  result.reject = static_cast<long long>(result.partition.H.size()) > k ||
                  result.r_pair_count > k * k;
  return result;
}

MarkResult mark_general(const Instance& inst, const Partition& partition) {
  return mark_pairs(inst, boundary_vertices(inst, sorted_union(partition.H, partition.R)),
                    /*live_only=*/false);
}

MarkResult mark_planar(const Instance& inst, const Partition& partition) {
  return mark_pairs(inst, boundary_vertices(inst, sorted_union(partition.H, partition.R)),
                    /*live_only=*/true);
}

PatchResult patch_h_degrees(const Instance& inst, const Partition& partition,
                            const std::vector<int>& kept) {
  PatchResult result;
  result.edges = kept;
  std::vector<char> in(static_cast<size_t>(inst.graph.num_edges()), 0);
  for (int id : kept) in[static_cast<size_t>(id)] = 1;
  for (int h : partition.H) {
    const auto& nbrs = inst.forcing.neighbors(h);  // ascending
    const int want = std::min(static_cast<int>(nbrs.size()), inst.k + 1);
    int present = 0;
    for (int w : nbrs) {
      if (in[static_cast<size_t>(w)]) ++present;
    }
    if (present >= inst.k + 1) continue;
    for (int i = 0; i < want; ++i) {
      const int w = nbrs[static_cast<size_t>(i)];
      if (!in[static_cast<size_t>(w)]) {
        in[static_cast<size_t>(w)] = 1;
        result.edges.push_back(w);
        ++result.added;
      }
    }
  }
  std::sort(result.edges.begin(), result.edges.end());
  return result;
}

KernelResult kernelize_general(const Instance& inst) {
  PartitionResult pr = partition_hlr(inst);
  if (pr.reject) {
    return reject_result(inst, KernelMode::General, std::move(pr.partition),
                         pr.r_pair_count, general_bound(inst.k), 0);
  }
  MarkResult mark = mark_general(inst, pr.partition);
  std::vector<int> kept =
      sorted_union(sorted_union(mark.edges, pr.partition.H), pr.partition.R);
  PatchResult patch = patch_h_degrees(inst, pr.partition, kept);

  ReducedBuild build = build_reduced(inst, patch.edges);
  KernelResult result;
  result.reduced = std::move(build.reduced);
  result.edge_map = std::move(build.edge_map);
  result.vertex_map = std::move(build.vertex_map);
  result.kept_edges = std::move(patch.edges);
  result.marked_edges = std::move(mark.edges);
  result.audit.mode = KernelMode::General;
  result.audit.h_size = static_cast<long long>(pr.partition.H.size());
  result.audit.r_size = static_cast<long long>(pr.partition.R.size());
  result.audit.r_forcing_pairs = pr.r_pair_count;
  result.audit.vl_size = static_cast<long long>(mark.boundary.size());
  result.audit.pairs_marked = mark.pairs_marked;
  result.audit.paths_marked = mark.paths_marked;
  result.audit.patch_added = patch.added;
  result.audit.em_size = static_cast<long long>(result.kept_edges.size());
  result.audit.bound_formula = general_bound(inst.k);
  result.audit.within_bound = result.audit.em_size <= result.audit.bound_formula;
  result.partition = std::move(pr.partition);
  return result;
}

KernelResult kernelize_planar(const Instance& inst) {
  if (!planar_edge_bound_check(inst.graph)) {
    throw PreconditionError(
        "edge count exceeds the planar limit (m > 3n-6); use the general mode");
  }
  PartitionResult pr = partition_hlr(inst);
  if (pr.reject) {
    return reject_result(inst, KernelMode::Planar, std::move(pr.partition),
                         pr.r_pair_count, planar_bound(inst.k, 0), 0);
  }
  MarkResult mark = mark_planar(inst, pr.partition);
  std::vector<int> kept =
      sorted_union(sorted_union(mark.edges, pr.partition.H), pr.partition.R);
  PatchResult patch = patch_h_degrees(inst, pr.partition, kept);

  ReducedBuild build = build_reduced(inst, patch.edges);
  KernelResult result;
  result.reduced = std::move(build.reduced);
  result.edge_map = std::move(build.edge_map);
  result.vertex_map = std::move(build.vertex_map);
  result.kept_edges = std::move(patch.edges);
  result.marked_edges = std::move(mark.edges);
  result.audit.mode = KernelMode::Planar;
  result.audit.h_size = static_cast<long long>(pr.partition.H.size());
  result.audit.r_size = static_cast<long long>(pr.partition.R.size());
  result.audit.r_forcing_pairs = pr.r_pair_count;
  result.audit.vl_size = static_cast<long long>(mark.boundary.size());
  result.audit.pairs_marked = mark.pairs_marked;
  result.audit.paths_marked = mark.paths_marked;
  result.audit.patch_added = patch.added;
  result.audit.em_size = static_cast<long long>(result.kept_edges.size());
  result.audit.bound_formula = planar_bound(inst.k, result.audit.vl_size);
  const long long k = inst.k;
  const long long vl_cap = sat_add(sat_mul(2, sat_add(k, sat_mul(2, k * k))), 2);
  result.audit.within_bound =
      result.audit.em_size <= result.audit.bound_formula &&
      result.audit.vl_size <= vl_cap;
  result.partition = std::move(pr.partition);
  return result;
}

SpecialClassification classify_special(const ForcingGraph& forcing) {
  SpecialClassification cls;
  cls.cluster = true;
  for (int v = 0; v < forcing.num_vertices(); ++v) {
    const int deg = forcing.degree(v);
    cls.max_degree = std::max(cls.max_degree, deg);
    if (deg > 0) ++cls.non_isolated;
    // Cluster graphs have no induced path on three vertices: any two
    // neighbors of v must themselves be adjacent.
    const auto& nbrs = forcing.neighbors(v);
    for (size_t i = 0; i < nbrs.size() && cls.cluster; ++i) {
      for (size_t j = i + 1; j < nbrs.size(); ++j) {
        if (!forcing.adjacent(nbrs[i], nbrs[j])) {
          cls.cluster = false;
          break;
        }
      }
    }
  }
  return cls;
}

KernelResult kernelize_special(const Instance& inst, const KernelConfig& config) {
  const ForcingGraph& f = inst.forcing;
  SpecialClassification cls = classify_special(f);
  long long limit = 0;
  if (config.mode == KernelMode::Cluster) {
    if (!cls.cluster) {
      throw PreconditionError("cluster mode requires every forcing component to be a clique");
    }
    limit = sat_mul(2, inst.k);
  } else if (config.mode == KernelMode::BoundedDegree) {
    if (config.eta < 1) throw PreconditionError("bounded-degree mode requires eta >= 1");
    if (cls.max_degree > config.eta) {
      throw PreconditionError("forcing degree exceeds eta");
    }
    // A budget-k cover has at most k vertices with at most eta neighbors
    // each, so at most k(eta+1) vertices can be non-isolated.
    limit = sat_mul(inst.k, static_cast<long long>(config.eta) + 1);
  } else {
    throw std::invalid_argument("kernelize_special requires a cluster or bounded-degree mode");
  }

  Partition partition = compute_partition(inst);  // diagnostic record
  const long long r_pairs = count_r_pairs(f, partition.R);

  std::vector<int> vlf;
  for (int v = 0; v < f.num_vertices(); ++v) {
    if (f.degree(v) > 0) vlf.push_back(v);
  }
  const long long vlf_size = static_cast<long long>(vlf.size());

  bool reject = vlf_size > limit;
  if (!reject && config.mode == KernelMode::Cluster) {
    // Each clique needs all but one of its vertices; more than k cliques
    // with an edge already exceed any budget-k cover.
    std::vector<char> seen(static_cast<size_t>(f.num_vertices()), 0);
    long long components = 0;
    for (int v : vlf) {
      if (seen[static_cast<size_t>(v)]) continue;
      ++components;
      std::vector<int> stack = {v};
      seen[static_cast<size_t>(v)] = 1;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : f.neighbors(u)) {
          if (!seen[static_cast<size_t>(w)]) {
            seen[static_cast<size_t>(w)] = 1;
            stack.push_back(w);
          }
        }
      }
    }
    reject = components > inst.k;
  }
  if (reject) {
    return reject_result(inst, config.mode, std::move(partition), r_pairs,
                         special_bound(inst.k, vlf_size), vlf_size);
  }

  MarkResult mark = mark_pairs(inst, boundary_vertices(inst, vlf),
                               /*live_only=*/false);
  std::vector<int> kept = sorted_union(mark.edges, vlf);

  ReducedBuild build = build_reduced(inst, kept);
  KernelResult result;
  result.reduced = std::move(build.reduced);
  result.edge_map = std::move(build.edge_map);
  result.vertex_map = std::move(build.vertex_map);
  result.kept_edges = std::move(kept);
  result.marked_edges = std::move(mark.edges);
  result.audit.mode = config.mode;
  result.audit.h_size = static_cast<long long>(partition.H.size());
  result.audit.r_size = static_cast<long long>(partition.R.size());
  result.audit.r_forcing_pairs = r_pairs;
  result.audit.vl_size = static_cast<long long>(mark.boundary.size());
  result.audit.vlf_size = vlf_size;
  result.audit.pairs_marked = mark.pairs_marked;
  result.audit.paths_marked = mark.paths_marked;
  result.audit.em_size = static_cast<long long>(result.kept_edges.size());
  result.audit.bound_formula = special_bound(inst.k, vlf_size);
  result.audit.within_bound =
      result.audit.em_size <= result.audit.bound_formula && vlf_size <= limit;
  result.partition = std::move(partition);
  return result;
}

KernelResult kernelize(const Instance& inst, const KernelConfig& config) {
  switch (config.mode) {
    case KernelMode::General: return kernelize_general(inst);
    case KernelMode::Planar: return kernelize_planar(inst);
    case KernelMode::Cluster:
    case KernelMode::BoundedDegree: return kernelize_special(inst, config);
  }
  throw std::invalid_argument("unknown kernel mode");
}

bool verify_kernel(const Instance& original, const KernelResult& result) {
  if (original.graph.num_edges() > 16) {
    throw std::invalid_argument("kernel verification limited to 16 edges");
  }
  return brute_force_solve(original).yes == brute_force_solve(result.reduced).yes;
}

}  // namespace spfg
