#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spfg/graph.hpp"

namespace spfg {

enum class KernelMode { General, Planar, Cluster, BoundedDegree };

std::string kernel_mode_name(KernelMode mode);

struct KernelConfig {
  KernelMode mode = KernelMode::General;
  int eta = 0;  // max forcing degree, bounded-degree mode only (>= 1)
};

// Degree-threshold partition of the base graph's edge ids viewed as
// forcing vertices: H = degree >= k+1, L = all neighbors in H (isolated
// vertices included), R = the rest. Every member of R keeps between 1 and
// k forcing-neighbors inside R.
struct Partition {
  std::vector<int> H;
  std::vector<int> L;
  std::vector<int> R;
};

// Always computes the partition (no rejection logic).
Partition compute_partition(const Instance& inst);

struct PartitionResult {
  Partition partition;
  long long r_pair_count = 0;  // forcing pairs with both endpoints in R
  bool reject = false;         // |H| > k or r_pair_count > k^2: safe NO
};

PartitionResult partition_hlr(const Instance& inst);

// Output of a marking pass: the kept path edges, the boundary vertex set
// whose pairs were marked, and counters for the audit.
struct MarkResult {
  std::vector<int> edges;      // marked edge ids, sorted
  std::vector<int> boundary;   // boundary vertex set, sorted
  long long pairs_marked = 0;  // pairs for which paths were sought
  long long paths_marked = 0;  // shortest paths actually recorded
};

// General marking: boundary = endpoints of H u R edges plus {s,t}. For
// every boundary pair, mark a shortest path with internals outside the
// boundary set (length <= k) and a shortest path in G (length <= k).
MarkResult mark_general(const Instance& inst, const Partition& partition);

// Planar marking: boundary as above; a pair is live iff some connecting
// path has all internals outside the boundary. Only live pairs get their
// two paths marked; pairs_marked counts the live pairs.
MarkResult mark_planar(const Instance& inst, const Partition& partition);

struct PatchResult {
  std::vector<int> edges;  // augmented kept set, sorted
  long long added = 0;
};

// Soundness patch: every high-degree forcing vertex must keep enough
// neighbors that small covers of the reduced instance are still forced to
// contain it. Ensures the min(deg, k+1) lowest-id forcing-neighbors of
// each H vertex are kept. Adds at most k(k+1) edges.
PatchResult patch_h_degrees(const Instance& inst, const Partition& partition,
                            const std::vector<int>& kept);

struct KernelAudit {
  KernelMode mode = KernelMode::General;
  bool rejected = false;
  long long h_size = 0;
  long long r_size = 0;
  long long r_forcing_pairs = 0;
  long long vl_size = 0;   // boundary vertex count
  long long vlf_size = 0;  // non-isolated forcing vertices (special modes)
  long long pairs_marked = 0;
  long long paths_marked = 0;
  long long patch_added = 0;
  long long em_size = 0;
  long long bound_formula = 0;  // closed-form size bound for this run
  bool within_bound = false;
};

struct KernelResult {
  Instance reduced;
  std::vector<int> edge_map;    // reduced edge id -> original edge id
  std::vector<int> vertex_map;  // reduced vertex id -> original vertex id
  std::vector<int> kept_edges;  // E_M, original edge ids, sorted
  std::vector<int> marked_edges;  // E_t, original edge ids, sorted
  Partition partition;
  KernelAudit audit;
};

// General kernel: partition (degree-threshold rejection), general marking,
// E_M = marks u H u R, degree patch, then restrict the instance to E_M.
// Audit bound: (k+2k^2) + k(k+1) + 2k*C(2(k+2k^2)+2, 2).
KernelResult kernelize_general(const Instance& inst);

// Planar kernel: requires the Euler edge-count gate (PreconditionError
// otherwise, directing callers to the general mode). Live-pair marking;
// audit bound: (k+2k^2) + k(k+1) + 2k*max(0, 3|V_L|-6), with
// |V_L| <= 2(k+2k^2)+2.
KernelResult kernelize_planar(const Instance& inst);

struct SpecialClassification {
  bool cluster = false;     // every forcing component is a clique
  int max_degree = 0;       // max forcing degree
  int non_isolated = 0;     // forcing vertices with degree >= 1
};

SpecialClassification classify_special(const ForcingGraph& forcing);

// Structured kernel for cluster / bounded-degree forcing graphs. Keeps
// every non-isolated forcing vertex, so the reduced forcing graph equals
// the original one. Rejects (safe NO) when the non-isolated count exceeds
// 2k (cluster) or k(eta+1) (bounded degree), or when a cluster forcing
// graph has more than k components containing an edge. Audit bound:
// |V_L^f| + 2k*C(2|V_L^f|+2, 2).
KernelResult kernelize_special(const Instance& inst, const KernelConfig& config);

// Dispatch on config.mode.
KernelResult kernelize(const Instance& inst, const KernelConfig& config);

// Cross-check: brute-force verdicts of original and reduced instance
// agree. Guarded to originals with <= 16 edges.
bool verify_kernel(const Instance& original, const KernelResult& result);

}  // namespace spfg
