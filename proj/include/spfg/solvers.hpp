#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spfg/graph.hpp"

namespace spfg {

enum class AlgoChoice {
  Auto,        // poly_2k2 when the forcing graph is 2K2-free, else fpt
  BruteForce,
  Fpt,
  Poly2K2,
  Modulator,
};

struct SolveStats {
  long long covers_tried = 0;
  long long extend_calls = 0;
  double elapsed_ms = 0.0;
};

// Answer to one instance. On YES, `witness` is a sorted edge-id set of
// size <= budget that covers every forcing pair and connects the
// terminals; `best_size` is its size. poly_2k2_solve additionally sets
// `best_size` to the minimum feasible solution size whenever any feasible
// solution exists, even when that minimum exceeds k (verdict NO).
struct Verdict {
  bool yes = false;
  std::optional<std::vector<int>> witness;
  std::optional<std::size_t> best_size;
  std::string algorithm;
  SolveStats stats;
};

// Exhaustive reference solver: scans edge subsets of size <= k in
// (size, lexicographic) order. Guarded to graphs with <= 20 edges.
Verdict brute_force_solve(const Instance& inst);

// Enumerates minimal size-<=k covers of the forcing graph and extends
// each to connect the terminals; YES iff some extension fits the budget.
Verdict fpt_solve(const Instance& inst);

// Polynomial-time solver for 2K2-free forcing graphs (PreconditionError
// otherwise): extends every minimal cover, reports the minimum feasible
// size, and answers YES iff it is <= k.
Verdict poly_2k2_solve(const Instance& inst);

// Modulator-parameterized solver: requires inst.modulator and inst.ell,
// and that the forcing graph minus the modulator is 2K2-free
// (PreconditionError otherwise). YES iff some enumerated cover extends to
// <= ell edges.
Verdict modulator_solve(const Instance& inst);

// Dispatch by tag; Auto picks poly_2k2 or fpt by structure.
Verdict solve(const Instance& inst, AlgoChoice algo);

// Independent witness checker: re-tests from scratch (not via the solver
// code paths) that `witness` has at most `budget` edges, hits every
// forcing pair, and connects the terminals.
bool verify_witness(const Instance& inst, const std::vector<int>& witness,
                    int budget);

}  // namespace spfg
