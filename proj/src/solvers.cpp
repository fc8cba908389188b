#include "spfg/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "spfg/cover_enum.hpp"
#include "spfg/errors.hpp"
#include "spfg/extension.hpp"

namespace spfg {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Keep the smallest witness, breaking size ties lexicographically, so the
// verdict never depends on enumeration order.
void consider(std::optional<std::vector<int>>& best, const std::vector<int>& cand) {
  if (!best || cand.size() < best->size() ||
      (cand.size() == best->size() && cand < *best)) {
    best = cand;
  }
}

// Shared skeleton: extend every cover in the family, track the minimum
// feasible extension.
std::optional<std::vector<int>> best_extension(const Instance& inst,
                                               const std::vector<std::vector<int>>& covers,
                                               SolveStats& stats) {
  std::optional<std::vector<int>> best;
  for (const auto& cover : covers) {
    ++stats.covers_tried;
    ++stats.extend_calls;
    ExtensionResult ext = extend(inst.graph, cover, inst.s, inst.t);
    if (ext.feasible) consider(best, ext.edges);
  }
  return best;
}

}  // namespace

Verdict brute_force_solve(const Instance& inst) {
  if (inst.graph.num_edges() > 20) {
    throw std::invalid_argument("brute force limited to 20 edges");
  }
  const auto start = Clock::now();
  Verdict verdict;
  verdict.algorithm = "bruteforce";

  const int m = inst.graph.num_edges();
  const int cap = std::min(inst.k, m);
  // Size 0 can never connect two distinct terminals; scan sizes 1..cap in
  // lexicographic order so the first hit is the canonical witness.
  for (int size = 1; size <= cap && !verdict.yes; ++size) {
    std::vector<int> pick(static_cast<size_t>(size));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      ++verdict.stats.covers_tried;
      if (covers_all_pairs(inst.forcing, pick) &&
          edges_connect(inst.graph, pick, inst.s, inst.t)) {
        verdict.yes = true;
        verdict.witness = pick;
        verdict.best_size = pick.size();
        break;
      }
      int i = size - 1;
      while (i >= 0 && pick[static_cast<size_t>(i)] == m - size + i) --i;
      if (i < 0) break;
      ++pick[static_cast<size_t>(i)];
      for (int j = i + 1; j < size; ++j) {
        pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
      }
    }
  }
  verdict.stats.elapsed_ms = ms_since(start);
  return verdict;
}

Verdict fpt_solve(const Instance& inst) {
  const auto start = Clock::now();
  Verdict verdict;
  verdict.algorithm = "fpt";
  if (inst.k == 0) {  // no edges can never connect distinct terminals
    verdict.stats.elapsed_ms = ms_since(start);
    return verdict;
  }
  CoverFamily family = enum_minimal_vc_bounded(inst.forcing, inst.k);
  auto best = best_extension(inst, family.covers, verdict.stats);
  if (best && static_cast<int>(best->size()) <= inst.k) {
    verdict.yes = true;
    verdict.witness = std::move(*best);
    verdict.best_size = verdict.witness->size();
  }
  verdict.stats.elapsed_ms = ms_since(start);
  return verdict;
}

Verdict poly_2k2_solve(const Instance& inst) {
  if (!is_2k2_free(inst.forcing)) {
    throw PreconditionError("forcing graph is not 2K2-free");
  }
  const auto start = Clock::now();
  Verdict verdict;
  verdict.algorithm = "poly2k2";
  CoverFamily family = enum_minimal_vc_2k2free(inst.forcing);
  auto best = best_extension(inst, family.covers, verdict.stats);
  if (best) {
    // The family holds every minimal cover, and any feasible solution
    // contains one, so this minimum is the true optimum.
    verdict.best_size = best->size();
    if (static_cast<int>(best->size()) <= inst.k) {
      verdict.yes = true;
      verdict.witness = std::move(*best);
    }
  }
  verdict.stats.elapsed_ms = ms_since(start);
  return verdict;
}

Verdict modulator_solve(const Instance& inst) {
  if (!inst.modulator || !inst.ell) {
    throw PreconditionError("instance carries no modulator/budget");
  }
  const auto start = Clock::now();
  Verdict verdict;
  verdict.algorithm = "modulator";
  const int ell = *inst.ell;
  if (ell == 0) {
    verdict.stats.elapsed_ms = ms_since(start);
    return verdict;
  }
  CoverFamily family = enum_vc_with_modulator(inst.forcing, *inst.modulator, ell);
  auto best = best_extension(inst, family.covers, verdict.stats);
  if (best && static_cast<int>(best->size()) <= ell) {
    verdict.yes = true;
    verdict.witness = std::move(*best);
    verdict.best_size = verdict.witness->size();
  }
  verdict.stats.elapsed_ms = ms_since(start);
  return verdict;
}

Verdict solve(const Instance& inst, AlgoChoice algo) {
  switch (algo) {
    case AlgoChoice::Auto:
      return is_2k2_free(inst.forcing) ? poly_2k2_solve(inst) : fpt_solve(inst);
    case AlgoChoice::BruteForce:
      return brute_force_solve(inst);
    case AlgoChoice::Fpt:
      return fpt_solve(inst);
    case AlgoChoice::Poly2K2:
      return poly_2k2_solve(inst);
    case AlgoChoice::Modulator:
      return modulator_solve(inst);
  }
  throw std::invalid_argument("unknown algorithm tag");
}

bool verify_witness(const Instance& inst, const std::vector<int>& witness,
                    int budget) {
  if (static_cast<int>(witness.size()) > budget) return false;
  std::vector<char> in(static_cast<size_t>(inst.graph.num_edges()), 0);
  for (int id : witness) {
    if (id < 0 || id >= inst.graph.num_edges()) return false;
    if (in[static_cast<size_t>(id)]) return false;  // duplicates are a lie about size
    in[static_cast<size_t>(id)] = 1;
  }
  for (auto [i, j] : inst.forcing.pairs()) {
    if (!in[static_cast<size_t>(i)] && !in[static_cast<size_t>(j)]) return false;
  }
  return edges_connect(inst.graph, witness, inst.s, inst.t);
}

}  // namespace spfg
