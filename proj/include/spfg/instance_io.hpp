#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "spfg/graph.hpp"

namespace spfg {

// ==================== file format ====================
//
// Line-oriented UTF-8, `#` starts a comment, sections in fixed order:
//
//   spfg 1
//   graph <n> <m>
//   e <u> <v>          (m times)
//   forcing <m'>
//   f <i> <j>          (m' times, over edge ids)
//   query <s> <t> <k>
//   modulator <r>      (optional)
//   x <i>              (r times)
//   budget <ell>       (required iff modulator present)

// Parses instance text; throws ParseError with line/column on failure.
Instance parse_instance(std::string_view text);

// Canonical serialization: fixed section order, edges in id order with
// endpoints ascending, forcing pairs sorted, modulator ids ascending.
// Byte-identical across runs; parse_instance(serialize_instance(x)) == x.
std::string serialize_instance(const Instance& inst);

// ==================== deterministic RNG ====================
//
// SplitMix64: tiny, portable, fully specified 64-bit generator. Same seed,
// same stream, on every platform.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform in [0, bound); bound >= 1. Rejection-free modulo reduction is
  // fine at the scales used here and keeps the stream portable.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [0, 1) with 53-bit resolution.
  double next_double();

private:
  std::uint64_t state_;
};

// ==================== generators ====================

enum class GenKind {
  Ladder,        // forcing = disjoint pairs (max forcing degree 1)
  Cluster,       // forcing = disjoint cliques
  BoundedDegree, // forcing with max degree <= eta
  GridPlanar,    // rows x cols grid base, optional cell diagonals
  Random,        // Erdos-Renyi base, random forcing pairs
  TwoK2FreeStar, // forcing = one star plus isolated vertices
};

GenKind parse_gen_kind(const std::string& name);  // std::invalid_argument on unknown
std::string gen_kind_name(GenKind kind);

struct GenParams {
  int n = 8;            // vertices (non-grid kinds)
  int extra_edges = 4;  // edges beyond the random spanning tree
  int pairs = 3;        // forcing pair count (ladder/bounded/grid/random)
  int eta = 2;          // degree cap (bounded-degree)
  int cliques = 2;      // cluster: clique count
  int clique_size = 2;  // cluster: vertices per clique (>= 2)
  int leaves = 3;       // star: leaf count
  int rows = 3;         // grid rows (>= 2)
  int cols = 3;         // grid cols (>= 2)
  bool diagonals = false;  // grid: add one diagonal per cell
  double edge_prob = 0.35; // random: Erdos-Renyi edge probability
  int k = 3;            // query budget
};

// Deterministic: output is a pure function of (kind, params, seed).
// Terminals are 0 and n-1. The produced instance satisfies the kind's
// structural predicate (checked; std::logic_error if construction ever
// violates it) and validate_instance. Invalid params ->
// std::invalid_argument.
Instance generate(GenKind kind, const GenParams& params, std::uint64_t seed);

// FNV-1a 64-bit digest of a byte string (report fingerprints).
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace spfg
