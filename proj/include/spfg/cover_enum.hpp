#pragma once

#include <vector>

#include "spfg/graph.hpp"

namespace spfg {

// A family of vertex covers of a forcing graph. Each cover is a sorted
// vector of forcing-vertex ids (= edge ids of the base graph); the family
// contains no duplicates. `complete` asserts the family is exhaustive for
// the producing operation's contract. Consumers must not rely on order.
struct CoverFamily {
  std::vector<std::vector<int>> covers;
  bool complete = false;
};

// All minimal vertex covers of size <= k, by bounded 2-way branching on an
// uncovered pair (take one endpoint | exclude it and take the other),
// followed by a minimality post-filter and dedup. Exact: emits every
// minimal cover of size <= k and nothing else. k < 0 is invalid.
CoverFamily enum_minimal_vc_bounded(const ForcingGraph& forcing, int k);

// True iff the forcing graph has no induced 2K2: no two pairs (a,b),(c,d)
// on four distinct vertices with none of the four cross adjacencies.
bool is_2k2_free(const ForcingGraph& forcing);

// All minimal vertex covers of a 2K2-free forcing graph, as complements of
// maximal independent sets restricted to non-isolated vertices. Isolated
// vertices never appear in a minimal cover. Throws PreconditionError when
// the input is not 2K2-free.
CoverFamily enum_minimal_vc_2k2free(const ForcingGraph& forcing);

// Modulator-parameterized enumeration: X is an edge-id set whose removal
// leaves the forcing graph 2K2-free (checked; PreconditionError otherwise).
// Emits a family of vertex covers of size <= ell that contains every
// minimal vertex cover of size <= ell (possibly some non-minimal covers
// too). Runs over all X1 subset of X with X minus X1 independent.
CoverFamily enum_vc_with_modulator(const ForcingGraph& forcing,
                                   const std::vector<int>& X, int ell);

// Reference oracle: every minimal vertex cover, by exhaustive subset scan
// over non-isolated vertices. Guarded to forcing graphs with <= 24
// vertices (std::invalid_argument beyond).
CoverFamily oracle_enum_all_minimal_vc(const ForcingGraph& forcing);

// True iff cover hits every forcing pair.
bool covers_all_pairs(const ForcingGraph& forcing, const std::vector<int>& cover);

}  // namespace spfg
