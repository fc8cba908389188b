#include "spfg/cover_enum.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "spfg/errors.hpp"

namespace spfg {

namespace {

// Every vertex of the cover must privately cover some pair (its partner
// absent from the cover); otherwise the vertex is redundant.
bool is_minimal_cover(const ForcingGraph& forcing, const std::vector<int>& cover) {
  std::vector<char> in(static_cast<size_t>(forcing.num_vertices()), 0);
  for (int v : cover) in[static_cast<size_t>(v)] = 1;
  for (int v : cover) {
    bool has_private = false;
    for (int w : forcing.neighbors(v)) {
      if (!in[static_cast<size_t>(w)]) {
        has_private = true;
        break;
      }
    }
    if (!has_private) return false;
  }
  return true;
}

std::vector<int> non_isolated_vertices(const ForcingGraph& forcing) {
  std::vector<int> out;
  for (int v = 0; v < forcing.num_vertices(); ++v) {
    if (forcing.degree(v) > 0) out.push_back(v);
  }
  return out;
}

void branch_bounded(const ForcingGraph& forcing, int k,
                    std::vector<char>& chosen, std::vector<char>& excluded,
                    int chosen_count, std::set<std::vector<int>>& found) {
  // First pair not covered by the current choice.
  int a = -1, b = -1;
  for (auto [i, j] : forcing.pairs()) {
    if (!chosen[static_cast<size_t>(i)] && !chosen[static_cast<size_t>(j)]) {
      a = i;
      b = j;
      break;
    }
  }
  if (a == -1) {  // leaf: a cover
    std::vector<int> cover;
    for (int v = 0; v < forcing.num_vertices(); ++v) {
      if (chosen[static_cast<size_t>(v)]) cover.push_back(v);
    }
    if (is_minimal_cover(forcing, cover)) found.insert(std::move(cover));
    return;
  }
  if (chosen_count == k) return;  // budget exhausted with pairs uncovered

  auto take = [&](int v) {
    chosen[static_cast<size_t>(v)] = 1;
    branch_bounded(forcing, k, chosen, excluded, chosen_count + 1, found);
    chosen[static_cast<size_t>(v)] = 0;
  };

  const bool a_excluded = excluded[static_cast<size_t>(a)] != 0;
  const bool b_excluded = excluded[static_cast<size_t>(b)] != 0;
  if (a_excluded && b_excluded) return;  // dead branch
  if (a_excluded) {
    take(b);
  } else if (b_excluded) {
    take(a);
  } else {
    take(a);
    excluded[static_cast<size_t>(a)] = 1;
    take(b);
    excluded[static_cast<size_t>(a)] = 0;
  }
}

// All maximal independent sets of the subgraph induced on `vertices`,
// built one vertex at a time: each level's family is extended to the next
// level and deduplicated via canonical sorted encoding. Output-polynomial
// whenever every induced prefix has polynomially many maximal independent
// sets (hereditary classes such as 2K2-free ones).
std::vector<std::vector<int>> maximal_independent_sets(
    const ForcingGraph& forcing, const std::vector<int>& vertices) {
  std::set<std::vector<int>> level = {{}};
  std::vector<char> eligible(static_cast<size_t>(forcing.num_vertices()), 0);
  for (int v : vertices) eligible[static_cast<size_t>(v)] = 1;

  std::vector<char> in_set(static_cast<size_t>(forcing.num_vertices()), 0);
  for (size_t idx = 0; idx < vertices.size(); ++idx) {
    const int v = vertices[idx];
    std::set<std::vector<int>> next;
    for (const auto& S : level) {
      for (int u : S) in_set[static_cast<size_t>(u)] = 1;
      bool v_blocked = false;
      for (int w : forcing.neighbors(v)) {
        if (in_set[static_cast<size_t>(w)]) {
          v_blocked = true;
          break;
        }
      }
      if (!v_blocked) {
        std::vector<int> grown = S;
        grown.insert(std::lower_bound(grown.begin(), grown.end(), v), v);
        next.insert(std::move(grown));
      } else {
        next.insert(S);  // still maximal among the first idx+1 vertices
        // Drop v's neighbors, add v, re-complete greedily.
        std::vector<char> cand(static_cast<size_t>(forcing.num_vertices()), 0);
        for (int u : S) {
          if (!forcing.adjacent(u, v)) cand[static_cast<size_t>(u)] = 1;
        }
        cand[static_cast<size_t>(v)] = 1;
        for (size_t j = 0; j <= idx; ++j) {
          const int u = vertices[j];
          if (cand[static_cast<size_t>(u)]) continue;
          bool blocked = false;
          for (int w : forcing.neighbors(u)) {
            if (cand[static_cast<size_t>(w)]) {
              blocked = true;
              break;
            }
          }
          if (!blocked) cand[static_cast<size_t>(u)] = 1;
        }
        std::vector<int> completed;
        for (size_t j = 0; j <= idx; ++j) {
          const int u = vertices[j];
          if (cand[static_cast<size_t>(u)]) completed.push_back(u);
        }
        std::sort(completed.begin(), completed.end());
        next.insert(std::move(completed));
      }
      for (int u : S) in_set[static_cast<size_t>(u)] = 0;
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

ForcingGraph induced_without(const ForcingGraph& forcing,
                             const std::vector<char>& removed) {
  std::vector<std::pair<int, int>> pairs;
  for (auto [i, j] : forcing.pairs()) {
    if (!removed[static_cast<size_t>(i)] && !removed[static_cast<size_t>(j)]) {
      pairs.push_back({i, j});
    }
  }
  return ForcingGraph(forcing.num_vertices(), std::move(pairs));
}

}  // namespace

bool covers_all_pairs(const ForcingGraph& forcing, const std::vector<int>& cover) {
  std::vector<char> in(static_cast<size_t>(forcing.num_vertices()), 0);
  for (int v : cover) in[static_cast<size_t>(v)] = 1;
  for (auto [i, j] : forcing.pairs()) {
    if (!in[static_cast<size_t>(i)] && !in[static_cast<size_t>(j)]) return false;
  }
  return true;
}

CoverFamily enum_minimal_vc_bounded(const ForcingGraph& forcing, int k) {
  if (k < 0) throw std::invalid_argument("negative cover budget");
  std::set<std::vector<int>> found;
  std::vector<char> chosen(static_cast<size_t>(forcing.num_vertices()), 0);
  std::vector<char> excluded(static_cast<size_t>(forcing.num_vertices()), 0);
  branch_bounded(forcing, k, chosen, excluded, 0, found);
  CoverFamily family;
  family.covers.assign(found.begin(), found.end());
  family.complete = true;
  return family;
}

bool is_2k2_free(const ForcingGraph& forcing) {
  const auto& pairs = forcing.pairs();
  for (size_t p = 0; p < pairs.size(); ++p) {
    for (size_t q = p + 1; q < pairs.size(); ++q) {
      auto [a, b] = pairs[p];
      auto [c, d] = pairs[q];
      if (a == c || a == d || b == c || b == d) continue;  // share a vertex
      if (forcing.adjacent(a, c) || forcing.adjacent(a, d) ||
          forcing.adjacent(b, c) || forcing.adjacent(b, d)) {
        continue;
      }
      return false;  // induced pair of independent edges
    }
  }
  return true;
}

CoverFamily enum_minimal_vc_2k2free(const ForcingGraph& forcing) {
  if (!is_2k2_free(forcing)) {
    throw PreconditionError("forcing graph is not 2K2-free");
  }
  const std::vector<int> active = non_isolated_vertices(forcing);
  std::vector<char> active_mask(static_cast<size_t>(forcing.num_vertices()), 0);
  for (int v : active) active_mask[static_cast<size_t>(v)] = 1;

  CoverFamily family;
  for (const auto& mis : maximal_independent_sets(forcing, active)) {
    std::vector<char> in(static_cast<size_t>(forcing.num_vertices()), 0);
    for (int v : mis) in[static_cast<size_t>(v)] = 1;
    std::vector<int> cover;
    for (int v : active) {
      if (!in[static_cast<size_t>(v)]) cover.push_back(v);
    }
    family.covers.push_back(std::move(cover));
  }
  std::sort(family.covers.begin(), family.covers.end());
  family.complete = true;
  return family;
}

CoverFamily enum_vc_with_modulator(const ForcingGraph& forcing,
                                   const std::vector<int>& X, int ell) {
  if (ell < 0) throw std::invalid_argument("negative cover budget");
  for (int v : X) {
    if (v < 0 || v >= forcing.num_vertices()) {
      throw std::invalid_argument("modulator id out of range");
    }
  }
  std::vector<char> in_x(static_cast<size_t>(forcing.num_vertices()), 0);
  for (int v : X) in_x[static_cast<size_t>(v)] = 1;
  if (!is_2k2_free(induced_without(forcing, in_x))) {
    throw PreconditionError("forcing graph minus modulator is not 2K2-free");
  }

  std::vector<int> xs(X.begin(), X.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  const size_t r = xs.size();
  if (r > 62) throw std::invalid_argument("modulator too large to enumerate");

  std::set<std::vector<int>> found;
  for (std::uint64_t bits = 0; bits < (1ull << r); ++bits) {
    // X1 = picked modulator vertices; X0 = X minus X1 stays out of the cover.
    std::vector<int> x0;
    std::vector<char> base_mask(static_cast<size_t>(forcing.num_vertices()), 0);
    for (size_t i = 0; i < r; ++i) {
      if (bits & (1ull << i)) {
        base_mask[static_cast<size_t>(xs[i])] = 1;
      } else {
        x0.push_back(xs[i]);
      }
    }
    // X0 must be independent, else some pair inside it can never be covered.
    bool independent = true;
    for (size_t i = 0; i < x0.size() && independent; ++i) {
      for (size_t j = i + 1; j < x0.size(); ++j) {
        if (forcing.adjacent(x0[i], x0[j])) {
          independent = false;
          break;
        }
      }
    }
    if (!independent) continue;

    // Neighbors of X0 are forced into the cover.
    std::vector<char> in_x0(static_cast<size_t>(forcing.num_vertices()), 0);
    for (int v : x0) in_x0[static_cast<size_t>(v)] = 1;
    for (int v : x0) {
      for (int w : forcing.neighbors(v)) {
        if (!in_x0[static_cast<size_t>(w)]) base_mask[static_cast<size_t>(w)] = 1;
      }
    }
    std::vector<int> base;
    for (int v = 0; v < forcing.num_vertices(); ++v) {
      if (base_mask[static_cast<size_t>(v)]) base.push_back(v);
    }
    if (static_cast<int>(base.size()) > ell) continue;

    // Remaining pairs avoid X and the forced neighbors; that induced
    // subgraph is 2K2-free, so its minimal covers enumerate in poly time.
    std::vector<char> removed = base_mask;
    for (int v : xs) removed[static_cast<size_t>(v)] = 1;
    ForcingGraph rest = induced_without(forcing, removed);
    for (const auto& sub : enum_minimal_vc_2k2free(rest).covers) {
      std::vector<int> cover = base;
      cover.insert(cover.end(), sub.begin(), sub.end());
      std::sort(cover.begin(), cover.end());
      if (static_cast<int>(cover.size()) <= ell) found.insert(std::move(cover));
    }
  }

  CoverFamily family;
  family.covers.assign(found.begin(), found.end());
  family.complete = true;
  return family;
}

CoverFamily oracle_enum_all_minimal_vc(const ForcingGraph& forcing) {
  if (forcing.num_vertices() > 24) {
    throw std::invalid_argument("oracle limited to 24 forcing vertices");
  }
  const std::vector<int> active = non_isolated_vertices(forcing);
  const size_t a = active.size();
  CoverFamily family;
  for (std::uint64_t bits = 0; bits < (1ull << a); ++bits) {
    std::vector<int> cand;
    for (size_t i = 0; i < a; ++i) {
      if (bits & (1ull << i)) cand.push_back(active[i]);
    }
    if (covers_all_pairs(forcing, cand) && is_minimal_cover(forcing, cand)) {
      family.covers.push_back(std::move(cand));
    }
  }
  std::sort(family.covers.begin(), family.covers.end());
  family.complete = true;
  return family;
}

}  // namespace spfg
