#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "spfg/cover_enum.hpp"
#include "spfg/errors.hpp"
#include "test_util.hpp"

using namespace spfg;
using namespace testutil;

namespace {

std::set<std::vector<int>> as_set(const CoverFamily& fam) {
  return {fam.covers.begin(), fam.covers.end()};
}

std::set<std::vector<int>> filter_size(const std::set<std::vector<int>>& fam, int k) {
  std::set<std::vector<int>> out;
  for (const auto& c : fam) {
    if (static_cast<int>(c.size()) <= k) out.insert(c);
  }
  return out;
}

}  // namespace

TEST_CASE("oracle enumerates all minimal covers of small graphs") {
  SUBCASE("no pairs -> only the empty cover") {
    auto fam = oracle_enum_all_minimal_vc(ForcingGraph(4, {}));
    CHECK(fam.complete);
    CHECK(as_set(fam) == std::set<std::vector<int>>{{}});
  }
  SUBCASE("single pair") {
    auto fam = oracle_enum_all_minimal_vc(ForcingGraph(3, {{0, 2}}));
    CHECK(as_set(fam) == std::set<std::vector<int>>{{0}, {2}});
  }
  SUBCASE("star: center or all leaves") {
    auto fam = oracle_enum_all_minimal_vc(ForcingGraph(3, {{0, 1}, {0, 2}}));
    CHECK(as_set(fam) == std::set<std::vector<int>>{{0}, {1, 2}});
  }
  SUBCASE("path on three vertices") {
    auto fam = oracle_enum_all_minimal_vc(ForcingGraph(3, {{0, 1}, {1, 2}}));
    CHECK(as_set(fam) == std::set<std::vector<int>>{{1}, {0, 2}});
  }
  SUBCASE("triangle: every pair of vertices") {
    auto fam = oracle_enum_all_minimal_vc(ForcingGraph(3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(as_set(fam) == std::set<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
  }
  SUBCASE("four-cycle: the two opposite pairs") {
    auto fam =
        oracle_enum_all_minimal_vc(ForcingGraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
    CHECK(as_set(fam) == std::set<std::vector<int>>{{0, 2}, {1, 3}});
  }
  SUBCASE("isolated vertices never appear") {
    auto fam = oracle_enum_all_minimal_vc(ForcingGraph(6, {{1, 4}}));
    CHECK(as_set(fam) == std::set<std::vector<int>>{{1}, {4}});
  }
  SUBCASE("guard rejects large inputs") {
    CHECK_THROWS_AS(oracle_enum_all_minimal_vc(ForcingGraph(25, {{0, 1}})),
                    std::invalid_argument);
  }
}

TEST_CASE("covers_all_pairs") {
  ForcingGraph f(4, {{0, 1}, {2, 3}});
  CHECK(covers_all_pairs(f, {0, 2}));
  CHECK(covers_all_pairs(f, {1, 2, 3}));
  CHECK(!covers_all_pairs(f, {0}));
  CHECK(!covers_all_pairs(f, {}));
  CHECK(covers_all_pairs(ForcingGraph(3, {}), {}));
}

TEST_CASE("bounded enumeration: frozen small cases") {
  SUBCASE("star under budget 2") {
    auto fam = enum_minimal_vc_bounded(ForcingGraph(3, {{0, 1}, {0, 2}}), 2);
    CHECK(fam.complete);
    CHECK(as_set(fam) == std::set<std::vector<int>>{{0}, {1, 2}});
  }
  SUBCASE("star under budget 1 keeps only the center") {
    auto fam = enum_minimal_vc_bounded(ForcingGraph(3, {{0, 1}, {0, 2}}), 1);
    CHECK(as_set(fam) == std::set<std::vector<int>>{{0}});
  }
  SUBCASE("triangle under budget 1 is empty") {
    auto fam =
        enum_minimal_vc_bounded(ForcingGraph(3, {{0, 1}, {0, 2}, {1, 2}}), 1);
    CHECK(fam.covers.empty());
    CHECK(fam.complete);
  }
  SUBCASE("budget 0 with no pairs") {
    auto fam = enum_minimal_vc_bounded(ForcingGraph(2, {}), 0);
    CHECK(as_set(fam) == std::set<std::vector<int>>{{}});
  }
  SUBCASE("budget 0 with a pair") {
    auto fam = enum_minimal_vc_bounded(ForcingGraph(2, {{0, 1}}), 0);
    CHECK(fam.covers.empty());
  }
  SUBCASE("negative budget rejected") {
    CHECK_THROWS_AS(enum_minimal_vc_bounded(ForcingGraph(2, {}), -1),
                    std::invalid_argument);
  }
}

TEST_CASE("bounded enumeration matches the oracle on random graphs") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    int m = 1 + static_cast<int>(rng.below(11));  // up to 11 forcing vertices
    ForcingGraph f = random_forcing(m, 0.3, rng);
    auto oracle = as_set(oracle_enum_all_minimal_vc(f));
    for (int k = 0; k <= 6; ++k) {
      auto fam = enum_minimal_vc_bounded(f, k);
      CHECK(fam.complete);
      auto got = as_set(fam);
      REQUIRE(got.size() == fam.covers.size());  // no duplicates
      CHECK(got == filter_size(oracle, k));
    }
  }
}

TEST_CASE("2K2 detection") {
  CHECK(is_2k2_free(ForcingGraph(0, {})));
  CHECK(is_2k2_free(ForcingGraph(5, {})));
  // Two disjoint pairs with no cross adjacency: the canonical obstruction.
  CHECK(!is_2k2_free(ForcingGraph(4, {{0, 1}, {2, 3}})));
  // Adding any cross edge dissolves it.
  CHECK(is_2k2_free(ForcingGraph(4, {{0, 1}, {2, 3}, {1, 2}})));
  // A star is 2K2-free no matter the size.
  CHECK(is_2k2_free(ForcingGraph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}})));
  // C4 is 2K2-free; C5 is 2K2-free; P5 is not (its two end pairs).
  CHECK(is_2k2_free(ForcingGraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})));
  CHECK(is_2k2_free(ForcingGraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})));
  CHECK(!is_2k2_free(ForcingGraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}})));
}

TEST_CASE("2K2-free enumeration equals the oracle") {
  SUBCASE("star") {
    auto fam = enum_minimal_vc_2k2free(ForcingGraph(4, {{0, 1}, {0, 2}, {0, 3}}));
    CHECK(fam.complete);
    CHECK(as_set(fam) == std::set<std::vector<int>>{{0}, {1, 2, 3}});
  }
  SUBCASE("triangle plus isolated vertex") {
    auto fam =
        enum_minimal_vc_2k2free(ForcingGraph(4, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(as_set(fam) == std::set<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
  }
  SUBCASE("non-2K2-free input throws") {
    CHECK_THROWS_AS(enum_minimal_vc_2k2free(ForcingGraph(4, {{0, 1}, {2, 3}})),
                    PreconditionError);
  }
  SUBCASE("random 2K2-free graphs match the oracle exactly") {
    SplitMix64 rng(31337);
    int tested = 0;
    for (int trial = 0; trial < 400 && tested < 120; ++trial) {
      int m = 1 + static_cast<int>(rng.below(10));
      ForcingGraph f = random_forcing(m, 0.45, rng);
      if (!is_2k2_free(f)) continue;
      ++tested;
      auto fam = enum_minimal_vc_2k2free(f);
      CHECK(fam.complete);
      CHECK(as_set(fam) == as_set(oracle_enum_all_minimal_vc(f)));
    }
    REQUIRE(tested >= 60);  // the family actually exercised the dense cases
  }
}

TEST_CASE("modulator enumeration contains every small minimal cover") {
  SUBCASE("frozen: P5 with middle vertex as modulator") {
    // P5 is not 2K2-free; removing vertex 2 leaves {0-1, 3-4}... still a
    // 2K2. Removing {1, 3} leaves three isolated vertices.
    ForcingGraph p5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK_THROWS_AS(enum_vc_with_modulator(p5, {2}, 3), PreconditionError);
    auto fam = enum_vc_with_modulator(p5, {1, 3}, 2);
    auto got = as_set(fam);
    // {1,3} is the unique minimum cover; it must be present.
    CHECK(got.count({1, 3}) == 1);
    for (const auto& c : got) {
      CHECK(covers_all_pairs(p5, c));
      CHECK(static_cast<int>(c.size()) <= 2);
    }
  }
  SUBCASE("empty modulator on a 2K2-free graph") {
    ForcingGraph star(3, {{0, 1}, {0, 2}});
    auto fam = enum_vc_with_modulator(star, {}, 2);
    auto got = as_set(fam);
    CHECK(got.count({0}) == 1);
    CHECK(got.count({1, 2}) == 1);
  }
  SUBCASE("random graphs: family superset of bounded minimal covers") {
    SplitMix64 rng(99);
    int tested = 0;
    for (int trial = 0; trial < 300 && tested < 80; ++trial) {
      int m = 2 + static_cast<int>(rng.below(9));
      ForcingGraph f = random_forcing(m, 0.35, rng);
      // Greedy modulator: repeatedly locate an induced 2K2 and add the
      // lowest endpoint of its first pair.
      std::vector<int> X;
      ForcingGraph cur = f;
      while (!is_2k2_free(cur)) {
        const auto& ps = cur.pairs();
        bool found = false;
        for (size_t a = 0; a < ps.size() && !found; ++a) {
          for (size_t b = a + 1; b < ps.size() && !found; ++b) {
            auto [p, q] = ps[a];
            auto [r, s] = ps[b];
            if (p == r || p == s || q == r || q == s) continue;
            if (cur.adjacent(p, r) || cur.adjacent(p, s) ||
                cur.adjacent(q, r) || cur.adjacent(q, s)) {
              continue;
            }
            X.push_back(p);
            found = true;
          }
        }
        REQUIRE(found);
        // Drop all pairs touching X.
        std::vector<std::pair<int, int>> keep;
        for (auto [i, j] : f.pairs()) {
          if (std::find(X.begin(), X.end(), i) == X.end() &&
              std::find(X.begin(), X.end(), j) == X.end()) {
            keep.push_back({i, j});
          }
        }
        cur = ForcingGraph(f.num_vertices(), keep);
      }
      std::sort(X.begin(), X.end());
      X.erase(std::unique(X.begin(), X.end()), X.end());
      ++tested;
      for (int ell = 0; ell <= 5; ++ell) {
        auto fam = enum_vc_with_modulator(f, X, ell);
        auto got = as_set(fam);
        for (const auto& c : got) {
          CHECK(covers_all_pairs(f, c));
          CHECK(static_cast<int>(c.size()) <= ell);
        }
        auto want = filter_size(as_set(oracle_enum_all_minimal_vc(f)), ell);
        for (const auto& c : want) {
          CHECK(got.count(c) == 1);
        }
      }
    }
    REQUIRE(tested >= 40);
  }
}
