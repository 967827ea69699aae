#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "sweepcover/errors.hpp"
#include "sweepcover/tree_poset.hpp"

using namespace sweepcover;

namespace {

std::vector<Antichain> collect_antichains(const TreePoset& tree, int node = TreePoset::root) {
  std::vector<Antichain> out;
  for_each_maximal_antichain(tree, node, [&](const Antichain& s) { out.push_back(s); });
  return out;
}

// Colourings of the antichain with exactly k colours, counted up to
// relabelling by walking restricted growth strings, where a colour may be
// shared only between siblings. Independent of the Stirling-formula path.
long count_colourings_exhaustively(const TreePoset& tree, const Antichain& s, int k) {
  const int n = static_cast<int>(s.size());
  std::vector<int> colour(static_cast<std::size_t>(n));
  long count = 0;
  auto rec = [&](auto&& self, int i, int used) -> void {
    if (i == n) {
      if (used == k) ++count;
      return;
    }
    for (int c = 0; c <= used && c < n; ++c) {
      bool ok = true;
      for (int j = 0; j < i; ++j) {
        if (colour[static_cast<std::size_t>(j)] == c &&
            tree.parent[s[static_cast<std::size_t>(j)]] != tree.parent[s[static_cast<std::size_t>(i)]]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      colour[static_cast<std::size_t>(i)] = c;
      self(self, i + 1, std::max(used, c + 1));
    }
  };
  if (n == 0) return 0;
  rec(rec, 0, 0);
  return count;
}

// The example tree: root with children p1, p2; p1 has one child, p2 has two.
TreePoset example_tree() { return make_tree({-1, 0, 0, 1, 2, 2}); }

}  // namespace

TEST_CASE("n-ary truncation sizes") {
  CHECK(build_nary_truncation(2, 1).node_count() == 3);
  CHECK(build_nary_truncation(2, 2).node_count() == 7);
  CHECK(build_nary_truncation(3, 3).node_count() == 40);
  CHECK(build_nary_truncation(2, 0).node_count() == 1);
  CHECK_THROWS_AS(build_nary_truncation(2, 30), resource_limit_error);
}

TEST_CASE("truncation structure is consistent") {
  const TreePoset t = build_nary_truncation(3, 2);
  CHECK(t.parent[0] == -1);
  for (int v = 1; v < t.node_count(); ++v) {
    const int p = t.parent[v];
    CHECK(t.depth[v] == t.depth[p] + 1);
    CHECK(std::count(t.children[p].begin(), t.children[p].end(), v) == 1);
  }
  for (int v = 0; v < t.node_count(); ++v)
    CHECK(t.children[v].size() == (t.depth[v] == 2 ? 0u : 3u));
}

TEST_CASE("maximal antichains of tiny trees") {
  const TreePoset single = build_nary_truncation(2, 0);
  CHECK(collect_antichains(single) == std::vector<Antichain>{{0}});

  const TreePoset cherry = build_nary_truncation(2, 1);
  const auto mas = collect_antichains(cherry);
  REQUIRE(mas.size() == 2);
  CHECK(std::set<Antichain>(mas.begin(), mas.end()) ==
        std::set<Antichain>{{0}, {1, 2}});

  CHECK(collect_antichains(build_nary_truncation(2, 2)).size() == 5);
}

TEST_CASE("every enumerated set is a maximal antichain, exactly once") {
  for (int depth = 1; depth <= 3; ++depth) {
    const TreePoset t = build_nary_truncation(2, depth);
    const auto mas = collect_antichains(t);
    CHECK(BigInt(static_cast<unsigned long>(mas.size())) ==
          count_maximal_antichains(t, TreePoset::root));
    std::set<Antichain> unique(mas.begin(), mas.end());
    CHECK(unique.size() == mas.size());
    for (const auto& s : mas) CHECK(is_maximal_antichain(t, s));
  }
}

TEST_CASE("enumeration cap aborts") {
  const TreePoset t = build_nary_truncation(2, 4);
  CHECK_THROWS_AS(for_each_maximal_antichain(t, [](const Antichain&) {}, 10),
                  resource_limit_error);
}

TEST_CASE("disjointness: antichains of the child forest multiply") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 20; ++trial) {
    // random tree on 2..40 nodes; parents point to earlier nodes
    const int n = 2 + static_cast<int>(rng() % 39);
    std::vector<int> parents(static_cast<std::size_t>(n), -1);
    for (int v = 1; v < n; ++v)
      parents[static_cast<std::size_t>(v)] = static_cast<int>(rng() % static_cast<unsigned>(v));
    const TreePoset t = make_tree(parents);

    for (int p = 0; p < n; ++p) {
      if (t.is_leaf(p)) continue;
      // forest antichains = those maximal antichains of D[p] that exclude p
      const BigInt at_p = BigInt(static_cast<unsigned long>(collect_antichains(t, p).size()));
      BigInt product(1);
      for (int c : t.children[p])
        product *= BigInt(static_cast<unsigned long>(collect_antichains(t, c).size()));
      CHECK(at_p == product + 1);
      CHECK(at_p == count_maximal_antichains(t, p));
    }
  }
}

TEST_CASE("sibling decomposition") {
  const TreePoset t = example_tree();

  const auto siblings = sibling_decomposition(t, {4, 5});
  REQUIRE(siblings.groups.size() == 1);
  CHECK(siblings.groups[0] == std::vector<int>{4, 5});

  const auto mixed = sibling_decomposition(t, {1, 4, 5});
  REQUIRE(mixed.groups.size() == 2);
  CHECK(mixed.groups[0] == std::vector<int>{1});
  CHECK(mixed.groups[1] == std::vector<int>{4, 5});

  const auto root_only = sibling_decomposition(t, {0});
  REQUIRE(root_only.groups.size() == 1);
  CHECK(root_only.groups[0] == std::vector<int>{0});
}

TEST_CASE("colour counting on a decomposed antichain") {
  const TreePoset t = example_tree();

  CHECK(count_dsc_on_antichain(sibling_decomposition(t, {4, 5}), 2) == 1);
  CHECK(count_dsc_on_antichain(sibling_decomposition(t, {1, 4, 5}), 2) == 1);
  CHECK(count_dsc_on_antichain(sibling_decomposition(t, {1, 4, 5}), 3) == 1);
  CHECK(count_dsc_on_antichain(sibling_decomposition(t, {1, 4, 5}), 1) == 0);
  CHECK(count_dsc_on_antichain(sibling_decomposition(t, {4, 5}), 1) == 1);
}

TEST_CASE("colour counting matches the exhaustive enumerator") {
  for (int branching = 2; branching <= 3; ++branching) {
    const TreePoset t = build_nary_truncation(branching, branching == 2 ? 3 : 2);
    for_each_maximal_antichain(t, [&](const Antichain& s) {
      if (s.size() > 8) return;
      const auto decomposition = sibling_decomposition(t, s);
      for (int k = 1; k <= 4; ++k)
        CHECK(count_dsc_on_antichain(decomposition, k) ==
              count_colourings_exhaustively(t, s, k));
    });
  }
}

TEST_CASE("one-colour base case at every node") {
  const TreePoset t = build_nary_truncation(2, 3);
  for (int p = 0; p < t.node_count(); ++p) {
    BigInt one_coloured(0);
    for_each_maximal_antichain(t, p, [&](const Antichain& s) {
      one_coloured += count_dsc_on_antichain(sibling_decomposition(t, s), 1);
    });
    CHECK(one_coloured == (t.is_leaf(p) ? 1 : 2));
  }
}

TEST_CASE("census examples") {
  CHECK(census_lower_dsc(2, 1, 2) == 1);
  CHECK(census_lower_dsc(2, 2, 3) == 4);
  CHECK(census_lower_dsc(2, 3, 4) == 16);
}

TEST_CASE("census equals the filtered plain enumeration") {
  for (int branching = 2; branching <= 3; ++branching) {
    const int depth = branching == 2 ? 4 : 3;
    const TreePoset t = build_nary_truncation(branching, depth);
    for (int k = 1; k <= 4; ++k) {
      BigInt direct(0);
      for_each_maximal_antichain(t, [&](const Antichain& s) {
        if (s.size() == 1 && s[0] == TreePoset::root) return;
        for (int v : s)
          if (t.depth[v] == t.truncation_depth) return;
        direct += count_dsc_on_antichain(sibling_decomposition(t, s), k);
      });
      CHECK(direct == census_lower_dsc(branching, k, depth));
    }
  }
}

TEST_CASE("depth bound: k-colourable antichains live at depth <= k") {
  for (int branching = 2; branching <= 3; ++branching) {
    for (int k = 1; k <= 4; ++k) {
      const TreePoset t = build_nary_truncation(branching, k + 2);
      census_lower_dsc(branching, k, k + 2, CensusOptions{},
                       [&](const Antichain& s, const BigInt& weight) {
                         if (weight == 0) return;
                         for (int v : s) CHECK(t.depth[v] <= k);
                       });
    }
  }
}

TEST_CASE("census stabilizes once depth exceeds the colour count") {
  for (int branching = 2; branching <= 3; ++branching)
    for (int k = 1; k <= 4; ++k) {
      const BigInt base = census_lower_dsc(branching, k, k + 1);
      CHECK(base == census_lower_dsc(branching, k, k + 2));
      CHECK(base == census_lower_dsc(branching, k, k + 3));
    }
}

TEST_CASE("census cap aborts") {
  CensusOptions opts;
  opts.max_antichains = 2;
  CHECK_THROWS_AS(census_lower_dsc(2, 3, 4, opts), resource_limit_error);
}
