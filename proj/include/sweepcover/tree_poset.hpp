#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sweepcover/combinatorics.hpp"

namespace sweepcover {

// Finite rooted tree, node 0 is the root. Children are ordered; depth(root) = 0.
struct TreePoset {
  std::vector<int> parent;                 // -1 at the root
  std::vector<std::vector<int>> children;  // ordered child lists
  std::vector<int> depth;
  int truncation_depth = 0;  // depth of the deepest level (the frontier)

  static constexpr int root = 0;

  int node_count() const { return static_cast<int>(parent.size()); }
  bool is_leaf(int v) const { return children[v].empty(); }
};

/// Builds a tree from a parent vector (parents[v] == -1 exactly at the root,
/// which must be node 0; parents must point to lower indices). Used for
/// irregular test trees.
TreePoset make_tree(const std::vector<int>& parents);

/// Complete n-ary tree with every leaf at `depth`. Throws resource_limit_error
/// if the node count would exceed max_nodes.
TreePoset build_nary_truncation(int branching, int depth, std::size_t max_nodes = 1'000'000);

// Antichain of a TreePoset as a sorted list of node ids.
using Antichain = std::vector<int>;

bool is_antichain(const TreePoset& tree, const Antichain& s);

// Maximal means every leaf-to-root path of the tree meets the set.
bool is_maximal_antichain(const TreePoset& tree, const Antichain& s);

/// Visits every maximal antichain of the down-set of `node` exactly once
/// (sorted node ids). Throws resource_limit_error past max_antichains.
/// Returns the number visited.
std::uint64_t for_each_maximal_antichain(const TreePoset& tree, int node,
                                         const std::function<void(const Antichain&)>& visit,
                                         std::uint64_t max_antichains = 10'000'000);

std::uint64_t for_each_maximal_antichain(const TreePoset& tree,
                                         const std::function<void(const Antichain&)>& visit,
                                         std::uint64_t max_antichains = 10'000'000);

/// Number of maximal antichains of the down-set of `node`, by the recursion
/// |MA(v)| = 1 for leaves and 1 + prod_children |MA(child)| otherwise.
BigInt count_maximal_antichains(const TreePoset& tree, int node);

// Partition of an antichain into maximal sibling groups, ordered by minimal
// node id; two elements share a group iff they share a parent.
struct SiblingDecomposition {
  std::vector<std::vector<int>> groups;
};

SiblingDecomposition sibling_decomposition(const TreePoset& tree, const Antichain& s);

/// Number of colourings of the decomposed antichain with exactly k colours,
/// counted up to relabelling, sibling groups using pairwise-disjoint colour
/// sets: the coefficient of z^k in prod_i B_{|Y_i|}(z).
BigInt count_dsc_on_antichain(const SiblingDecomposition& decomposition, int k);

struct CensusOptions {
  std::size_t max_nodes = 1'000'000;
  std::uint64_t max_antichains = 10'000'000;
};

/// Ground-truth census of lower k-coloured decorated sweep covers: the sum of
/// count_dsc_on_antichain over every maximal antichain of the depth-truncated
/// n-ary tree that is not the root singleton and touches no frontier node.
/// For depth >= k+1 this equals the count in the infinite tree. Branches that
/// would exceed k sibling groups are skipped (they admit no k-colouring).
BigInt census_lower_dsc(int branching, int colours, int depth, const CensusOptions& options = {});

/// Instrumented census: additionally reports every enumerated antichain with
/// its exact colouring count (antichains pruned by the sibling-group budget
/// contribute zero and are not reported).
BigInt census_lower_dsc(int branching, int colours, int depth, const CensusOptions& options,
                        const std::function<void(const Antichain&, const BigInt&)>& visit);

}  // namespace sweepcover
