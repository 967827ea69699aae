#include "sweepcover/tree_poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "sweepcover/errors.hpp"

namespace sweepcover {

TreePoset make_tree(const std::vector<int>& parents) {
  if (parents.empty() || parents[0] != -1)
    throw std::invalid_argument("make_tree: node 0 must be the root");
  TreePoset t;
  const int n = static_cast<int>(parents.size());
  t.parent = parents;
  t.children.resize(n);
  t.depth.resize(n);
  for (int v = 1; v < n; ++v) {
    const int p = parents[v];
    if (p < 0 || p >= v) throw std::invalid_argument("make_tree: parents must point to lower ids");
    t.children[p].push_back(v);
    t.depth[v] = t.depth[p] + 1;
    t.truncation_depth = std::max(t.truncation_depth, t.depth[v]);
  }
  return t;
}

TreePoset build_nary_truncation(int branching, int depth, std::size_t max_nodes) {
  if (branching < 1) throw std::invalid_argument("build_nary_truncation: branching must be >= 1");
  if (depth < 0) throw std::invalid_argument("build_nary_truncation: depth must be >= 0");

  BigInt count(1), level(1);
  for (int d = 0; d < depth; ++d) {
    level *= branching;
    count += level;
  }
  if (count > static_cast<unsigned long>(max_nodes))
    throw resource_limit_error("build_nary_truncation: node count " + count.get_str() +
                               " exceeds limit");

  TreePoset t;
  const std::size_t n = count.get_ui();
  t.parent.assign(n, -1);
  t.children.resize(n);
  t.depth.assign(n, 0);
  t.truncation_depth = depth;

  std::size_t next = 1;
  for (std::size_t v = 0; v < n && next < n; ++v) {
    for (int c = 0; c < branching && next < n; ++c, ++next) {
      t.parent[next] = static_cast<int>(v);
      t.children[v].push_back(static_cast<int>(next));
      t.depth[next] = t.depth[v] + 1;
    }
  }
  return t;
}

bool is_antichain(const TreePoset& tree, const Antichain& s) {
  std::vector<char> in_set(tree.parent.size(), 0);
  for (int v : s) in_set[v] = 1;
  for (int v : s) {
    for (int a = tree.parent[v]; a != -1; a = tree.parent[a])
      if (in_set[a]) return false;
  }
  return true;
}

bool is_maximal_antichain(const TreePoset& tree, const Antichain& s) {
  if (!is_antichain(tree, s)) return false;
  std::vector<char> in_set(tree.parent.size(), 0);
  for (int v : s) in_set[v] = 1;
  for (int v = 0; v < tree.node_count(); ++v) {
    if (!tree.is_leaf(v)) continue;
    bool hit = false;
    for (int a = v; a != -1; a = tree.parent[a])
      if (in_set[a]) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

std::uint64_t for_each_maximal_antichain(const TreePoset& tree, int node,
                                         const std::function<void(const Antichain&)>& visit,
                                         std::uint64_t max_antichains) {
  Antichain buffer;
  Antichain sorted;
  std::uint64_t count = 0;

  const std::function<void()> emit = [&] {
    if (++count > max_antichains)
      throw resource_limit_error("for_each_maximal_antichain: enumeration cap exceeded");
    sorted = buffer;
    std::sort(sorted.begin(), sorted.end());
    visit(sorted);
  };

  // An antichain of the subtree at v either is {v} or splits into one
  // antichain per child subtree.
  std::function<void(int, const std::function<void()>&)> gen =
      [&](int v, const std::function<void()>& done) {
        buffer.push_back(v);
        done();
        buffer.pop_back();
        if (tree.is_leaf(v)) return;
        std::function<void(std::size_t)> product = [&](std::size_t i) {
          if (i == tree.children[v].size()) {
            done();
            return;
          }
          gen(tree.children[v][i], [&, i] { product(i + 1); });
        };
        product(0);
      };

  gen(node, emit);
  return count;
}

std::uint64_t for_each_maximal_antichain(const TreePoset& tree,
                                         const std::function<void(const Antichain&)>& visit,
                                         std::uint64_t max_antichains) {
  return for_each_maximal_antichain(tree, TreePoset::root, visit, max_antichains);
}

BigInt count_maximal_antichains(const TreePoset& tree, int node) {
  if (tree.is_leaf(node)) return BigInt(1);
  BigInt product(1);
  for (int c : tree.children[node]) product *= count_maximal_antichains(tree, c);
  return product + 1;
}

SiblingDecomposition sibling_decomposition(const TreePoset& tree, const Antichain& s) {
  std::map<int, std::vector<int>> by_parent;
  for (int v : s) by_parent[tree.parent[v]].push_back(v);
  std::vector<std::vector<int>> groups;
  groups.reserve(by_parent.size());
  for (auto& [p, members] : by_parent) {
    std::sort(members.begin(), members.end());
    groups.push_back(std::move(members));
  }
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return SiblingDecomposition{std::move(groups)};
}

namespace {

// acc *= B_u(z), truncated at the accumulator's length.
void multiply_touchard(std::vector<BigInt>& acc, unsigned u) {
  const IntPolynomial b = touchard(u);
  std::vector<BigInt> out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (acc[i] == 0) continue;
    const std::size_t jmax = std::min(b.degree(), acc.size() - 1 - i);
    for (std::size_t j = 0; j <= jmax; ++j) out[i + j] += acc[i] * b.coeff(j);
  }
  acc = std::move(out);
}

}  // namespace

BigInt count_dsc_on_antichain(const SiblingDecomposition& decomposition, int k) {
  if (k < 0) return BigInt(0);
  std::vector<BigInt> acc(static_cast<std::size_t>(k) + 1);
  acc[0] = 1;
  for (const auto& group : decomposition.groups)
    multiply_touchard(acc, static_cast<unsigned>(group.size()));
  return acc[static_cast<std::size_t>(k)];
}

BigInt census_lower_dsc(int branching, int colours, int depth, const CensusOptions& options,
                        const std::function<void(const Antichain&, const BigInt&)>& visit) {
  if (branching < 2) throw std::invalid_argument("census_lower_dsc: branching must be >= 2");
  if (colours < 1) throw std::invalid_argument("census_lower_dsc: colours must be >= 1");
  if (depth < 1) throw std::invalid_argument("census_lower_dsc: depth must be >= 1");
  if (branching > 30) throw std::invalid_argument("census_lower_dsc: branching too large");

  const TreePoset tree = build_nary_truncation(branching, depth, options.max_nodes);
  const int k = colours;

  BigInt total(0);
  std::uint64_t visited = 0;

  // State: nodes whose subtrees still need covering (the node itself is
  // excluded from the antichain), the elements chosen so far, the partial
  // product of Touchard polynomials over the sibling groups formed so far
  // (truncated at z^k), and the group count. Every pending subtree will
  // contribute at least one further group, which bounds the search.
  std::vector<int> pending = {TreePoset::root};
  std::vector<int> elements;
  std::vector<BigInt> poly(static_cast<std::size_t>(k) + 1);
  poly[0] = 1;

  std::function<void(int)> explore = [&](int groups) {
    if (pending.empty()) {
      if (++visited > options.max_antichains)
        throw resource_limit_error("census_lower_dsc: antichain cap exceeded");
      total += poly[static_cast<std::size_t>(k)];
      if (visit) {
        Antichain sorted = elements;
        std::sort(sorted.begin(), sorted.end());
        visit(sorted, poly[static_cast<std::size_t>(k)]);
      }
      return;
    }
    const int v = pending.back();
    pending.pop_back();

    const auto& ch = tree.children[v];
    const int nc = static_cast<int>(ch.size());
    for (unsigned mask = 0; mask < (1u << nc); ++mask) {
      bool feasible = true;
      int recursed = 0;
      for (int i = 0; i < nc; ++i) {
        const int c = ch[i];
        if (mask & (1u << i)) {
          if (tree.depth[c] == tree.truncation_depth) {  // frontier nodes are excluded
            feasible = false;
            break;
          }
        } else {
          if (tree.is_leaf(c)) {  // nothing below to cover the path through c
            feasible = false;
            break;
          }
          ++recursed;
        }
      }
      if (!feasible) continue;

      const int included = std::popcount(mask);
      const int new_groups = groups + (included > 0 ? 1 : 0);
      if (new_groups + recursed + static_cast<int>(pending.size()) > k) continue;

      const std::vector<BigInt> saved = poly;
      if (included > 0) multiply_touchard(poly, static_cast<unsigned>(included));
      const std::size_t pending_mark = pending.size();
      const std::size_t element_mark = elements.size();
      for (int i = 0; i < nc; ++i) {
        if (mask & (1u << i))
          elements.push_back(ch[i]);
        else
          pending.push_back(ch[i]);
      }

      explore(new_groups);

      pending.resize(pending_mark);
      elements.resize(element_mark);
      poly = saved;
    }
    pending.push_back(v);
  };

  explore(0);
  return total;
}

BigInt census_lower_dsc(int branching, int colours, int depth, const CensusOptions& options) {
  return census_lower_dsc(branching, colours, depth, options, nullptr);
}

}  // namespace sweepcover
