#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ancestry/rooted_tree.hpp"
#include "ancestry/tree_generators.hpp"

namespace ancestry::testing {

inline RootedTree tree_of(std::vector<NodeId> parents) {
  return RootedTree::from_parents(std::move(parents));
}

inline RootedTree e5() { return tree_of({-1, 0, 0, 1, 1}); }

// AHU canonical string of the subtree at v.
inline std::string canonical_form(const RootedTree& t, NodeId v) {
  std::vector<std::string> parts;
  for (const NodeId c : t.children(v)) parts.push_back(canonical_form(t, c));
  std::sort(parts.begin(), parts.end());
  std::string s = "(";
  for (const auto& p : parts) s += p;
  return s + ")";
}

inline std::string canonical_form(const RootedTree& t) { return canonical_form(t, t.root()); }

// Counts unlabeled rooted trees of `size` nodes by trying every parent array
// with parent[i] < i and deduplicating canonical forms.
inline std::size_t brute_force_tree_count(std::size_t size) {
  std::set<std::string> seen;
  std::vector<NodeId> parents(size, 0);
  parents[0] = kNoParent;
  for (;;) {
    seen.insert(canonical_form(tree_of(parents)));
    std::size_t i = size - 1;
    while (i >= 1) {
      if (parents[i] + 1 < static_cast<NodeId>(i)) {
        ++parents[i];
        break;
      }
      parents[i] = 0;
      --i;
    }
    if (i == 0) return seen.size();
  }
}

// Reflexive-free ancestor relation by transitive closure over parent links.
inline std::vector<std::vector<bool>> ancestor_matrix(const RootedTree& t) {
  const std::size_t n = t.size();
  std::vector<std::vector<bool>> anc(n, std::vector<bool>(n, false));
  bool changed = true;
  for (std::size_t v = 0; v < n; ++v) {
    const NodeId p = t.parent(static_cast<NodeId>(v));
    if (p != kNoParent) anc[static_cast<std::size_t>(p)][v] = true;
  }
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (anc[a][b])
          for (std::size_t c = 0; c < n; ++c)
            if (anc[b][c] && !anc[a][c]) anc[a][c] = changed = true;
  }
  return anc;
}

// Random tree whose node ids are shuffled so the root is not always 0 and
// parents may have larger ids than children.
inline RootedTree random_shuffled_tree(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<NodeId> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<NodeId>(i);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<NodeId> parents(n, kNoParent);
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    // Mix in occasional long chains.
    const std::size_t p = rng() % 4 == 0 ? i - 1 : pick(rng);
    parents[static_cast<std::size_t>(perm[i])] = perm[p];
  }
  return tree_of(parents);
}

inline std::vector<RootedTree> corpus_up_to(std::size_t max_size) {
  std::vector<RootedTree> all;
  for (std::size_t s = 1; s <= max_size; ++s) {
    for (auto& t : enumerate_rooted_trees(s)) all.push_back(std::move(t));
  }
  return all;
}

}  // namespace ancestry::testing
