#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ancestry/decorated_tree.hpp"
#include "ancestry/interval.hpp"

namespace ancestry {

// One piece of the heavy-path decomposition below a subtree root: either a
// single heavy node of the root's heavy path or the whole subtree of a light
// child hanging off that path.
struct DecompositionPart {
  NodeId root = kNoParent;
  std::size_t size = 0;

  friend bool operator==(const DecompositionPart&, const DecompositionPart&) = default;
};

// Calls visit(DecompositionPart) for every part below `root`, in increasing
// dfs order of the part roots. Uses the global heavy marks of d.
template <class Visitor>
void for_each_decomposition_part(const DecoratedTree& d, NodeId root, Visitor&& visit) {
  for (NodeId v = root; v != kNoParent;) {
    const NodeId heavy = d.heavy_child(v);
    for (const NodeId c : d.children(v)) {
      if (c != heavy) visit(DecompositionPart{c, d.weight(c)});
    }
    if (heavy != kNoParent) visit(DecompositionPart{heavy, 1});
    v = heavy;
  }
}

std::vector<DecompositionPart> heavy_path_decompose(const DecoratedTree& d, NodeId root);

// A legal interval mapping: one dyadic interval per node, one-to-one, with
// nested intervals along supervisors and dfs-ordered local quasi-ancestors.
struct IntervalAssignment {
  std::vector<DyadicInterval> intervals;  // indexed by node id
  // Number of recursive placement calls; at most the node count.
  std::uint64_t recursion_steps = 0;
  std::uint64_t max_endpoint = 0;
};

// Places the tree into the prefix of [1, 4 n log n]. Linear time.
// Throws std::invalid_argument if the tree has more than n nodes and
// InvariantViolation if a window budget is ever exceeded.
IntervalAssignment assign_intervals(const DecoratedTree& d, const SchemeParams& params);

}  // namespace ancestry
