#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ancestry/rooted_tree.hpp"

namespace ancestry {

// Structural decorations used by the marker.
//
// Heavy child: the child of maximal weight, smallest id on ties. The root and
// every non-heavy node are light.
// DFS numbers: preorder from the root visiting light children (in id order)
// before the heavy child.
// Supervisor: the deepest light node on the path from a node to the root;
// a light node supervises itself.
class DecoratedTree {
 public:
  const RootedTree& tree() const noexcept { return tree_; }
  std::size_t size() const noexcept { return tree_.size(); }
  NodeId root() const noexcept { return tree_.root(); }
  NodeId parent(NodeId v) const { return tree_.parent(v); }
  std::span<const NodeId> children(NodeId v) const { return tree_.children(v); }

  std::uint32_t weight(NodeId v) const { return info_[idx(v)].weight; }
  bool is_light(NodeId v) const { return info_[idx(v)].supervisor == v; }
  bool is_heavy(NodeId v) const { return !is_light(v); }
  // kNoParent for leaves.
  NodeId heavy_child(NodeId v) const { return info_[idx(v)].heavy_child; }
  std::uint32_t dfs(NodeId v) const { return info_[idx(v)].dfs; }
  // Node with the given dfs number.
  NodeId node_at_dfs(std::uint32_t number) const { return dfs_order_[number]; }
  NodeId supervisor(NodeId v) const { return info_[idx(v)].supervisor; }
  std::uint32_t depth(NodeId v) const { return info_[idx(v)].depth; }

  friend DecoratedTree decorate(RootedTree tree);

 private:
  explicit DecoratedTree(RootedTree tree) : tree_(std::move(tree)) {}

  static std::size_t idx(NodeId v) { return static_cast<std::size_t>(v); }

  // One record per node so that a random node access touches one cache line.
  struct NodeInfo {
    std::uint32_t weight = 1;
    NodeId heavy_child = kNoParent;
    std::uint32_t dfs = 0;
    NodeId supervisor = kNoParent;
    std::uint32_t depth = 0;
  };

  RootedTree tree_;
  std::vector<NodeInfo> info_;
  std::vector<NodeId> dfs_order_;
};

// Linear time; no recursion, so arbitrarily deep trees are fine.
DecoratedTree decorate(RootedTree tree);

// lqa(u): nodes of the path from parent(u) up to sp(parent(u)) together with
// their light children, minus u, minus sp(parent(u)), minus every node with a
// dfs number above dfs(u). Empty for the root. Sorted by node id.
std::vector<NodeId> local_quasi_ancestors(const DecoratedTree& d, NodeId u);

}  // namespace ancestry
