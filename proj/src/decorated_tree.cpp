#include "ancestry/decorated_tree.hpp"

#include <algorithm>

namespace ancestry {

DecoratedTree decorate(RootedTree tree) {
  DecoratedTree d(std::move(tree));
  const RootedTree& t = d.tree_;
  const std::size_t n = t.size();
  auto& info = d.info_;
  info.assign(n, DecoratedTree::NodeInfo{});
  auto at = [&](NodeId v) -> DecoratedTree::NodeInfo& { return info[static_cast<std::size_t>(v)]; };

  std::vector<NodeId> bfs;
  bfs.reserve(n);
  bfs.push_back(t.root());
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    const NodeId v = bfs[head];
    const std::uint32_t child_depth = at(v).depth + 1;
    for (const NodeId c : t.children(v)) {
      at(c).depth = child_depth;
      bfs.push_back(c);
    }
  }

  // Bottom-up: weights, then the heavy child once all children are final.
  // Children are in id order, so a strict comparison lets the smallest id win ties.
  for (auto it = bfs.rbegin(); it != bfs.rend(); ++it) {
    const NodeId v = *it;
    std::uint32_t weight = 1;
    std::uint32_t best = 0;
    NodeId heavy = kNoParent;
    for (const NodeId c : t.children(v)) {
      const std::uint32_t w = at(c).weight;
      weight += w;
      if (w > best) {
        best = w;
        heavy = c;
      }
    }
    at(v).weight = weight;
    at(v).heavy_child = heavy;
  }

  for (const NodeId v : bfs) {
    const NodeId p = t.parent(v);
    at(v).supervisor = p != kNoParent && at(p).heavy_child == v ? at(p).supervisor : v;
  }

  d.dfs_order_.assign(n, kNoParent);
  std::vector<NodeId> stack{t.root()};
  std::uint32_t next = 0;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    at(v).dfs = next;
    d.dfs_order_[next] = v;
    ++next;
    const NodeId heavy = at(v).heavy_child;
    if (heavy != kNoParent) stack.push_back(heavy);
    const auto kids = t.children(v);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      if (*it != heavy) stack.push_back(*it);
    }
  }
  return d;
}

std::vector<NodeId> local_quasi_ancestors(const DecoratedTree& d, NodeId u) {
  std::vector<NodeId> result;
  const NodeId p = d.parent(u);
  if (p == kNoParent) return result;
  const NodeId top = d.supervisor(p);
  const std::uint32_t bound = d.dfs(u);

  auto consider = [&](NodeId x) {
    if (x != u && x != top && d.dfs(x) <= bound) result.push_back(x);
  };
  for (NodeId w = p;; w = d.parent(w)) {
    consider(w);
    for (const NodeId c : d.children(w)) {
      if (d.is_light(c)) consider(c);
    }
    if (w == top) break;
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace ancestry
