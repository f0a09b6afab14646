#include "ancestry/rooted_tree.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

namespace ancestry {

namespace {

std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  return tokens;
}

template <class Int>
bool parse_int(std::string_view token, Int& out) {
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

// Reports the cycle reachable from `start` by following parent links.
[[noreturn]] void report_cycle(std::span<const NodeId> parents, NodeId start) {
  std::vector<char> seen(parents.size(), 0);
  NodeId v = start;
  while (!seen[static_cast<std::size_t>(v)]) {
    seen[static_cast<std::size_t>(v)] = 1;
    v = parents[static_cast<std::size_t>(v)];
  }
  // v is on the cycle; walk it once more to print it.
  std::ostringstream msg;
  msg << "cycle detected: " << v;
  NodeId smallest = v;
  for (NodeId w = parents[static_cast<std::size_t>(v)]; w != v;
       w = parents[static_cast<std::size_t>(w)]) {
    msg << " -> " << w;
    smallest = std::min(smallest, w);
  }
  msg << " -> " << v;
  throw TreeError(TreeError::Kind::kCycle, static_cast<std::size_t>(smallest), msg.str());
}

}  // namespace

RootedTree RootedTree::from_parents(std::vector<NodeId> parents) {
  const std::size_t n = parents.size();
  if (n == 0) {
    throw TreeError(TreeError::Kind::kWrongCount, 0, "tree must have at least one node");
  }
  if (n > static_cast<std::size_t>(std::numeric_limits<NodeId>::max())) {
    throw TreeError(TreeError::Kind::kWrongCount, 0, "tree too large for 32-bit node ids");
  }

  RootedTree tree;
  std::vector<std::uint32_t> child_count(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const NodeId p = parents[v];
    if (p == kNoParent) {
      if (tree.root_ != kNoParent) {
        throw TreeError(TreeError::Kind::kMultipleRoots, v,
                        "multiple roots: nodes " + std::to_string(tree.root_) + " and " +
                            std::to_string(v));
      }
      tree.root_ = static_cast<NodeId>(v);
      continue;
    }
    if (p < 0 || static_cast<std::size_t>(p) >= n) {
      throw TreeError(TreeError::Kind::kParentOutOfRange, v,
                      "parent id " + std::to_string(p) + " of node " + std::to_string(v) +
                          " out of range [0, " + std::to_string(n - 1) + "]");
    }
    if (static_cast<std::size_t>(p) == v) report_cycle(parents, static_cast<NodeId>(v));
    ++child_count[static_cast<std::size_t>(p)];
  }
  if (tree.root_ == kNoParent) {
    throw TreeError(TreeError::Kind::kNoRoot, 0, "no root: no node has parent -1");
  }

  tree.child_offset_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    tree.child_offset_[v + 1] = tree.child_offset_[v] + child_count[v];
  }
  tree.child_list_.resize(n - 1);
  std::vector<std::uint32_t> fill(tree.child_offset_.begin(), tree.child_offset_.end() - 1);
  for (std::size_t v = 0; v < n; ++v) {
    const NodeId p = parents[v];
    if (p != kNoParent) tree.child_list_[fill[static_cast<std::size_t>(p)]++] = static_cast<NodeId>(v);
  }

  // With n-1 edges and a single root, the tree is valid iff every node is
  // reachable from the root.
  std::vector<char> reached(n, 0);
  std::vector<NodeId> stack{tree.root_};
  reached[static_cast<std::size_t>(tree.root_)] = 1;
  std::size_t reached_count = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    const auto i = static_cast<std::size_t>(v);
    for (std::uint32_t k = tree.child_offset_[i]; k < tree.child_offset_[i + 1]; ++k) {
      const NodeId c = tree.child_list_[k];
      reached[static_cast<std::size_t>(c)] = 1;
      ++reached_count;
      stack.push_back(c);
    }
  }
  if (reached_count != n) {
    const auto it = std::find(reached.begin(), reached.end(), 0);
    report_cycle(parents, static_cast<NodeId>(it - reached.begin()));
  }

  tree.parent_ = std::move(parents);
  return tree;
}

RootedTree parse_parent_array(std::string_view text) {
  const auto tokens = split_tokens(text);
  if (tokens.empty()) {
    throw TreeError(TreeError::Kind::kWrongCount, 0, "empty input: expected node count");
  }
  std::int64_t count = 0;
  if (!parse_int(tokens[0], count)) {
    throw TreeError(TreeError::Kind::kMalformedInteger, 0,
                    "malformed node count '" + std::string(tokens[0]) + "'");
  }
  if (count <= 0) {
    throw TreeError(TreeError::Kind::kWrongCount, 0, "node count must be positive");
  }
  if (count > std::numeric_limits<NodeId>::max()) {
    throw TreeError(TreeError::Kind::kWrongCount, 0, "node count too large");
  }
  const auto n = static_cast<std::size_t>(count);
  if (tokens.size() - 1 != n) {
    throw TreeError(TreeError::Kind::kWrongCount, std::min(tokens.size() - 1, n),
                    "expected " + std::to_string(n) + " parent ids, found " +
                        std::to_string(tokens.size() - 1));
  }
  std::vector<NodeId> parents(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!parse_int(tokens[v + 1], parents[v])) {
      throw TreeError(TreeError::Kind::kMalformedInteger, v,
                      "malformed parent id '" + std::string(tokens[v + 1]) + "' at node " +
                          std::to_string(v));
    }
  }
  return RootedTree::from_parents(std::move(parents));
}

std::string serialize_parent_array(const RootedTree& tree) {
  std::string out = std::to_string(tree.size());
  out += '\n';
  bool first = true;
  for (const NodeId p : tree.parents()) {
    if (!first) out += ' ';
    out += std::to_string(p);
    first = false;
  }
  return out;
}

bool oracle_is_ancestor(const RootedTree& tree, NodeId u, NodeId v) {
  if (u == v) return false;
  for (NodeId w = tree.parent(v); w != kNoParent; w = tree.parent(w)) {
    if (w == u) return true;
  }
  return false;
}

}  // namespace ancestry
