#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ancestry {

using NodeId = std::int32_t;
inline constexpr NodeId kNoParent = -1;

// Raised by tree construction and parsing. `position` is the 0-based index of
// the offending parent slot (or token, for count errors).
class TreeError : public std::invalid_argument {
 public:
  enum class Kind {
    kMalformedInteger,
    kWrongCount,
    kNoRoot,
    kMultipleRoots,
    kCycle,
    kParentOutOfRange,
  };

  TreeError(Kind kind, std::size_t position, const std::string& what)
      : std::invalid_argument(what), kind_(kind), position_(position) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

// Immutable rooted tree stored as a parent array with a CSR child index.
// Children of every node are kept in increasing id order.
class RootedTree {
 public:
  // Validates the parent array: ids in range, exactly one root, acyclic.
  static RootedTree from_parents(std::vector<NodeId> parents);

  std::size_t size() const noexcept { return parent_.size(); }
  NodeId root() const noexcept { return root_; }
  NodeId parent(NodeId v) const { return parent_[static_cast<std::size_t>(v)]; }
  std::span<const NodeId> parents() const noexcept { return parent_; }

  std::span<const NodeId> children(NodeId v) const {
    const auto i = static_cast<std::size_t>(v);
    return std::span<const NodeId>(child_list_).subspan(
        child_offset_[i], child_offset_[i + 1] - child_offset_[i]);
  }

  bool is_leaf(NodeId v) const { return children(v).empty(); }

  friend bool operator==(const RootedTree& a, const RootedTree& b) {
    return a.parent_ == b.parent_;
  }

 private:
  RootedTree() = default;

  std::vector<NodeId> parent_;
  std::vector<std::uint32_t> child_offset_;
  std::vector<NodeId> child_list_;
  NodeId root_ = kNoParent;
};

// Text format: node count on the first line, parent ids on the second, -1 for
// the root.
RootedTree parse_parent_array(std::string_view text);
std::string serialize_parent_array(const RootedTree& tree);

// Ground truth: u is a strict ancestor of v iff u appears on v's parent chain.
// Walks parent links only.
bool oracle_is_ancestor(const RootedTree& tree, NodeId u, NodeId v);

}  // namespace ancestry
