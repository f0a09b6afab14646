#include "ancestry/interval_assignment.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace ancestry {

namespace {

unsigned ceil_log2(std::uint64_t x) {
  return x <= 1 ? 0u : static_cast<unsigned>(std::bit_width(x - 1));
}

// Recursive placement. place(root, size, level, start) maps the subtree of
// `root` (size <= 2^level nodes, root light or size 1) into the window
// [start, start + 4 * level * size - 1].
class Placer {
 public:
  Placer(const DecoratedTree& d, IntervalAssignment& out) : d_(d), out_(out) {}

  void place(NodeId root, std::uint64_t size, unsigned level, std::uint64_t start) {
    ++out_.recursion_steps;
    // Small subtrees drop straight to the lowest level that fits them; the
    // window shrinks to its prefix of matching span.
    const unsigned fitting = std::max(1u, ceil_log2(size));
    if (fitting > level) {
      throw InvariantViolation("subtree of " + std::to_string(size) + " nodes at node " +
                               std::to_string(root) + " placed at level " +
                               std::to_string(level));
    }
    level = fitting;
    const std::uint64_t window_end = start + 4 * level * size - 1;

    if (level == 1) {
      place_base(root, size, start, window_end);
      return;
    }

    const std::uint64_t unit = std::uint64_t{1} << level;
    const std::uint64_t offset = (start + unit - 1) >> level;
    const std::uint64_t child_span = 4 * std::uint64_t{level - 1};
    const std::uint64_t length = (child_span * size + unit - 1) >> level;
    const std::uint64_t lo = offset << level;
    const std::uint64_t hi = (offset + length) << level;
    if (hi > window_end) {
      throw InvariantViolation("interval [" + std::to_string(lo) + "," + std::to_string(hi) +
                               "] for node " + std::to_string(root) + " overruns window [" +
                               std::to_string(start) + "," + std::to_string(window_end) + "]");
    }
    set(root, DyadicInterval{level, offset, length}, hi);

    std::uint64_t cursor = lo;
    for_each_decomposition_part(d_, root, [&](const DecompositionPart& part) {
      place(part.root, part.size, level - 1, cursor);
      cursor += child_span * part.size;
    });
    if (cursor > hi + 1) {
      throw InvariantViolation("child windows of node " + std::to_string(root) +
                               " end at " + std::to_string(cursor - 1) + ", past " +
                               std::to_string(hi));
    }
  }

 private:
  // Level 1 holds subtrees of one or two nodes in a window of 4 or 8 integers.
  void place_base(NodeId root, std::uint64_t size, std::uint64_t start,
                  std::uint64_t window_end) {
    const std::uint64_t offset = (start + 1) >> 1;
    const std::uint64_t root_length = size == 1 ? 1 : 3;
    const std::uint64_t root_hi = (offset + root_length) << 1;
    if (size > 2 || root_hi > window_end) {
      throw InvariantViolation("level-1 placement of a " + std::to_string(size) +
                               "-node subtree at node " + std::to_string(root) +
                               " does not fit window [" + std::to_string(start) + "," +
                               std::to_string(window_end) + "]");
    }
    set(root, DyadicInterval{1, offset, root_length}, root_hi);
    if (size == 2) {
      const NodeId child = d_.heavy_child(root);
      if (child == kNoParent) {
        throw InvariantViolation("two-node subtree at " + std::to_string(root) +
                                 " has no child");
      }
      set(child, DyadicInterval{1, offset + 1, 1}, (offset + 2) << 1);
    }
  }

  void set(NodeId v, DyadicInterval iv, std::uint64_t hi) {
    out_.intervals[static_cast<std::size_t>(v)] = iv;
    out_.max_endpoint = std::max(out_.max_endpoint, hi);
  }

  const DecoratedTree& d_;
  IntervalAssignment& out_;
};

}  // namespace

std::vector<DecompositionPart> heavy_path_decompose(const DecoratedTree& d, NodeId root) {
  std::vector<DecompositionPart> parts;
  for_each_decomposition_part(d, root, [&](const DecompositionPart& p) { parts.push_back(p); });
  return parts;
}

IntervalAssignment assign_intervals(const DecoratedTree& d, const SchemeParams& params) {
  if (d.size() > params.family_size()) {
    throw std::invalid_argument("tree of " + std::to_string(d.size()) +
                                " nodes exceeds family size " +
                                std::to_string(params.family_size()));
  }
  IntervalAssignment out;
  out.intervals.resize(d.size());
  Placer(d, out).place(d.root(), d.size(), params.log_n(), 1);
  if (out.recursion_steps > d.size()) {
    throw InvariantViolation("placement took " + std::to_string(out.recursion_steps) +
                             " steps for " + std::to_string(d.size()) + " nodes");
  }
  return out;
}

}  // namespace ancestry
