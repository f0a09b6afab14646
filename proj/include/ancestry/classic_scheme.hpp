#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ancestry/rooted_tree.hpp"

namespace ancestry {

// DFS interval [dfs(u), largest dfs number in u's subtree].
struct ClassicLabel {
  std::uint64_t dfs_lo = 0;
  std::uint64_t dfs_hi = 0;

  friend bool operator==(const ClassicLabel&, const ClassicLabel&) = default;
};

struct ClassicLabeling {
  // Bits per dfs number, ceil(log2 n) (at least 1).
  unsigned field_bits = 1;
  std::vector<ClassicLabel> labels;  // indexed by node id

  unsigned total_bits() const noexcept { return 2 * field_bits; }
  unsigned hex_digits() const noexcept { return (total_bits() + 15) / 16 * 4; }
};

unsigned classic_field_bits(std::uint64_t family_size);

// Plain preorder with children in id order. Throws std::invalid_argument if
// the tree has more than family_size nodes.
ClassicLabeling classic_mark(const RootedTree& tree, std::uint64_t family_size);

// Strict containment of I(v) in I(u).
constexpr bool classic_decide(ClassicLabel u, ClassicLabel v) {
  return u.dfs_lo <= v.dfs_lo && v.dfs_hi <= u.dfs_hi && !(u == v);
}

// Packed as dfs_lo in the high field and dfs_hi in the low field.
std::string to_hex(const ClassicLabeling& labeling, ClassicLabel label);
ClassicLabel classic_label_from_hex(unsigned field_bits, std::string_view hex);

}  // namespace ancestry
