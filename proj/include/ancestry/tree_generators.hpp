#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ancestry/rooted_tree.hpp"

namespace ancestry {

enum class TreeFamily {
  kPath,
  kStar,
  kCaterpillar,
  kCompleteBinary,
  kBroom,
  kRandomRecursive,
};

std::string_view to_string(TreeFamily family);
std::optional<TreeFamily> tree_family_from_string(std::string_view name);

struct TreeFamilySpec {
  TreeFamily family = TreeFamily::kPath;
  std::size_t size = 1;
  std::uint64_t seed = 0;
  // Broom only: path_count * path_length + 1 must equal size.
  std::size_t path_count = 0;
  std::size_t path_length = 0;
};

// Deterministic in (family, size, seed, broom parameters).
//   path:             parent[i] = i - 1
//   star:             parent[i] = 0
//   caterpillar:      spine 0..ceil(size/2)-1, leaf i hangs off spine node i - spine
//   complete-binary:  parent[i] = (i - 1) / 2
//   broom:            root plus path_count paths of path_length nodes
//   random-recursive: parent[i] uniform in [0, i - 1] (mt19937_64 seeded by seed)
RootedTree generate_tree(const TreeFamilySpec& spec);

inline constexpr std::size_t kDefaultEnumerationCap = 9;

// Every unlabeled rooted tree with exactly `size` nodes, once each, built from
// canonical level sequences in preorder. Throws std::out_of_range above `cap`.
std::vector<RootedTree> enumerate_rooted_trees(std::size_t size,
                                               std::size_t cap = kDefaultEnumerationCap);

}  // namespace ancestry
