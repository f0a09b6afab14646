#include "ancestry/tree_generators.hpp"

#include <array>
#include <random>
#include <stdexcept>

namespace ancestry {

namespace {

constexpr std::array<std::pair<TreeFamily, std::string_view>, 6> kFamilyNames{{
    {TreeFamily::kPath, "path"},
    {TreeFamily::kStar, "star"},
    {TreeFamily::kCaterpillar, "caterpillar"},
    {TreeFamily::kCompleteBinary, "complete-binary"},
    {TreeFamily::kBroom, "broom"},
    {TreeFamily::kRandomRecursive, "random-recursive"},
}};

// Uniform integer in [0, bound) from a 64-bit draw. Multiply-shift keeps the
// mapping identical across standard libraries, unlike uniform_int_distribution.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  __extension__ using u128 = unsigned __int128;
  return static_cast<std::uint64_t>((static_cast<u128>(rng()) * bound) >> 64);
}

// Parent array of a preorder level sequence (root at level 1).
std::vector<NodeId> parents_from_levels(const std::vector<std::size_t>& levels) {
  std::vector<NodeId> parents(levels.size(), kNoParent);
  std::vector<NodeId> last_at_level(levels.size() + 2, kNoParent);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (i > 0) parents[i] = last_at_level[levels[i] - 1];
    last_at_level[levels[i]] = static_cast<NodeId>(i);
  }
  return parents;
}

}  // namespace

std::string_view to_string(TreeFamily family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "unknown";
}

std::optional<TreeFamily> tree_family_from_string(std::string_view name) {
  for (const auto& [f, n] : kFamilyNames) {
    if (n == name) return f;
  }
  return std::nullopt;
}

RootedTree generate_tree(const TreeFamilySpec& spec) {
  const std::size_t n = spec.size;
  if (n == 0) throw std::invalid_argument("tree size must be positive");

  std::vector<NodeId> parents(n, kNoParent);
  switch (spec.family) {
    case TreeFamily::kPath:
      for (std::size_t i = 1; i < n; ++i) parents[i] = static_cast<NodeId>(i - 1);
      break;
    case TreeFamily::kStar:
      for (std::size_t i = 1; i < n; ++i) parents[i] = 0;
      break;
    case TreeFamily::kCaterpillar: {
      const std::size_t spine = (n + 1) / 2;
      for (std::size_t i = 1; i < spine; ++i) parents[i] = static_cast<NodeId>(i - 1);
      for (std::size_t i = spine; i < n; ++i) parents[i] = static_cast<NodeId>(i - spine);
      break;
    }
    case TreeFamily::kCompleteBinary:
      for (std::size_t i = 1; i < n; ++i) parents[i] = static_cast<NodeId>((i - 1) / 2);
      break;
    case TreeFamily::kBroom: {
      if (spec.path_count == 0 || spec.path_length == 0 ||
          spec.path_count * spec.path_length + 1 != n) {
        throw std::invalid_argument(
            "broom requires path_count * path_length + 1 == size (got " +
            std::to_string(spec.path_count) + " * " + std::to_string(spec.path_length) +
            " + 1 != " + std::to_string(n) + ")");
      }
      std::size_t next = 1;
      for (std::size_t p = 0; p < spec.path_count; ++p) {
        for (std::size_t j = 0; j < spec.path_length; ++j, ++next) {
          parents[next] = j == 0 ? 0 : static_cast<NodeId>(next - 1);
        }
      }
      break;
    }
    case TreeFamily::kRandomRecursive: {
      std::mt19937_64 rng(spec.seed);
      for (std::size_t i = 1; i < n; ++i) parents[i] = static_cast<NodeId>(bounded(rng, i));
      break;
    }
  }
  return RootedTree::from_parents(std::move(parents));
}

std::vector<RootedTree> enumerate_rooted_trees(std::size_t size, std::size_t cap) {
  if (size == 0) throw std::invalid_argument("enumeration size must be positive");
  if (size > cap) {
    throw std::out_of_range("enumeration size " + std::to_string(size) + " exceeds cap " +
                            std::to_string(cap));
  }

  // Beyer-Hedetniemi successor on canonical level sequences, starting from
  // the path (1, 2, ..., n) and ending at the star (1, 2, 2, ..., 2).
  std::vector<std::size_t> levels(size);
  for (std::size_t i = 0; i < size; ++i) levels[i] = i + 1;

  std::vector<RootedTree> trees;
  while (true) {
    trees.push_back(RootedTree::from_parents(parents_from_levels(levels)));
    std::size_t p = size;
    while (p > 0 && levels[p - 1] <= 2) --p;
    if (p <= 1) break;  // star reached (or single node / single edge)
    const std::size_t pi = p - 1;
    std::size_t qi = pi;
    while (levels[qi] != levels[pi] - 1) --qi;
    const std::size_t shift = pi - qi;
    for (std::size_t i = pi; i < size; ++i) levels[i] = levels[i - shift];
  }
  return trees;
}

}  // namespace ancestry
