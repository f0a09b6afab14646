#include "ancestry/classic_scheme.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ancestry {

unsigned classic_field_bits(std::uint64_t family_size) {
  if (family_size == 0) throw std::invalid_argument("family size must be positive");
  if (family_size <= 2) return 1;
  return static_cast<unsigned>(std::bit_width(family_size - 1));
}

ClassicLabeling classic_mark(const RootedTree& tree, std::uint64_t family_size) {
  if (tree.size() > family_size) {
    throw std::invalid_argument("tree of " + std::to_string(tree.size()) +
                                " nodes exceeds family size " + std::to_string(family_size));
  }
  ClassicLabeling out;
  out.field_bits = classic_field_bits(family_size);
  if (out.field_bits > 63) throw std::invalid_argument("family size too large");
  out.labels.resize(tree.size());

  // Preorder numbering, then subtree maxima in reverse preorder.
  std::vector<NodeId> order;
  order.reserve(tree.size());
  std::vector<NodeId> stack{tree.root()};
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    out.labels[static_cast<std::size_t>(v)].dfs_lo = order.size();
    order.push_back(v);
    const auto kids = tree.children(v);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  for (auto& label : out.labels) label.dfs_hi = label.dfs_lo;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId p = tree.parent(*it);
    if (p == kNoParent) continue;
    auto& hi = out.labels[static_cast<std::size_t>(p)].dfs_hi;
    hi = std::max(hi, out.labels[static_cast<std::size_t>(*it)].dfs_hi);
  }
  return out;
}

std::string to_hex(const ClassicLabeling& labeling, ClassicLabel label) {
  static constexpr char kDigits[] = "0123456789abcdef";
  __extension__ using u128 = unsigned __int128;
  u128 bits = (static_cast<u128>(label.dfs_lo) << labeling.field_bits) | label.dfs_hi;
  std::string out(labeling.hex_digits(), '0');
  for (auto it = out.rbegin(); it != out.rend(); ++it) {
    *it = kDigits[static_cast<unsigned>(bits & 0xf)];
    bits >>= 4;
  }
  return out;
}

ClassicLabel classic_label_from_hex(unsigned field_bits, std::string_view hex) {
  __extension__ using u128 = unsigned __int128;
  if (hex.empty() || hex.size() > 32 || field_bits == 0 || field_bits > 63) {
    throw std::invalid_argument("bad classic label '" + std::string(hex) + "'");
  }
  u128 bits = 0;
  for (const char ch : hex) {
    unsigned digit = 0;
    if (ch >= '0' && ch <= '9') {
      digit = static_cast<unsigned>(ch - '0');
    } else if (ch >= 'a' && ch <= 'f') {
      digit = static_cast<unsigned>(ch - 'a' + 10);
    } else {
      throw std::invalid_argument("bad hex digit in label '" + std::string(hex) + "'");
    }
    bits = (bits << 4) | digit;
  }
  if ((bits >> (2 * field_bits)) != 0) {
    throw std::invalid_argument("classic label '" + std::string(hex) + "' too wide");
  }
  const u128 mask = (u128{1} << field_bits) - 1;
  ClassicLabel label{static_cast<std::uint64_t>(bits >> field_bits),
                     static_cast<std::uint64_t>(bits & mask)};
  if (label.dfs_lo > label.dfs_hi) {
    throw std::invalid_argument("classic label '" + std::string(hex) + "' has lo > hi");
  }
  return label;
}

}  // namespace ancestry
