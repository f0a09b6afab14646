#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ancestry/classic_scheme.hpp"
#include "ancestry/interval_assignment.hpp"
#include "ancestry/label_codec.hpp"

namespace ancestry {

enum class Scheme { kOptimal, kClassic };

std::string_view to_string(Scheme scheme);
std::optional<Scheme> scheme_from_string(std::string_view name);

// A label table read back from CSV. Holds everything the decoder needs; the
// tree itself is never consulted.
//
// CSV columns: node_id,label_hex,scheme,family_size,label_bits
// Node ids must be exactly 0..rows-1 (any order).
class LabelTable {
 public:
  Scheme scheme() const noexcept { return scheme_; }
  std::uint64_t family_size() const noexcept { return family_size_; }
  unsigned label_bits() const noexcept { return label_bits_; }
  std::size_t size() const noexcept {
    return scheme_ == Scheme::kOptimal ? optimal_.size() : classic_.size();
  }

  const std::vector<Label>& optimal_labels() const noexcept { return optimal_; }
  const std::vector<ClassicLabel>& classic_labels() const noexcept { return classic_; }
  // Only meaningful for the optimal scheme.
  const LabelLayout& layout() const { return *layout_; }

  // Throws std::out_of_range for an unknown node id.
  bool decide(NodeId u, NodeId v) const;

  friend LabelTable read_label_csv(std::string_view text);

 private:
  Scheme scheme_ = Scheme::kOptimal;
  std::uint64_t family_size_ = 0;
  unsigned label_bits_ = 0;
  std::optional<LabelLayout> layout_;
  std::vector<Label> optimal_;
  std::vector<ClassicLabel> classic_;
};

std::string write_label_csv(const Labeling& labeling);
std::string write_label_csv(const ClassicLabeling& labeling, std::uint64_t family_size);
// Throws std::invalid_argument with the offending line number.
LabelTable read_label_csv(std::string_view text);

// Columns node_id,i,a,b,lo,hi.
std::string write_interval_csv(const SchemeParams& params, const IntervalAssignment& assignment);

// One "u v" pair per non-empty line.
std::vector<std::pair<NodeId, NodeId>> read_pairs(std::string_view text);

}  // namespace ancestry
