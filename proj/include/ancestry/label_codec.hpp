#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ancestry/decorated_tree.hpp"
#include "ancestry/interval.hpp"
#include "ancestry/interval_assignment.hpp"
#include "ancestry/rooted_tree.hpp"

namespace ancestry {

__extension__ using LabelWord = unsigned __int128;

// Width of the supervisor offset field t. kWide stores t in
// ceil(log log n) + 3 bits, kTight in ceil(log log n) + 2 bits; the latter is
// enough whenever t <= 4 log n - 1.
enum class OffsetField { kWide, kTight };

#if defined(ANCESTRY_TIGHT_OFFSET) && ANCESTRY_TIGHT_OFFSET
inline constexpr OffsetField kDefaultOffsetField = OffsetField::kTight;
#else
inline constexpr OffsetField kDefaultOffsetField = OffsetField::kWide;
#endif

struct BitField {
  unsigned shift = 0;
  unsigned width = 0;
};

// Fixed-width label layout, least significant field first:
//
//   exponent-1 | length-1 | offset-1 | sup_exponent-1 | sup_length-1 | t
//   lambda     | lambda+2 | l+lambda+1 | lambda       | lambda+2     | lambda+3 (or +2)
//
// with l = log n and lambda = ceil(log log n). The first three fields hold
// I(u) = I_{exponent,offset,length}; the last three hold I(sp(u)) relative
// to I(u).
class LabelLayout {
 public:
  explicit LabelLayout(const SchemeParams& params,
                       OffsetField offset_field = kDefaultOffsetField);

  const SchemeParams& params() const noexcept { return params_; }
  OffsetField offset_field() const noexcept { return offset_field_; }

  BitField exponent() const noexcept { return fields_[0]; }
  BitField length() const noexcept { return fields_[1]; }
  BitField offset() const noexcept { return fields_[2]; }
  BitField sup_exponent() const noexcept { return fields_[3]; }
  BitField sup_length() const noexcept { return fields_[4]; }
  BitField sup_delta() const noexcept { return fields_[5]; }

  unsigned total_bits() const noexcept { return total_bits_; }
  std::uint64_t max_delta() const noexcept {
    return (std::uint64_t{1} << sup_delta().width) - 1;
  }
  // Hex digits used by to_hex: total_bits rounded up to a multiple of 16.
  unsigned hex_digits() const noexcept { return (total_bits_ + 15) / 16 * 4; }

  friend bool operator==(const LabelLayout&, const LabelLayout&) = default;

 private:
  SchemeParams params_;
  OffsetField offset_field_;
  BitField fields_[6];
  unsigned total_bits_ = 0;
};

struct Label {
  LabelWord bits = 0;

  friend bool operator==(const Label&, const Label&) = default;
};

// I(u) and I(sp(u)) as recovered from a label.
struct DecodedLabel {
  ClosedInterval own;
  ClosedInterval supervisor;

  friend bool operator==(const DecodedLabel&, const DecodedLabel&) = default;
};

// t = floor(lo(own) / 2^sup.exponent) - sup.offset.
std::uint64_t supervisor_delta(DyadicInterval own, DyadicInterval sup);

// Requires both intervals valid and own contained in sup; throws
// InvariantViolation otherwise or when t does not fit its field.
Label pack(const LabelLayout& layout, DyadicInterval own, DyadicInterval sup);

// Checked decode; throws std::invalid_argument on a malformed label.
DecodedLabel unpack(const LabelLayout& layout, Label label);

// D1: I(v) strictly inside I(sp(u)).
// D2: I(u) precedes I(v), or u is its own supervisor.
constexpr bool decoding_conditions_hold(const DecodedLabel& u, const DecodedLabel& v) {
  const bool nested = strictly_contains(u.supervisor, v.own);
  const bool ordered = precedes(u.own, v.own) || u.own == u.supervisor;
  return nested && ordered;
}

// True iff the node labeled u is a strict ancestor of the node labeled v.
// Constant time using only add, subtract, shift and compare; identical labels
// give false. Unspecified (but total) on labels the marker did not produce.
bool decide_ancestry(const LabelLayout& layout, Label u, Label v);

std::string to_hex(const LabelLayout& layout, Label label);
// Throws std::invalid_argument on bad digits or bits beyond the layout width.
Label label_from_hex(const LabelLayout& layout, std::string_view hex);

struct Labeling {
  LabelLayout layout;
  std::vector<Label> labels;  // indexed by node id
  std::uint64_t max_delta = 0;
  std::uint64_t recursion_steps = 0;
  std::uint64_t max_endpoint = 0;
};

// Labels from an existing decoration and interval assignment.
Labeling label_nodes(const DecoratedTree& d, const IntervalAssignment& assignment,
                     const LabelLayout& layout);

// decorate -> assign_intervals -> pack. Throws std::invalid_argument if the
// tree has more nodes than the family size.
Labeling mark(const RootedTree& tree, const SchemeParams& params,
              OffsetField offset_field = kDefaultOffsetField);

}  // namespace ancestry
