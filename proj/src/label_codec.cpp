#include "ancestry/label_codec.hpp"

#include <algorithm>

#include "ancestry/decoder_audit.hpp"
#include "ancestry/label_decoder.hpp"

namespace ancestry {

namespace {

LabelWord extract(LabelWord bits, BitField f) {
  return (bits >> f.shift) & ((LabelWord{1} << f.width) - 1);
}

LabelWord place(LabelWord value, BitField f) { return value << f.shift; }

}  // namespace

LabelLayout::LabelLayout(const SchemeParams& params, OffsetField offset_field)
    : params_(params), offset_field_(offset_field) {
  const unsigned l = params.log_n();
  const unsigned lambda = params.loglog_n();
  const unsigned widths[6] = {
      lambda,
      lambda + 2,
      l + lambda + 1,
      lambda,
      lambda + 2,
      offset_field == OffsetField::kWide ? lambda + 3 : lambda + 2,
  };
  unsigned shift = 0;
  for (int k = 0; k < 6; ++k) {
    fields_[k] = BitField{shift, widths[k]};
    shift += widths[k];
  }
  total_bits_ = shift;
}

std::uint64_t supervisor_delta(DyadicInterval own, DyadicInterval sup) {
  const std::uint64_t lo = own.offset << own.exponent;
  return (lo >> sup.exponent) - sup.offset;
}

Label pack(const LabelLayout& layout, DyadicInterval own, DyadicInterval sup) {
  const SchemeParams& params = layout.params();
  if (!is_valid(params, own) || !is_valid(params, sup)) {
    throw InvariantViolation("pack: interval parameters out of range");
  }
  const ClosedInterval own_iv{own.offset << own.exponent, (own.offset + own.length) << own.exponent};
  const ClosedInterval sup_iv{sup.offset << sup.exponent, (sup.offset + sup.length) << sup.exponent};
  if (!contains(sup_iv, own_iv)) {
    throw InvariantViolation("pack: " + to_string(own_iv) + " not inside supervisor interval " +
                             to_string(sup_iv));
  }
  const std::uint64_t delta = supervisor_delta(own, sup);
  if (delta > layout.max_delta()) {
    throw InvariantViolation("pack: supervisor offset " + std::to_string(delta) +
                             " exceeds field maximum " + std::to_string(layout.max_delta()));
  }
  LabelWord bits = 0;
  bits |= place(own.exponent - 1, layout.exponent());
  bits |= place(own.length - 1, layout.length());
  bits |= place(own.offset - 1, layout.offset());
  bits |= place(sup.exponent - 1, layout.sup_exponent());
  bits |= place(sup.length - 1, layout.sup_length());
  bits |= place(delta, layout.sup_delta());
  return Label{bits};
}

DecodedLabel unpack(const LabelLayout& layout, Label label) {
  const SchemeParams& params = layout.params();
  if (layout.total_bits() < 128 && (label.bits >> layout.total_bits()) != 0) {
    throw std::invalid_argument("malformed label: bits set beyond the label width");
  }
  const DyadicInterval own{
      static_cast<unsigned>(extract(label.bits, layout.exponent())) + 1,
      static_cast<std::uint64_t>(extract(label.bits, layout.offset())) + 1,
      static_cast<std::uint64_t>(extract(label.bits, layout.length())) + 1,
  };
  if (!is_valid(params, own)) {
    throw std::invalid_argument("malformed label: own interval out of range");
  }
  const ClosedInterval own_iv = endpoints(params, own);
  const auto sup_exponent = static_cast<unsigned>(extract(label.bits, layout.sup_exponent())) + 1;
  const auto sup_length = static_cast<std::uint64_t>(extract(label.bits, layout.sup_length())) + 1;
  const auto delta = static_cast<std::uint64_t>(extract(label.bits, layout.sup_delta()));
  const std::uint64_t floor_offset = own_iv.lo >> std::min(sup_exponent, 63u);
  if (delta >= floor_offset) {
    throw std::invalid_argument("malformed label: supervisor offset below 1");
  }
  const DyadicInterval sup{sup_exponent, floor_offset - delta, sup_length};
  if (!is_valid(params, sup)) {
    throw std::invalid_argument("malformed label: supervisor interval out of range");
  }
  return {own_iv, endpoints(params, sup)};
}

bool decide_ancestry(const LabelLayout& layout, Label u, Label v) {
  const detail::DecoderShifts shifts(layout);
  return detail::decide<LabelWord>(shifts, u.bits, v.bits);
}

bool decide_ancestry_audited(const LabelLayout& layout, Label u, Label v,
                             DecoderOpCounts& counts) {
  const detail::DecoderShifts shifts(layout);
  return detail::decide(shifts, CountingWord(u.bits, &counts), CountingWord(v.bits, &counts));
}

std::string to_hex(const LabelLayout& layout, Label label) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(layout.hex_digits(), '0');
  LabelWord bits = label.bits;
  for (auto it = out.rbegin(); it != out.rend(); ++it) {
    *it = kDigits[static_cast<unsigned>(bits & 0xf)];
    bits >>= 4;
  }
  return out;
}

Label label_from_hex(const LabelLayout& layout, std::string_view hex) {
  if (hex.empty() || hex.size() > 32) {
    throw std::invalid_argument("label hex must have 1 to 32 digits, got '" + std::string(hex) +
                                "'");
  }
  LabelWord bits = 0;
  for (const char ch : hex) {
    unsigned digit = 0;
    if (ch >= '0' && ch <= '9') {
      digit = static_cast<unsigned>(ch - '0');
    } else if (ch >= 'a' && ch <= 'f') {
      digit = static_cast<unsigned>(ch - 'a' + 10);
    } else if (ch >= 'A' && ch <= 'F') {
      digit = static_cast<unsigned>(ch - 'A' + 10);
    } else {
      throw std::invalid_argument("bad hex digit in label '" + std::string(hex) + "'");
    }
    bits = (bits << 4) | digit;
  }
  if (layout.total_bits() < 128 && (bits >> layout.total_bits()) != 0) {
    throw std::invalid_argument("label '" + std::string(hex) + "' wider than " +
                                std::to_string(layout.total_bits()) + " bits");
  }
  return Label{bits};
}

Labeling label_nodes(const DecoratedTree& d, const IntervalAssignment& assignment,
                     const LabelLayout& layout) {
  Labeling out{layout, {}, 0, assignment.recursion_steps, assignment.max_endpoint};
  out.labels.resize(d.size());
  for (std::size_t v = 0; v < d.size(); ++v) {
    const DyadicInterval own = assignment.intervals[v];
    const DyadicInterval sup =
        assignment.intervals[static_cast<std::size_t>(d.supervisor(static_cast<NodeId>(v)))];
    out.labels[v] = pack(layout, own, sup);
    out.max_delta = std::max(out.max_delta, supervisor_delta(own, sup));
  }
  return out;
}

Labeling mark(const RootedTree& tree, const SchemeParams& params, OffsetField offset_field) {
  if (tree.size() > params.family_size()) {
    throw std::invalid_argument("tree of " + std::to_string(tree.size()) +
                                " nodes exceeds family size " +
                                std::to_string(params.family_size()));
  }
  const DecoratedTree d = decorate(tree);
  const IntervalAssignment assignment = assign_intervals(d, params);
  return label_nodes(d, assignment, LabelLayout(params, offset_field));
}

}  // namespace ancestry
