#pragma once

// The decoder, written once over an abstract word type. The word only needs
// +, -, <<, >>, ==, < and <=; instantiating it with a type that offers nothing
// else (see decoder_audit.hpp) proves no other operation is used.

#include "ancestry/label_codec.hpp"

namespace ancestry::detail {

// Left/right shift amounts that isolate each field of a 128-bit word.
struct FieldShifts {
  unsigned left;
  unsigned right;
};

struct DecoderShifts {
  FieldShifts exponent, length, offset, sup_exponent, sup_length, sup_delta;

  static constexpr FieldShifts of(BitField f) {
    return {128 - f.shift - f.width, 128 - f.width};
  }

  explicit DecoderShifts(const LabelLayout& layout)
      : exponent(of(layout.exponent())),
        length(of(layout.length())),
        offset(of(layout.offset())),
        sup_exponent(of(layout.sup_exponent())),
        sup_length(of(layout.sup_length())),
        sup_delta(of(layout.sup_delta())) {}
};

template <class Word>
Word field(Word bits, FieldShifts s) {
  return (bits << s.left) >> s.right;
}

template <class Word>
struct OwnInterval {
  Word lo, hi;
};

template <class Word>
OwnInterval<Word> own_interval(const DecoderShifts& s, Word bits) {
  const Word one(1);
  const Word exponent = field(bits, s.exponent) + one;
  const Word length = field(bits, s.length) + one;
  const Word offset = field(bits, s.offset) + one;
  return {offset << exponent, (offset + length) << exponent};
}

template <class Word>
bool decide(const DecoderShifts& s, Word u, Word v) {
  if (u == v) return false;
  const Word one(1);

  const OwnInterval<Word> iu = own_interval(s, u);
  const Word sup_exponent = field(u, s.sup_exponent) + one;
  const Word sup_length = field(u, s.sup_length) + one;
  const Word sup_offset = (iu.lo >> sup_exponent) - field(u, s.sup_delta);
  const Word sup_lo = sup_offset << sup_exponent;
  const Word sup_hi = (sup_offset + sup_length) << sup_exponent;

  const OwnInterval<Word> iv = own_interval(s, v);

  // D1: I(v) strictly inside I(sp(u)).
  const bool inside = sup_lo <= iv.lo && iv.hi <= sup_hi;
  const bool same_as_sup = sup_lo == iv.lo && iv.hi == sup_hi;
  // D2: I(u) precedes I(v), or u supervises itself.
  const bool before = iu.hi < iv.lo;
  const bool self_supervised = iu.lo == sup_lo && iu.hi == sup_hi;
  return inside && !same_as_sup && (before || self_supervised);
}

}  // namespace ancestry::detail

namespace ancestry {

// decide_ancestry with the layout-dependent shift amounts computed once.
class AncestryDecoder {
 public:
  explicit AncestryDecoder(const LabelLayout& layout) : shifts_(layout) {}

  bool operator()(Label u, Label v) const {
    return detail::decide<LabelWord>(shifts_, u.bits, v.bits);
  }

 private:
  detail::DecoderShifts shifts_;
};

}  // namespace ancestry
