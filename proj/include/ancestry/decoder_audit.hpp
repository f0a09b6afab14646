#pragma once

#include <cstdint>

#include "ancestry/label_codec.hpp"

namespace ancestry {

struct DecoderOpCounts {
  std::uint64_t additions = 0;
  std::uint64_t subtractions = 0;
  std::uint64_t shifts = 0;
  std::uint64_t comparisons = 0;

  std::uint64_t total() const noexcept {
    return additions + subtractions + shifts + comparisons;
  }
};

// A 128-bit word that supports only add, subtract, shift and compare, and
// counts every use. It has no multiplication, division, modulo or bitwise
// operators, so instantiating the decoder with it fails to compile if the
// decoder ever needs one.
class CountingWord {
 public:
  explicit CountingWord(int v) : value_(static_cast<LabelWord>(v)) {}
  CountingWord(LabelWord v, DecoderOpCounts* counts) : value_(v), counts_(counts) {}

  LabelWord value() const noexcept { return value_; }

  friend CountingWord operator+(const CountingWord& a, const CountingWord& b) {
    auto* c = pick(a, b);
    if (c) ++c->additions;
    return {a.value_ + b.value_, c};
  }
  friend CountingWord operator-(const CountingWord& a, const CountingWord& b) {
    auto* c = pick(a, b);
    if (c) ++c->subtractions;
    return {a.value_ - b.value_, c};
  }
  friend CountingWord operator<<(const CountingWord& a, unsigned k) {
    if (a.counts_) ++a.counts_->shifts;
    return {a.value_ << k, a.counts_};
  }
  friend CountingWord operator>>(const CountingWord& a, unsigned k) {
    if (a.counts_) ++a.counts_->shifts;
    return {a.value_ >> k, a.counts_};
  }
  friend CountingWord operator<<(const CountingWord& a, const CountingWord& k) {
    auto* c = pick(a, k);
    if (c) ++c->shifts;
    return {a.value_ << static_cast<unsigned>(k.value_), c};
  }
  friend CountingWord operator>>(const CountingWord& a, const CountingWord& k) {
    auto* c = pick(a, k);
    if (c) ++c->shifts;
    return {a.value_ >> static_cast<unsigned>(k.value_), c};
  }
  friend bool operator==(const CountingWord& a, const CountingWord& b) {
    if (auto* c = pick(a, b)) ++c->comparisons;
    return a.value_ == b.value_;
  }
  friend bool operator<(const CountingWord& a, const CountingWord& b) {
    if (auto* c = pick(a, b)) ++c->comparisons;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const CountingWord& a, const CountingWord& b) {
    if (auto* c = pick(a, b)) ++c->comparisons;
    return a.value_ <= b.value_;
  }

 private:
  static DecoderOpCounts* pick(const CountingWord& a, const CountingWord& b) {
    return a.counts_ ? a.counts_ : b.counts_;
  }

  LabelWord value_;
  DecoderOpCounts* counts_ = nullptr;
};

template <class W>
concept HasOnlyDecoderOps = requires(W a, W b) {
  a + b;
  a - b;
  a << 1u;
  a >> 1u;
  a == b;
  a < b;
  a <= b;
} && !requires(W a, W b) { a * b; } && !requires(W a, W b) { a / b; } &&
    !requires(W a, W b) { a % b; } && !requires(W a, W b) { a & b; } &&
    !requires(W a, W b) { a | b; } && !requires(W a, W b) { a ^ b; };

static_assert(HasOnlyDecoderOps<CountingWord>);

// Same decision as decide_ancestry, run through CountingWord; adds the
// operations it performed to `counts`.
bool decide_ancestry_audited(const LabelLayout& layout, Label u, Label v,
                             DecoderOpCounts& counts);

}  // namespace ancestry
