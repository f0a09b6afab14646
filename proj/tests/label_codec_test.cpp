#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "ancestry/decoder_audit.hpp"
#include "ancestry/label_codec.hpp"
#include "ancestry/label_decoder.hpp"
#include "test_support.hpp"

namespace ancestry {
namespace {

using testing::e5;

const LabelLayout& layout16() {
  static const LabelLayout layout(SchemeParams::for_family_size(16), OffsetField::kWide);
  return layout;
}

TEST(LabelLayout, FieldWidths) {
  const LabelLayout& l = layout16();  // ell = 4, lambda = 2
  EXPECT_EQ(l.exponent().width, 2u);
  EXPECT_EQ(l.length().width, 4u);
  EXPECT_EQ(l.offset().width, 7u);
  EXPECT_EQ(l.sup_exponent().width, 2u);
  EXPECT_EQ(l.sup_length().width, 4u);
  EXPECT_EQ(l.sup_delta().width, 5u);
  EXPECT_EQ(l.total_bits(), 4u + 6 * 2 + 8);
  EXPECT_EQ(l.sup_delta().shift + l.sup_delta().width, l.total_bits());

  const LabelLayout tight(SchemeParams::for_family_size(16), OffsetField::kTight);
  EXPECT_EQ(tight.total_bits(), 4u + 6 * 2 + 7);
  EXPECT_EQ(tight.max_delta(), 15u);
}

TEST(LabelLayout, WidthsAtScale) {
  EXPECT_EQ(LabelLayout(SchemeParams::for_family_size(8), OffsetField::kWide).total_bits(), 23u);
  EXPECT_EQ(LabelLayout(SchemeParams::from_log_n(10), OffsetField::kWide).total_bits(), 42u);
  EXPECT_EQ(LabelLayout(SchemeParams::from_log_n(20), OffsetField::kWide).total_bits(), 58u);
  EXPECT_EQ(LabelLayout(SchemeParams::from_log_n(48), OffsetField::kWide).total_bits(), 92u);
  EXPECT_EQ(LabelLayout(SchemeParams::from_log_n(48), OffsetField::kTight).total_bits(), 91u);
  EXPECT_LE(LabelLayout(SchemeParams::from_log_n(56), OffsetField::kWide).total_bits(), 128u);
}

TEST(Pack, Example) {
  const DyadicInterval own{1, 3, 2};  // [6,10]
  const DyadicInterval sup{2, 1, 3};  // [4,16]
  EXPECT_EQ(supervisor_delta(own, sup), 0u);
  const Label label = pack(layout16(), own, sup);
  EXPECT_EQ(static_cast<std::uint64_t>(label.bits), 73860u);
  const DecodedLabel decoded = unpack(layout16(), Label{73860});
  EXPECT_EQ(decoded.own, (ClosedInterval{6, 10}));
  EXPECT_EQ(decoded.supervisor, (ClosedInterval{4, 16}));
}

TEST(Pack, SelfSupervisedHasZeroDelta) {
  const DyadicInterval iv{2, 5, 3};
  EXPECT_EQ(supervisor_delta(iv, iv), 0u);
  const DecodedLabel d = unpack(layout16(), pack(layout16(), iv, iv));
  EXPECT_EQ(d.own, d.supervisor);
}

TEST(Pack, RejectsBadInput) {
  EXPECT_THROW(pack(layout16(), {1, 20, 1}, {1, 1, 2}), InvariantViolation);
  EXPECT_THROW(pack(layout16(), {5, 1, 1}, {5, 1, 1}), InvariantViolation);
}

TEST(Unpack, RejectsBitsBeyondWidth) {
  const Label wide{LabelWord{1} << layout16().total_bits()};
  EXPECT_THROW(unpack(layout16(), wide), std::invalid_argument);
}

Label make_label(DyadicInterval own, DyadicInterval sup) { return pack(layout16(), own, sup); }

TEST(DecideAncestry, Examples) {
  const Label u = make_label({1, 3, 2}, {2, 1, 3});  // [6,10] under [4,16]
  const Label v = make_label({1, 6, 1}, {1, 6, 1});  // [12,14], light
  EXPECT_TRUE(decide_ancestry(layout16(), u, v));
  EXPECT_FALSE(decide_ancestry(layout16(), v, u));
  EXPECT_FALSE(decide_ancestry(layout16(), u, u));
  EXPECT_TRUE(decoding_conditions_hold(unpack(layout16(), u), unpack(layout16(), v)));
}

TEST(Mark, SingleNode) {
  const Labeling l = mark(testing::tree_of({-1}), SchemeParams::for_family_size(2));
  ASSERT_EQ(l.labels.size(), 1u);
  const DecodedLabel d = unpack(l.layout, l.labels[0]);
  EXPECT_EQ(d.own, d.supervisor);
}

TEST(Mark, E5) {
  const Labeling l = mark(e5(), SchemeParams::for_family_size(8), OffsetField::kWide);
  EXPECT_EQ(l.layout.total_bits(), 23u);
  std::set<std::string> distinct;
  for (const Label& x : l.labels) {
    EXPECT_EQ(x.bits >> 23, LabelWord{0});
    distinct.insert(to_hex(l.layout, x));
  }
  EXPECT_EQ(distinct.size(), 5u);
  for (NodeId u = 0; u < 5; ++u)
    for (NodeId v = 0; v < 5; ++v)
      EXPECT_EQ(decide_ancestry(l.layout, l.labels[u], l.labels[v]), oracle_is_ancestor(e5(), u, v))
          << u << " " << v;
}

TEST(Mark, TreeLargerThanFamilyThrows) {
  EXPECT_THROW(mark(e5(), SchemeParams::for_family_size(4)), std::invalid_argument);
}

void expect_round_trip(const RootedTree& t, const SchemeParams& params, OffsetField field) {
  const DecoratedTree d = decorate(t);
  const IntervalAssignment a = assign_intervals(d, params);
  const LabelLayout layout(params, field);
  const Labeling l = label_nodes(d, a, layout);
  for (NodeId u = 0; u < static_cast<NodeId>(t.size()); ++u) {
    const DecodedLabel got = unpack(layout, l.labels[u]);
    ASSERT_EQ(got.own, endpoints(params, a.intervals[u]));
    ASSERT_EQ(got.supervisor, endpoints(params, a.intervals[d.supervisor(u)]));
    ASSERT_EQ(pack(layout, a.intervals[u], a.intervals[d.supervisor(u)]), l.labels[u]);
    ASSERT_EQ(label_from_hex(layout, to_hex(layout, l.labels[u])), l.labels[u]);
  }
}

TEST(Codec, RoundTripOnCorpus) {
  const auto params = SchemeParams::for_family_size(16);
  for (const auto& t : testing::corpus_up_to(9)) {
    expect_round_trip(t, params, OffsetField::kWide);
    expect_round_trip(t, params, OffsetField::kTight);
  }
}

TEST(Codec, RoundTripOnRandomTrees) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const RootedTree t = testing::random_shuffled_tree(500 + seed, seed);
    expect_round_trip(t, SchemeParams::for_family_size(t.size()), OffsetField::kWide);
    expect_round_trip(t, SchemeParams::from_log_n(40), OffsetField::kTight);
  }
}

TEST(Codec, ExhaustiveCorpusAgreesWithOracle) {
  const auto params = SchemeParams::for_family_size(16);
  for (const auto& t : testing::corpus_up_to(9)) {
    const Labeling l = mark(t, params);
    const auto n = static_cast<NodeId>(t.size());
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = 0; v < n; ++v)
        ASSERT_EQ(decide_ancestry(l.layout, l.labels[u], l.labels[v]), oracle_is_ancestor(t, u, v))
            << serialize_parent_array(t) << " u=" << u << " v=" << v;
  }
}

TEST(Codec, AntisymmetryAndTransitivity) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const RootedTree t = testing::random_shuffled_tree(120, seed);
    const Labeling l = mark(t, SchemeParams::for_family_size(128));
    const AncestryDecoder decide(l.layout);
    const auto& L = l.labels;
    for (std::size_t u = 0; u < L.size(); ++u) {
      for (std::size_t v = 0; v < L.size(); ++v) {
        if (!decide(L[u], L[v])) continue;
        EXPECT_FALSE(decide(L[v], L[u]));
        for (std::size_t w = 0; w < L.size(); ++w) {
          if (decide(L[v], L[w])) EXPECT_TRUE(decide(L[u], L[w]));
        }
      }
    }
  }
}

TEST(Decoder, InlineAndAuditedAgreeAndUseConstantOps) {
  std::set<std::uint64_t> max_per_n;
  for (const unsigned log_n : {9u, 10u, 20u, 48u}) {
    std::uint64_t most = 0;
    const auto params = SchemeParams::from_log_n(log_n);
    const RootedTree t = testing::random_shuffled_tree(300, log_n);
    const Labeling l = mark(t, params);
    const AncestryDecoder decide(l.layout);
    for (NodeId u = 0; u < 300; u += 7) {
      for (NodeId v = 0; v < 300; v += 3) {
        DecoderOpCounts counts;
        const bool audited = decide_ancestry_audited(l.layout, l.labels[u], l.labels[v], counts);
        EXPECT_EQ(audited, decide(l.labels[u], l.labels[v]));
        EXPECT_EQ(audited, oracle_is_ancestor(t, u, v));
        most = std::max(most, counts.total());
        EXPECT_LE(counts.total(), 45u);  // every operation in the decoder body
      }
    }
    max_per_n.insert(most);
  }
  // The worst-case operation count does not depend on the family size.
  EXPECT_EQ(max_per_n.size(), 1u);
}

TEST(Hex, FixedWidthLowercase) {
  const LabelLayout l(SchemeParams::from_log_n(48), OffsetField::kWide);
  EXPECT_EQ(l.hex_digits(), 24u);
  const Label x{(LabelWord{0xabc} << 80) | 0x1f};
  const std::string hex = to_hex(l, x);
  EXPECT_EQ(hex.size(), 24u);
  EXPECT_EQ(hex, "0abc0000000000000000001f");
  EXPECT_EQ(label_from_hex(l, hex), x);
  EXPECT_THROW(label_from_hex(l, "zz"), std::invalid_argument);
  EXPECT_THROW(label_from_hex(l, "ffffffffffffffffffffffff"), std::invalid_argument);
}

}  // namespace
}  // namespace ancestry
