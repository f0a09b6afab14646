#include <gtest/gtest.h>

#include <random>

#include "ancestry/classic_scheme.hpp"
#include "ancestry/interval_assignment.hpp"
#include "ancestry/label_table.hpp"
#include "ancestry/verification.hpp"
#include "test_support.hpp"

namespace ancestry {
namespace {

using testing::e5;

TEST(CheckLpo, E5Passes) {
  const auto params = SchemeParams::for_family_size(8);
  const DecoratedTree d = decorate(e5());
  const auto a = assign_intervals(d, params);
  const auto report = check_lpo(d, a.intervals, params);
  EXPECT_TRUE(report.passed()) << report.to_text();
  for (const char* name : {"one_to_one", "universe_bound", "lpo1", "lpo2", "light_nesting"}) {
    EXPECT_NE(report.find(name), nullptr) << name;
  }
}

TEST(CheckLpo, E5SwapBreaksLpo2) {
  const auto params = SchemeParams::for_family_size(8);
  const DecoratedTree d = decorate(e5());
  auto a = assign_intervals(d, params);
  std::swap(a.intervals[3], a.intervals[2]);
  const auto report = check_lpo(d, a.intervals, params);
  const CheckResult* lpo2 = report.find("lpo2");
  ASSERT_NE(lpo2, nullptr);
  EXPECT_FALSE(lpo2->passed);
  EXPECT_NE(lpo2->detail.find("x=2 u=3"), std::string::npos) << lpo2->detail;
}

TEST(CheckLpo, SingleNodePasses) {
  const auto params = SchemeParams::for_family_size(2);
  const DecoratedTree d = decorate(testing::tree_of({-1}));
  const auto a = assign_intervals(d, params);
  EXPECT_TRUE(check_lpo(d, a.intervals, params).passed());
}

TEST(CheckLpo, DetectsDuplicatesAndOutOfUniverse) {
  const auto params = SchemeParams::for_family_size(8);
  const DecoratedTree d = decorate(e5());
  auto a = assign_intervals(d, params);
  a.intervals[4] = a.intervals[2];
  EXPECT_FALSE(check_lpo(d, a.intervals, params).find("one_to_one")->passed);

  a = assign_intervals(d, params);
  a.intervals[4] = DyadicInterval{3, 100, 1};
  EXPECT_FALSE(check_lpo(d, a.intervals, params).find("universe_bound")->passed);
}

// The linear lpo2 sweep and the literal lqa check must agree, including on
// corrupted mappings.
TEST(CheckLpo, SweepMatchesLiteralCheck) {
  LpoCheckOptions literal;
  LpoCheckOptions sweep;
  sweep.literal_lqa_limit = 0;
  std::mt19937_64 rng(17);
  int failures_seen = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const RootedTree t = testing::random_shuffled_tree(30 + seed, seed);
    const auto params = SchemeParams::for_family_size(t.size());
    const DecoratedTree d = decorate(t);
    auto a = assign_intervals(d, params);
    if (seed % 2) {
      const std::size_t x = rng() % t.size();
      const std::size_t y = rng() % t.size();
      std::swap(a.intervals[x], a.intervals[y]);
    }
    const bool lit = check_lpo(d, a.intervals, params, literal).find("lpo2")->passed;
    const bool swp = check_lpo(d, a.intervals, params, sweep).find("lpo2")->passed;
    EXPECT_EQ(lit, swp) << "seed " << seed;
    failures_seen += lit ? 0 : 1;
  }
  EXPECT_GT(failures_seen, 0);
}

TEST(CheckSchemeVsOracle, EnumeratedCorpus) {
  const auto params = SchemeParams::for_family_size(16);
  for (const auto& t : testing::corpus_up_to(9)) {
    EXPECT_TRUE(check_scheme_vs_oracle(t, Scheme::kOptimal, params).passed());
    EXPECT_TRUE(check_scheme_vs_oracle(t, Scheme::kClassic, params).passed());
  }
}

TEST(CheckSchemeVsOracle, Broom) {
  const RootedTree t = generate_tree({TreeFamily::kBroom, 1001, 0, 10, 100});
  const auto report =
      check_scheme_vs_oracle(t, Scheme::kOptimal, SchemeParams::for_family_size(1024));
  EXPECT_TRUE(report.passed()) << report.to_text();
  // Sampled pairs plus the sum of depths along every chain.
  EXPECT_EQ(report.stats.pairs_checked, 100000u + 10u * (100 * 101 / 2));
}

TEST(CheckSchemeVsOracle, RandomRecursive) {
  const RootedTree t = generate_tree({TreeFamily::kRandomRecursive, 1 << 14, 7});
  const auto report =
      check_scheme_vs_oracle(t, Scheme::kOptimal, SchemeParams::for_family_size(1 << 14));
  EXPECT_TRUE(report.passed()) << report.to_text();
}

// Wrong whenever u is the root and v is at depth two or more.
SchemeFactory faulty_factory() {
  return [](const RootedTree& t) -> PairDecider {
    auto labels = std::make_shared<ClassicLabeling>(classic_mark(t, t.size()));
    return [labels, &t](NodeId u, NodeId v) {
      const bool right = classic_decide(labels->labels[u], labels->labels[v]);
      const bool deep = t.parent(v) != kNoParent && t.parent(v) != t.root();
      return u == t.root() && deep ? !right : right;
    };
  };
}

TEST(CheckFactoryVsOracle, ReportsShrunkCounterexample) {
  const RootedTree t = generate_tree({TreeFamily::kRandomRecursive, 200, 3});
  const auto report = check_factory_vs_oracle(t, faulty_factory(), "faulty");
  ASSERT_FALSE(report.passed());
  const std::string& detail = report.checks[0].detail;
  EXPECT_NE(detail.find("mismatches; first u=0"), std::string::npos) << detail;

  const Counterexample c = shrink_counterexample(t, 0, 150, [](const RootedTree& s, NodeId u,
                                                                NodeId v) {
    const PairDecider d = faulty_factory()(s);
    return d(u, v) != oracle_is_ancestor(s, u, v);
  });
  // Only the root-to-v chain survives.
  for (NodeId x = 0; x < static_cast<NodeId>(c.tree.size()); ++x) {
    EXPECT_LE(c.tree.children(x).size(), 1u);
  }
  EXPECT_TRUE(c.tree.is_leaf(c.v));
  EXPECT_EQ(c.u, c.tree.root());
}

TEST(CheckTableVsOracle, DetectsCorruptedTable) {
  const auto params = SchemeParams::for_family_size(8);
  std::string csv = write_label_csv(mark(e5(), params));
  EXPECT_TRUE(check_table_vs_oracle(e5(), read_label_csv(csv)).passed());

  // Swap the labels of nodes 2 and 3.
  LabelTable table = read_label_csv(csv);
  const auto& L = table.optimal_labels();
  std::string swapped = "node_id,label_hex,scheme,family_size,label_bits\n";
  for (NodeId v = 0; v < 5; ++v) {
    const NodeId src = v == 2 ? 3 : v == 3 ? 2 : v;
    swapped += std::to_string(v) + "," + to_hex(table.layout(), L[src]) + ",optimal,8," +
               std::to_string(table.label_bits()) + "\n";
  }
  const auto report = check_table_vs_oracle(e5(), read_label_csv(swapped));
  ASSERT_FALSE(report.passed());
  EXPECT_NE(report.checks[0].detail.find("u="), std::string::npos);
}

TEST(CheckLabelBudget, Widths) {
  const RootedTree t = generate_tree({TreeFamily::kRandomRecursive, 1000, 1});
  for (const auto& [log_n, bits] : {std::pair{10u, 42u}, {20u, 58u}, {48u, 92u}}) {
    const auto params = SchemeParams::from_log_n(log_n);
    const Labeling l = mark(t, params, OffsetField::kWide);
    const auto report = check_label_budget(l);
    EXPECT_TRUE(report.passed()) << report.to_text();
    EXPECT_EQ(report.stats.max_label_bits, bits);
    EXPECT_EQ(tight_offset_suffices(params, report.stats.max_delta),
              report.stats.max_delta <= 4 * log_n - 1);
  }
  EXPECT_EQ(check_label_budget(classic_mark(t, std::uint64_t{1} << 48), std::uint64_t{1} << 48)
                .stats.max_label_bits,
            96u);
}

TEST(VerifyTree, ReportRenders) {
  const auto report = verify_tree(e5(), Scheme::kOptimal, SchemeParams::for_family_size(8));
  EXPECT_TRUE(report.passed());
  const std::string csv = report.to_csv();
  EXPECT_EQ(csv.rfind("check,status,detail\n", 0), 0u);
  EXPECT_NE(csv.find("lpo2,pass"), std::string::npos) << csv;
  EXPECT_NE(report.to_text().find("result: PASS"), std::string::npos);
}

}  // namespace
}  // namespace ancestry
