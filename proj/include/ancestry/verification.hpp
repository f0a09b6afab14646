#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ancestry/classic_scheme.hpp"
#include "ancestry/decorated_tree.hpp"
#include "ancestry/interval.hpp"
#include "ancestry/label_codec.hpp"
#include "ancestry/label_table.hpp"
#include "ancestry/rooted_tree.hpp"

namespace ancestry {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;  // counterexample(s) on failure
};

struct VerificationStats {
  unsigned max_label_bits = 0;
  std::uint64_t max_delta = 0;
  std::uint64_t max_endpoint = 0;
  std::uint64_t recursion_steps = 0;
  std::uint64_t pairs_checked = 0;
};

struct VerificationReport {
  std::string tree_id;
  std::vector<CheckResult> checks;
  VerificationStats stats;

  bool passed() const;
  const CheckResult* find(std::string_view name) const;
  // Appends the other report's checks and folds its stats in (max / sum).
  void merge(const VerificationReport& other);

  std::string to_text() const;
  // Columns check,status,detail.
  std::string to_csv() const;
};

struct LpoCheckOptions {
  // Up to this many nodes LPO2 is checked literally against
  // local_quasi_ancestors (quadratic); larger trees use a linear sweep along
  // heavy paths.
  std::size_t literal_lqa_limit = 2048;
  std::size_t max_counterexamples = 8;
};

// One-to-one, universe bounds, LPO1, LPO2 and nesting below light nodes.
VerificationReport check_lpo(const DecoratedTree& d, std::span<const DyadicInterval> intervals,
                             const SchemeParams& params, const LpoCheckOptions& options = {});

struct OracleCheckOptions {
  // Trees up to this size are checked on every ordered pair.
  std::size_t exhaustive_limit = 512;
  bool exhaustive = false;
  std::uint64_t pair_budget = 100000;
  std::uint64_t seed = 0;
  // Also check every (ancestor, node) pair on every parent chain.
  bool chain_pairs = true;
  // Counterexamples from trees up to this size are shrunk by deleting leaves.
  std::size_t shrink_limit = 2048;
  OffsetField offset_field = kDefaultOffsetField;
};

// Marks the tree with the given scheme and compares the decoder with
// oracle_is_ancestor.
VerificationReport check_scheme_vs_oracle(const RootedTree& tree, Scheme scheme,
                                          const SchemeParams& params,
                                          const OracleCheckOptions& options = {});

// Same comparison for a label table produced elsewhere (no shrinking; the
// labels are fixed).
VerificationReport check_table_vs_oracle(const RootedTree& tree, const LabelTable& table,
                                         const OracleCheckOptions& options = {});

using PairDecider = std::function<bool(NodeId, NodeId)>;
using SchemeFactory = std::function<PairDecider(const RootedTree&)>;

// Oracle comparison for an arbitrary scheme given as a factory; failures are
// shrunk by re-labeling smaller trees.
VerificationReport check_factory_vs_oracle(const RootedTree& tree, const SchemeFactory& factory,
                                           std::string_view check_name,
                                           const OracleCheckOptions& options = {});

// Width of every label equals the layout width and each t fits; records the
// largest t and whether the tighter offset field would have sufficed.
VerificationReport check_label_budget(const Labeling& labeling);
VerificationReport check_label_budget(const ClassicLabeling& labeling, std::uint64_t family_size);

// True when the tighter offset field (t <= 4 log n - 1) can hold max_delta.
bool tight_offset_suffices(const SchemeParams& params, std::uint64_t max_delta);

struct Counterexample {
  RootedTree tree;
  NodeId u;
  NodeId v;
};

// Greedily deletes leaves other than u, v while still_fails holds on the
// smaller tree (node ids are compacted after each deletion).
Counterexample shrink_counterexample(
    const RootedTree& tree, NodeId u, NodeId v,
    const std::function<bool(const RootedTree&, NodeId, NodeId)>& still_fails);

// All checks that apply to the scheme: check_lpo (optimal only),
// check_scheme_vs_oracle and check_label_budget.
VerificationReport verify_tree(const RootedTree& tree, Scheme scheme, const SchemeParams& params,
                               const OracleCheckOptions& options = {});

namespace detail {

// Runs the scheme against the oracle on the pair set chosen by options and
// returns the number of pairs checked. `decide` answers exhaustive and sampled
// pairs; `decide_chain` answers the (possibly quadratic) parent-chain pairs
// and may be a precomputed equivalent of `decide`.
template <class Decider, class ChainDecider, class OnMismatch>
std::uint64_t compare_pairs(const RootedTree& tree, const Decider& decide,
                            const ChainDecider& decide_chain, const OracleCheckOptions& options,
                            OnMismatch&& on_mismatch) {
  const std::size_t n = tree.size();
  std::uint64_t checked = 0;
  auto check = [&](NodeId u, NodeId v, bool expected) {
    ++checked;
    if (decide(u, v) != expected) on_mismatch(u, v, expected);
  };
  if (options.exhaustive || n <= options.exhaustive_limit) {
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        check(static_cast<NodeId>(u), static_cast<NodeId>(v),
              oracle_is_ancestor(tree, static_cast<NodeId>(u), static_cast<NodeId>(v)));
      }
    }
    return checked;
  }
  std::mt19937_64 rng(options.seed);
  __extension__ using u128 = unsigned __int128;
  auto draw = [&] {
    return static_cast<NodeId>((static_cast<u128>(rng()) * n) >> 64);
  };
  for (std::uint64_t k = 0; k < options.pair_budget; ++k) {
    const NodeId u = draw();
    const NodeId v = draw();
    check(u, v, oracle_is_ancestor(tree, u, v));
  }
  if (options.chain_pairs) {
    // Walking v's parent chain is the oracle itself: every node met is an
    // ancestor of v.
    for (std::size_t v = 0; v < n; ++v) {
      for (NodeId u = tree.parent(static_cast<NodeId>(v)); u != kNoParent; u = tree.parent(u)) {
        ++checked;
        if (!decide_chain(u, static_cast<NodeId>(v))) on_mismatch(u, static_cast<NodeId>(v), true);
      }
    }
  }
  return checked;
}

}  // namespace detail

}  // namespace ancestry
