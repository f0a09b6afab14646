#include "ancestry/verification.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "ancestry/interval_assignment.hpp"
#include "ancestry/label_decoder.hpp"

namespace ancestry {

namespace {

// Collects up to `limit` counterexample strings for one check.
class Violations {
 public:
  Violations(std::string name, std::size_t limit) : name_(std::move(name)), limit_(limit) {}

  void add(const std::string& what) {
    if (count_ < limit_) {
      if (!detail_.empty()) detail_ += "; ";
      detail_ += what;
    }
    ++count_;
  }

  CheckResult result() const {
    CheckResult r{name_, count_ == 0, detail_};
    if (count_ > limit_) r.detail += "; ... " + std::to_string(count_ - limit_) + " more";
    return r;
  }

 private:
  std::string name_;
  std::size_t limit_;
  std::size_t count_ = 0;
  std::string detail_;
};

ClosedInterval raw_endpoints(DyadicInterval iv) {
  const unsigned e = std::min(iv.exponent, 63u);
  return {iv.offset << e, (iv.offset + iv.length) << e};
}

std::string describe(NodeId v, ClosedInterval iv) {
  return std::to_string(v) + "=" + to_string(iv);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

RootedTree remove_leaf(const RootedTree& tree, NodeId leaf) {
  std::vector<NodeId> parents;
  parents.reserve(tree.size() - 1);
  for (std::size_t v = 0; v < tree.size(); ++v) {
    if (static_cast<NodeId>(v) == leaf) continue;
    NodeId p = tree.parent(static_cast<NodeId>(v));
    if (p != kNoParent && p > leaf) --p;
    parents.push_back(p);
  }
  return RootedTree::from_parents(std::move(parents));
}

std::string describe_counterexample(const Counterexample& c, bool expected) {
  std::string s = "u=" + std::to_string(c.u) + " v=" + std::to_string(c.v) + " expected " +
                  (expected ? "1" : "0") + " on tree {" + serialize_parent_array(c.tree) + "}";
  std::replace(s.begin(), s.end(), '\n', '|');
  return s;
}

VerificationReport run_factory(const RootedTree& tree, const SchemeFactory& factory,
                               std::string_view check_name, const OracleCheckOptions& options) {
  VerificationReport report;
  report.tree_id = std::to_string(tree.size()) + "-node tree";
  const PairDecider decide = factory(tree);
  std::uint64_t mismatches = 0;
  std::tuple<NodeId, NodeId, bool> first{kNoParent, kNoParent, false};
  report.stats.pairs_checked =
      detail::compare_pairs(tree, decide, decide, options, [&](NodeId u, NodeId v, bool e) {
        if (mismatches++ == 0) first = {u, v, e};
      });
  CheckResult result{std::string(check_name), mismatches == 0, ""};
  if (mismatches) {
    auto [u, v, expected] = first;
    Counterexample c{tree, u, v};
    if (tree.size() <= options.shrink_limit) {
      c = shrink_counterexample(tree, u, v,
                                [&](const RootedTree& t, NodeId a, NodeId b) {
                                  return factory(t)(a, b) != oracle_is_ancestor(t, a, b);
                                });
    }
    result.detail = std::to_string(mismatches) + " mismatches; first " +
                    describe_counterexample(c, oracle_is_ancestor(c.tree, c.u, c.v));
  }
  report.checks.push_back(std::move(result));
  return report;
}

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

void VerificationReport::merge(const VerificationReport& other) {
  if (tree_id.empty()) tree_id = other.tree_id;
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  stats.max_label_bits = std::max(stats.max_label_bits, other.stats.max_label_bits);
  stats.max_delta = std::max(stats.max_delta, other.stats.max_delta);
  stats.max_endpoint = std::max(stats.max_endpoint, other.stats.max_endpoint);
  stats.recursion_steps += other.stats.recursion_steps;
  stats.pairs_checked += other.stats.pairs_checked;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "tree: " << tree_id << '\n';
  for (const auto& c : checks) {
    out << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
  out << "stats: max_label_bits=" << stats.max_label_bits << " max_t=" << stats.max_delta
      << " max_endpoint=" << stats.max_endpoint << " recursion_steps=" << stats.recursion_steps
      << " pairs_checked=" << stats.pairs_checked << '\n';
  out << "result: " << (passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

std::string VerificationReport::to_csv() const {
  std::ostringstream out;
  out << "check,status,detail\n";
  for (const auto& c : checks) {
    out << csv_escape(c.name) << ',' << (c.passed ? "pass" : "fail") << ','
        << csv_escape(c.detail) << '\n';
  }
  return out.str();
}

VerificationReport check_lpo(const DecoratedTree& d, std::span<const DyadicInterval> intervals,
                             const SchemeParams& params, const LpoCheckOptions& options) {
  VerificationReport report;
  report.tree_id = std::to_string(d.size()) + "-node tree";
  const std::size_t n = d.size();
  if (intervals.size() != n) {
    report.checks.push_back({"mapping_total", false,
                             "mapping has " + std::to_string(intervals.size()) +
                                 " entries for " + std::to_string(n) + " nodes"});
    return report;
  }
  const std::size_t limit = options.max_counterexamples;
  std::vector<ClosedInterval> iv(n);
  for (std::size_t v = 0; v < n; ++v) iv[v] = raw_endpoints(intervals[v]);
  auto at = [&](NodeId v) -> const ClosedInterval& { return iv[static_cast<std::size_t>(v)]; };

  // One-to-one.
  {
    Violations bad("one_to_one", limit);
    std::vector<NodeId> order(n);
    for (std::size_t v = 0; v < n; ++v) order[v] = static_cast<NodeId>(v);
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
      return std::make_tuple(at(a).lo, at(a).hi, a) < std::make_tuple(at(b).lo, at(b).hi, b);
    });
    for (std::size_t k = 1; k < n; ++k) {
      if (at(order[k]) == at(order[k - 1])) {
        bad.add("nodes " + std::to_string(order[k - 1]) + " and " + std::to_string(order[k]) +
                " share " + to_string(at(order[k])));
      }
    }
    report.checks.push_back(bad.result());
  }

  // Universe and parameter bounds.
  {
    Violations bad("universe_bound", limit);
    for (std::size_t v = 0; v < n; ++v) {
      const DyadicInterval x = intervals[v];
      if (!is_valid(params, x)) {
        bad.add("node " + std::to_string(v) + " has (i,a,b)=(" + std::to_string(x.exponent) +
                "," + std::to_string(x.offset) + "," + std::to_string(x.length) +
                ") outside the family for U=" + std::to_string(params.universe()));
      }
      report.stats.max_endpoint = std::max(report.stats.max_endpoint, iv[v].hi);
    }
    report.checks.push_back(bad.result());
  }

  // LPO1: I(u) inside I(sp(u)) and I(sp(parent(u))).
  {
    Violations bad("lpo1", limit);
    for (std::size_t k = 0; k < n; ++k) {
      const auto u = static_cast<NodeId>(k);
      const NodeId p = d.parent(u);
      if (p == kNoParent) continue;
      for (const NodeId s : {d.supervisor(u), d.supervisor(p)}) {
        if (!contains(at(s), at(u))) {
          bad.add("I(" + describe(u, at(u)) + ") not inside I(" + describe(s, at(s)) + ")");
        }
      }
    }
    report.checks.push_back(bad.result());
  }

  // LPO2: I(x) precedes I(u) for every local quasi-ancestor x.
  {
    Violations bad("lpo2", limit);
    auto violation = [&](NodeId x, NodeId u) {
      bad.add("x=" + std::to_string(x) + " u=" + std::to_string(u) + ": " + to_string(at(x)) +
              " does not precede " + to_string(at(u)));
    };
    if (n <= options.literal_lqa_limit) {
      for (std::size_t k = 0; k < n; ++k) {
        const auto u = static_cast<NodeId>(k);
        for (const NodeId x : local_quasi_ancestors(d, u)) {
          if (!precedes(at(x), at(u))) violation(x, u);
        }
      }
    } else {
      // Along each heavy path s = v1, v2, ..., the local quasi-ancestors of a
      // child of v_j are v2..v_j plus the light children of v1..v_j that come
      // earlier in dfs order, so a running maximum of right endpoints suffices.
      for (std::size_t k = 0; k < n; ++k) {
        const auto top = static_cast<NodeId>(k);
        if (d.is_heavy(top)) continue;
        bool have = false;
        std::uint64_t max_hi = 0;
        NodeId argmax = kNoParent;
        auto absorb = [&](NodeId x) {
          if (!have || at(x).hi > max_hi) {
            max_hi = at(x).hi;
            argmax = x;
            have = true;
          }
        };
        auto require_after = [&](NodeId u) {
          if (have && max_hi >= at(u).lo) violation(argmax, u);
        };
        for (NodeId v = top; v != kNoParent; v = d.heavy_child(v)) {
          if (v != top) absorb(v);
          const NodeId heavy = d.heavy_child(v);
          for (const NodeId c : d.children(v)) {
            if (c == heavy) continue;
            require_after(c);
            absorb(c);
          }
          if (heavy != kNoParent) require_after(heavy);
        }
      }
    }
    report.checks.push_back(bad.result());
  }

  // Every descendant of a light node w gets an interval strictly inside I(w).
  {
    Violations bad("light_nesting", limit);
    for (std::size_t k = 0; k < n; ++k) {
      const auto v = static_cast<NodeId>(k);
      for (NodeId x = d.parent(v); x != kNoParent;) {
        const NodeId w = d.supervisor(x);
        if (!strictly_contains(at(w), at(v))) {
          bad.add("I(" + describe(v, at(v)) + ") not strictly inside light ancestor I(" +
                  describe(w, at(w)) + ")");
        }
        x = d.parent(w);
      }
    }
    report.checks.push_back(bad.result());
  }
  return report;
}

Counterexample shrink_counterexample(
    const RootedTree& tree, NodeId u, NodeId v,
    const std::function<bool(const RootedTree&, NodeId, NodeId)>& still_fails) {
  Counterexample current{tree, u, v};
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t k = current.tree.size(); k-- > 0;) {
      const auto leaf = static_cast<NodeId>(k);
      if (leaf == current.u || leaf == current.v || leaf == current.tree.root() ||
          !current.tree.is_leaf(leaf)) {
        continue;
      }
      RootedTree smaller = remove_leaf(current.tree, leaf);
      const NodeId su = current.u > leaf ? current.u - 1 : current.u;
      const NodeId sv = current.v > leaf ? current.v - 1 : current.v;
      if (still_fails(smaller, su, sv)) {
        current = Counterexample{std::move(smaller), su, sv};
        progress = true;
        break;
      }
    }
  }
  return current;
}

VerificationReport check_factory_vs_oracle(const RootedTree& tree, const SchemeFactory& factory,
                                           std::string_view check_name,
                                           const OracleCheckOptions& options) {
  return run_factory(tree, factory, check_name, options);
}

VerificationReport check_scheme_vs_oracle(const RootedTree& tree, Scheme scheme,
                                          const SchemeParams& params,
                                          const OracleCheckOptions& options) {
  VerificationReport report;
  report.tree_id = std::to_string(tree.size()) + "-node tree";
  const std::string name = "oracle_agreement_" + std::string(to_string(scheme));
  std::uint64_t mismatches = 0;
  std::tuple<NodeId, NodeId, bool> first{kNoParent, kNoParent, false};
  auto on_mismatch = [&](NodeId u, NodeId v, bool expected) {
    if (mismatches++ == 0) first = {u, v, expected};
  };

  if (scheme == Scheme::kOptimal) {
    const Labeling labeling = mark(tree, params, options.offset_field);
    const AncestryDecoder decoder(labeling.layout);
    const auto& labels = labeling.labels;
    auto decide = [&](NodeId u, NodeId v) {
      return decoder(labels[static_cast<std::size_t>(u)], labels[static_cast<std::size_t>(v)]);
    };
    // Parent-chain pairs can be quadratic in number; answer them from labels
    // decoded once up front.
    std::vector<DecodedLabel> decoded;
    if (options.chain_pairs && !options.exhaustive && tree.size() > options.exhaustive_limit) {
      decoded.reserve(labels.size());
      for (const Label& l : labels) decoded.push_back(unpack(labeling.layout, l));
    }
    auto decide_chain = [&](NodeId u, NodeId v) {
      const auto iu = static_cast<std::size_t>(u);
      const auto iv = static_cast<std::size_t>(v);
      return !(labels[iu] == labels[iv]) && decoding_conditions_hold(decoded[iu], decoded[iv]);
    };
    report.stats.pairs_checked =
        detail::compare_pairs(tree, decide, decide_chain, options, on_mismatch);
    report.stats.max_label_bits = labeling.layout.total_bits();
    report.stats.max_delta = labeling.max_delta;
    report.stats.max_endpoint = labeling.max_endpoint;
    report.stats.recursion_steps = labeling.recursion_steps;
  } else {
    const ClassicLabeling labeling = classic_mark(tree, params.family_size());
    auto decide = [&](NodeId u, NodeId v) {
      return classic_decide(labeling.labels[static_cast<std::size_t>(u)],
                            labeling.labels[static_cast<std::size_t>(v)]);
    };
    report.stats.pairs_checked = detail::compare_pairs(tree, decide, decide, options, on_mismatch);
    report.stats.max_label_bits = labeling.total_bits();
  }

  CheckResult result{name, mismatches == 0, ""};
  if (mismatches) {
    auto [u, v, expected] = first;
    Counterexample c{tree, u, v};
    if (tree.size() <= options.shrink_limit) {
      c = shrink_counterexample(tree, u, v, [&](const RootedTree& t, NodeId a, NodeId b) {
        bool got = false;
        if (scheme == Scheme::kOptimal) {
          const Labeling l = mark(t, params, options.offset_field);
          got = decide_ancestry(l.layout, l.labels[static_cast<std::size_t>(a)],
                                l.labels[static_cast<std::size_t>(b)]);
        } else {
          const ClassicLabeling l = classic_mark(t, params.family_size());
          got = classic_decide(l.labels[static_cast<std::size_t>(a)],
                               l.labels[static_cast<std::size_t>(b)]);
        }
        return got != oracle_is_ancestor(t, a, b);
      });
    }
    (void)expected;
    result.detail = std::to_string(mismatches) + " mismatches; first " +
                    describe_counterexample(c, oracle_is_ancestor(c.tree, c.u, c.v));
  }
  report.checks.push_back(std::move(result));
  return report;
}

VerificationReport check_table_vs_oracle(const RootedTree& tree, const LabelTable& table,
                                         const OracleCheckOptions& options) {
  VerificationReport report;
  report.tree_id = std::to_string(tree.size()) + "-node tree";
  const std::string name = "oracle_agreement_" + std::string(to_string(table.scheme()));
  if (table.size() != tree.size()) {
    report.checks.push_back({name, false,
                             "label table has " + std::to_string(table.size()) +
                                 " rows for a tree of " + std::to_string(tree.size()) + " nodes"});
    return report;
  }
  std::uint64_t mismatches = 0;
  std::string detail;
  auto decide = [&](NodeId u, NodeId v) { return table.decide(u, v); };
  report.stats.pairs_checked =
      detail::compare_pairs(tree, decide, decide, options, [&](NodeId u, NodeId v, bool e) {
        if (mismatches++ < 8) {
          if (!detail.empty()) detail += "; ";
          detail += "u=" + std::to_string(u) + " v=" + std::to_string(v) + " expected " +
                    (e ? "1" : "0");
        }
      });
  report.stats.max_label_bits = table.label_bits();
  if (mismatches) detail = std::to_string(mismatches) + " mismatches; " + detail;
  report.checks.push_back({name, mismatches == 0, detail});
  return report;
}

bool tight_offset_suffices(const SchemeParams& params, std::uint64_t max_delta) {
  return max_delta + 1 <= 4 * std::uint64_t{params.log_n()};
}

VerificationReport check_label_budget(const Labeling& labeling) {
  VerificationReport report;
  report.tree_id = std::to_string(labeling.labels.size()) + "-node tree";
  const LabelLayout& layout = labeling.layout;
  const SchemeParams& params = layout.params();
  const unsigned expected = params.log_n() + 6 * params.loglog_n() +
                            (layout.offset_field() == OffsetField::kWide ? 8 : 7);

  Violations width("label_width", 8);
  if (layout.total_bits() != expected) {
    width.add("layout width " + std::to_string(layout.total_bits()) + " != " +
              std::to_string(expected));
  }
  Violations delta("offset_range", 8);
  std::uint64_t max_delta = 0;
  for (std::size_t v = 0; v < labeling.labels.size(); ++v) {
    const LabelWord bits = labeling.labels[v].bits;
    if (layout.total_bits() < 128 && (bits >> layout.total_bits()) != 0) {
      width.add("label of node " + std::to_string(v) + " wider than " +
                std::to_string(layout.total_bits()) + " bits");
    }
    const auto t = static_cast<std::uint64_t>((bits >> layout.sup_delta().shift) &
                                              ((LabelWord{1} << layout.sup_delta().width) - 1));
    max_delta = std::max(max_delta, t);
    if (t > 4 * std::uint64_t{params.log_n()} + 1) {
      delta.add("node " + std::to_string(v) + " has t=" + std::to_string(t) + " > 4 log n + 1");
    }
  }
  report.checks.push_back(width.result());
  report.checks.push_back(delta.result());
  const bool tight = tight_offset_suffices(params, max_delta);
  report.checks.push_back(
      {"tight_constant", true,
       std::string(tight ? "t <= 4 log n - 1 on this tree; +7 constant suffices"
                         : "t reaches 4 log n or more; +8 constant needed") +
           " (max t=" + std::to_string(max_delta) + ", built with +" +
           (layout.offset_field() == OffsetField::kWide ? "8" : "7") + ")"});
  report.stats.max_label_bits = layout.total_bits();
  report.stats.max_delta = max_delta;
  return report;
}

VerificationReport check_label_budget(const ClassicLabeling& labeling, std::uint64_t family_size) {
  VerificationReport report;
  report.tree_id = std::to_string(labeling.labels.size()) + "-node tree";
  const unsigned expected = 2 * classic_field_bits(family_size);
  Violations width("label_width", 8);
  if (labeling.total_bits() != expected) {
    width.add("width " + std::to_string(labeling.total_bits()) + " != " +
              std::to_string(expected));
  }
  for (std::size_t v = 0; v < labeling.labels.size(); ++v) {
    const ClassicLabel l = labeling.labels[v];
    if ((l.dfs_hi >> labeling.field_bits) != 0 || l.dfs_lo > l.dfs_hi) {
      width.add("label of node " + std::to_string(v) + " out of range");
    }
  }
  report.checks.push_back(width.result());
  report.stats.max_label_bits = labeling.total_bits();
  return report;
}

VerificationReport verify_tree(const RootedTree& tree, Scheme scheme, const SchemeParams& params,
                               const OracleCheckOptions& options) {
  VerificationReport report;
  report.tree_id = std::to_string(tree.size()) + "-node tree";
  if (scheme == Scheme::kOptimal) {
    const DecoratedTree d = decorate(tree);
    const IntervalAssignment assignment = assign_intervals(d, params);
    VerificationReport lpo = check_lpo(d, assignment.intervals, params);
    lpo.stats.recursion_steps = 0;
    report.merge(lpo);
    report.merge(check_label_budget(
        label_nodes(d, assignment, LabelLayout(params, options.offset_field))));
    VerificationReport oracle = check_scheme_vs_oracle(tree, scheme, params, options);
    report.merge(oracle);
  } else {
    report.merge(check_label_budget(classic_mark(tree, params.family_size()), params.family_size()));
    report.merge(check_scheme_vs_oracle(tree, scheme, params, options));
  }
  return report;
}

}  // namespace ancestry
