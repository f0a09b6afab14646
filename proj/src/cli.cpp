#include "ancestry/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ancestry/benchmark.hpp"
#include "ancestry/classic_scheme.hpp"
#include "ancestry/interval_assignment.hpp"
#include "ancestry/label_codec.hpp"
#include "ancestry/label_table.hpp"
#include "ancestry/rooted_tree.hpp"
#include "ancestry/tree_generators.hpp"
#include "ancestry/verification.hpp"

namespace ancestry {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot write '" + path + "'");
  file << content;
}

Scheme parse_scheme(const std::string& name) {
  const auto scheme = scheme_from_string(name);
  if (!scheme) throw std::invalid_argument("unknown scheme '" + name + "' (optimal|classic)");
  return *scheme;
}

TreeFamily parse_family(const std::string& name) {
  const auto family = tree_family_from_string(name);
  if (!family) throw std::invalid_argument("unknown tree family '" + name + "'");
  return *family;
}

struct GenArgs {
  std::string family;
  std::size_t size = 0;
  std::uint64_t seed = 0;
  std::size_t path_count = 0;
  std::size_t path_length = 0;
  std::string out;
};

struct LabelArgs {
  std::string input;
  std::string scheme = "optimal";
  std::uint64_t family_size = 0;
  std::string out;
  std::string intervals_out;
};

struct QueryArgs {
  std::string labels;
  std::string pairs;
  NodeId u = kNoParent;
  NodeId v = kNoParent;
  std::string out;
};

struct VerifyArgs {
  std::string input;
  std::string scheme = "optimal";
  std::uint64_t family_size = 0;
  std::string labels;
  bool exhaustive = false;
  std::size_t enumerate_max = 0;
  std::uint64_t pair_budget = 100000;
  std::uint64_t seed = 0;
  std::string report_csv;
};

struct BenchArgs {
  std::vector<std::string> families{"random-recursive"};
  std::vector<std::size_t> sizes;
  std::vector<std::uint64_t> family_sizes;
  std::vector<std::string> schemes{"optimal", "classic"};
  unsigned trials = 5;
  std::uint64_t seed = 0;
  std::uint64_t queries = 100000;
  std::size_t path_count = 0;
  std::string out;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  TreeFamilySpec spec;
  spec.family = parse_family(a.family);
  spec.size = a.size;
  spec.seed = a.seed;
  spec.path_count = a.path_count;
  spec.path_length = a.path_length;
  write_output(a.out, serialize_parent_array(generate_tree(spec)) + "\n", out);
  return kExitOk;
}

int cmd_label(const LabelArgs& a, std::ostream& out) {
  const RootedTree tree = parse_parent_array(read_file(a.input));
  const Scheme scheme = parse_scheme(a.scheme);
  if (a.family_size < tree.size()) {
    throw std::invalid_argument("tree of " + std::to_string(tree.size()) +
                                " nodes exceeds family size " + std::to_string(a.family_size));
  }
  if (scheme == Scheme::kOptimal) {
    const SchemeParams params = SchemeParams::for_family_size(a.family_size);
    const DecoratedTree d = decorate(tree);
    const IntervalAssignment assignment = assign_intervals(d, params);
    const Labeling labeling = label_nodes(d, assignment, LabelLayout(params));
    write_output(a.out, write_label_csv(labeling), out);
    if (!a.intervals_out.empty()) {
      write_output(a.intervals_out, write_interval_csv(params, assignment), out);
    }
  } else {
    if (!a.intervals_out.empty()) {
      throw std::invalid_argument("--intervals-out applies to the optimal scheme only");
    }
    write_output(a.out, write_label_csv(classic_mark(tree, a.family_size), a.family_size), out);
  }
  return kExitOk;
}

int cmd_query(const QueryArgs& a, std::ostream& out) {
  const LabelTable table = read_label_csv(read_file(a.labels));
  std::vector<std::pair<NodeId, NodeId>> pairs;
  if (!a.pairs.empty()) pairs = read_pairs(read_file(a.pairs));
  if (a.u != kNoParent || a.v != kNoParent) {
    if (a.u == kNoParent || a.v == kNoParent) {
      throw std::invalid_argument("--u and --v must be given together");
    }
    pairs.emplace_back(a.u, a.v);
  }
  if (pairs.empty()) throw std::invalid_argument("no pairs: give --pairs or --u/--v");
  std::ostringstream answers;
  for (const auto& [u, v] : pairs) {
    const bool yes = table.decide(u, v);  // throws std::out_of_range on unknown ids
    answers << u << ' ' << v << ' ' << (yes ? 1 : 0) << '\n';
  }
  write_output(a.out, answers.str(), out);
  return kExitOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  OracleCheckOptions options;
  options.exhaustive = a.exhaustive;
  options.pair_budget = a.pair_budget;
  options.seed = a.seed;
  const Scheme scheme = parse_scheme(a.scheme);

  VerificationReport report;
  if (a.enumerate_max > 0) {
    const SchemeParams params = SchemeParams::for_family_size(a.family_size ? a.family_size : 16);
    if (a.enumerate_max > params.family_size()) {
      throw std::invalid_argument("enumerated trees exceed the family size");
    }
    std::size_t trees = 0;
    std::size_t failed = 0;
    for (std::size_t size = 1; size <= a.enumerate_max; ++size) {
      for (const RootedTree& tree : enumerate_rooted_trees(size, a.enumerate_max)) {
        VerificationReport r = verify_tree(tree, scheme, params, options);
        ++trees;
        if (!r.passed()) {
          ++failed;
          r.tree_id = serialize_parent_array(tree);
          out << r.to_text();
        }
        report.stats.pairs_checked += r.stats.pairs_checked;
        report.stats.max_delta = std::max(report.stats.max_delta, r.stats.max_delta);
        report.stats.max_label_bits = std::max(report.stats.max_label_bits, r.stats.max_label_bits);
      }
    }
    report.tree_id = "all rooted trees of 1.." + std::to_string(a.enumerate_max) + " nodes";
    report.checks.push_back({"corpus", failed == 0,
                             std::to_string(trees) + " trees, " + std::to_string(failed) +
                                 " failing"});
  } else {
    if (a.input.empty()) throw std::invalid_argument("verify needs --input or --enumerate-max");
    const RootedTree tree = parse_parent_array(read_file(a.input));
    if (!a.labels.empty()) {
      const LabelTable table = read_label_csv(read_file(a.labels));
      report = check_table_vs_oracle(tree, table, options);
    } else {
      if (a.family_size == 0) throw std::invalid_argument("verify needs --family-size");
      if (a.family_size < tree.size()) {
        throw std::invalid_argument("tree of " + std::to_string(tree.size()) +
                                    " nodes exceeds family size " +
                                    std::to_string(a.family_size));
      }
      report = verify_tree(tree, scheme, SchemeParams::for_family_size(a.family_size), options);
    }
    report.tree_id = a.input;
  }
  out << report.to_text();
  if (!a.report_csv.empty()) write_output(a.report_csv, report.to_csv(), out);
  return report.passed() ? kExitOk : kExitVerification;
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  BenchConfig config;
  for (const auto& name : a.families) {
    TreeFamilySpec spec;
    spec.family = parse_family(name);
    spec.path_count = a.path_count;
    config.families.push_back(spec);
  }
  config.sizes = a.sizes;
  config.family_size_overrides = a.family_sizes;
  config.schemes.clear();
  for (const auto& s : a.schemes) config.schemes.push_back(parse_scheme(s));
  config.trials = a.trials;
  config.seed = a.seed;
  config.queries = a.queries;
  write_output(a.out, bench_csv(run_benchmark(config)), out);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ancestry labeling schemes: generate trees, label, query, verify, benchmark"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a tree in parent-array format");
  gen_cmd->add_option("--family", gen.family,
                      "path|star|caterpillar|complete-binary|broom|random-recursive")
      ->required();
  gen_cmd->add_option("--size", gen.size, "Number of nodes")->required();
  gen_cmd->add_option("--seed", gen.seed, "Seed (random-recursive)");
  gen_cmd->add_option("--path-count", gen.path_count, "Broom: number of paths");
  gen_cmd->add_option("--path-length", gen.path_length, "Broom: nodes per path");
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");

  LabelArgs label;
  auto* label_cmd = app.add_subcommand("label", "Label a tree; writes the label table CSV");
  label_cmd->add_option("--input", label.input, "Tree file")->required();
  label_cmd->add_option("--scheme", label.scheme, "optimal|classic");
  label_cmd->add_option("--family-size", label.family_size, "Family size n")->required();
  label_cmd->add_option("--out", label.out, "Output file (default stdout)");
  label_cmd->add_option("--intervals-out", label.intervals_out,
                        "Also write node_id,i,a,b,lo,hi (optimal only)");

  QueryArgs query;
  auto* query_cmd = app.add_subcommand("query", "Answer ancestry queries from labels alone");
  query_cmd->add_option("--labels", query.labels, "Label table CSV")->required();
  query_cmd->add_option("--pairs", query.pairs, "File with one 'u v' pair per line");
  query_cmd->add_option("--u", query.u, "Candidate ancestor");
  query_cmd->add_option("--v", query.v, "Candidate descendant");
  query_cmd->add_option("--out", query.out, "Output file (default stdout)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a labeling against the oracle");
  verify_cmd->add_option("--input", verify.input, "Tree file");
  verify_cmd->add_option("--scheme", verify.scheme, "optimal|classic");
  verify_cmd->add_option("--family-size", verify.family_size, "Family size n");
  verify_cmd->add_option("--labels", verify.labels, "Check this label table instead of marking");
  verify_cmd->add_flag("--exhaustive", verify.exhaustive, "Check every ordered pair");
  verify_cmd->add_option("--enumerate-max", verify.enumerate_max,
                         "Verify every rooted tree with up to this many nodes");
  verify_cmd->add_option("--pair-budget", verify.pair_budget, "Sampled pairs for large trees");
  verify_cmd->add_option("--seed", verify.seed, "Seed for pair sampling");
  verify_cmd->add_option("--report-csv", verify.report_csv, "Also write check,status,detail");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time marking and queries; writes CSV");
  bench_cmd->add_option("--families", bench.families, "Tree families")->delimiter(',');
  bench_cmd->add_option("--sizes", bench.sizes, "Node counts")->delimiter(',')->required();
  bench_cmd->add_option("--family-sizes", bench.family_sizes,
                        "Family sizes n decoupled from node counts")
      ->delimiter(',');
  bench_cmd->add_option("--schemes", bench.schemes, "optimal,classic")->delimiter(',');
  bench_cmd->add_option("--trials", bench.trials, "Trials per configuration");
  bench_cmd->add_option("--seed", bench.seed, "Base seed");
  bench_cmd->add_option("--queries", bench.queries, "Queries per timed batch (>= 10000)");
  bench_cmd->add_option("--path-count", bench.path_count, "Broom: number of paths");
  bench_cmd->add_option("--out", bench.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitValidation;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*label_cmd) return cmd_label(label, out);
    if (*query_cmd) return cmd_query(query, out);
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*bench_cmd) return cmd_bench(bench, out);
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << '\n';
    std::abort();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitValidation;
}

}  // namespace ancestry
