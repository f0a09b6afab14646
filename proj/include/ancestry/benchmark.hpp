#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ancestry/label_table.hpp"
#include "ancestry/tree_generators.hpp"

namespace ancestry {

struct BenchConfig {
  // Family templates; `size` is replaced by each entry of `sizes`. For brooms
  // path_length is derived from path_count when it does not already match.
  std::vector<TreeFamilySpec> families;
  std::vector<std::size_t> sizes;
  // Family sizes n decoupled from node counts; empty means n = node count
  // rounded up to a power of two. Combinations with size > n are skipped.
  std::vector<std::uint64_t> family_size_overrides;
  unsigned trials = 1;
  std::uint64_t seed = 0;
  std::vector<Scheme> schemes{Scheme::kOptimal, Scheme::kClassic};
  // Queries per timed batch (at least 10^4).
  std::uint64_t queries = 100000;
};

// Throws std::invalid_argument on an unusable configuration.
void validate(const BenchConfig& config);

struct BenchRow {
  std::string family;
  std::size_t node_count = 0;
  std::uint64_t family_size = 0;
  Scheme scheme = Scheme::kOptimal;
  // Trial index, or -1 for the per-configuration median row.
  int trial = 0;
  unsigned max_label_bits = 0;
  double mark_wall_time_ns = 0;
  double mean_query_ns = 0;
  std::uint64_t queries_measured = 0;
};

// Each trial labels a freshly generated tree (seed + trial) after one
// untimed warm-up, times the marker with a monotonic clock, then times a
// batch of random queries over labels laid out contiguously. One row per
// trial plus a median row per configuration.
std::vector<BenchRow> run_benchmark(const BenchConfig& config);

// Columns family,node_count,family_size_n,scheme,trial,max_label_bits,
// mark_wall_time_ns,mean_query_ns,queries_measured.
std::string bench_csv(const std::vector<BenchRow>& rows);

double median(std::vector<double> values);

}  // namespace ancestry
