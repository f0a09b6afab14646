#include "ancestry/benchmark.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ancestry/classic_scheme.hpp"
#include "ancestry/label_codec.hpp"
#include "ancestry/label_decoder.hpp"

namespace ancestry {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ns(Clock::time_point start, Clock::time_point stop) {
  return std::chrono::duration<double, std::nano>(stop - start).count();
}

std::uint64_t round_up_pow2(std::uint64_t x) { return x <= 2 ? 2 : std::bit_ceil(x); }

volatile std::uint64_t g_sink = 0;

// Times `decide` over the prepared pairs: one untimed warm-up pass, then one
// timed pass. Returns nanoseconds per query.
template <class LabelT, class Decide>
double time_queries(const std::vector<LabelT>& us, const std::vector<LabelT>& vs, Decide decide) {
  std::uint64_t hits = 0;
  for (std::size_t k = 0; k < us.size(); ++k) hits += decide(us[k], vs[k]) ? 1 : 0;
  const auto start = Clock::now();
  for (std::size_t k = 0; k < us.size(); ++k) hits += decide(us[k], vs[k]) ? 1 : 0;
  const auto stop = Clock::now();
  g_sink = g_sink + hits;
  return elapsed_ns(start, stop) / static_cast<double>(us.size());
}

template <class LabelT>
void gather_pairs(const std::vector<LabelT>& labels, std::uint64_t count, std::uint64_t seed,
                  std::vector<LabelT>& us, std::vector<LabelT>& vs) {
  std::mt19937_64 rng(seed);
  __extension__ using u128 = unsigned __int128;
  const auto n = static_cast<std::uint64_t>(labels.size());
  us.resize(count);
  vs.resize(count);
  for (std::uint64_t k = 0; k < count; ++k) {
    us[k] = labels[static_cast<std::size_t>((static_cast<u128>(rng()) * n) >> 64)];
    vs[k] = labels[static_cast<std::size_t>((static_cast<u128>(rng()) * n) >> 64)];
  }
}

TreeFamilySpec instantiate(const TreeFamilySpec& family, std::size_t size, std::uint64_t seed) {
  TreeFamilySpec spec = family;
  spec.size = size;
  spec.seed = seed;
  if (spec.family == TreeFamily::kBroom && spec.path_count > 0 &&
      spec.path_count * spec.path_length + 1 != size) {
    spec.path_length = (size - 1) / spec.path_count;
  }
  return spec;
}

}  // namespace

double median(std::vector<double> values) {
  if (values.empty()) return 0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : (values[mid - 1] + values[mid]) / 2;
}

void validate(const BenchConfig& config) {
  if (config.families.empty()) throw std::invalid_argument("bench: no families");
  if (config.sizes.empty()) throw std::invalid_argument("bench: no sizes");
  if (config.schemes.empty()) throw std::invalid_argument("bench: no schemes");
  if (config.trials < 1) throw std::invalid_argument("bench: trials must be >= 1");
  if (config.queries < 10000) throw std::invalid_argument("bench: need at least 10^4 queries");
  for (const std::size_t size : config.sizes) {
    if (size == 0) throw std::invalid_argument("bench: sizes must be positive");
    for (const auto& family : config.families) {
      if (family.family != TreeFamily::kBroom) continue;
      if (family.path_count == 0 || (size - 1) % family.path_count != 0) {
        throw std::invalid_argument("bench: broom path_count " +
                                    std::to_string(family.path_count) + " does not divide size-1 = " +
                                    std::to_string(size - 1));
      }
    }
  }
  for (const std::uint64_t n : config.family_size_overrides) {
    SchemeParams::for_family_size(n);  // throws when out of range
  }
  bool any = config.family_size_overrides.empty();
  for (const std::size_t size : config.sizes) {
    for (const std::uint64_t n : config.family_size_overrides) any = any || size <= n;
  }
  if (!any) throw std::invalid_argument("bench: every size exceeds every family size");
}

std::vector<BenchRow> run_benchmark(const BenchConfig& config) {
  validate(config);
  std::vector<BenchRow> rows;
  for (const auto& family : config.families) {
    for (const std::size_t size : config.sizes) {
      std::vector<std::uint64_t> family_sizes = config.family_size_overrides;
      if (family_sizes.empty()) family_sizes.push_back(round_up_pow2(size));
      for (const std::uint64_t requested_n : family_sizes) {
        if (size > requested_n) continue;
        const SchemeParams params = SchemeParams::for_family_size(requested_n);
        for (const Scheme scheme : config.schemes) {
          std::vector<double> mark_times;
          std::vector<double> query_times;
          BenchRow base;
          base.family = std::string(to_string(family.family));
          base.node_count = size;
          base.family_size = scheme == Scheme::kOptimal ? params.family_size() : requested_n;
          base.scheme = scheme;
          base.queries_measured = config.queries;

          for (unsigned trial = 0; trial < config.trials; ++trial) {
            const std::uint64_t trial_seed = config.seed + trial;
            const RootedTree tree = generate_tree(instantiate(family, size, trial_seed));
            BenchRow row = base;
            row.trial = static_cast<int>(trial);
            if (scheme == Scheme::kOptimal) {
              if (trial == 0) (void)mark(tree, params);
              const auto start = Clock::now();
              const Labeling labeling = mark(tree, params);
              const auto stop = Clock::now();
              row.mark_wall_time_ns = elapsed_ns(start, stop);
              row.max_label_bits = labeling.layout.total_bits();
              std::vector<Label> us, vs;
              gather_pairs(labeling.labels, config.queries, trial_seed ^ 0x9e3779b97f4a7c15ULL, us,
                           vs);
              const AncestryDecoder decoder(labeling.layout);
              row.mean_query_ns = time_queries(us, vs, decoder);
            } else {
              if (trial == 0) (void)classic_mark(tree, requested_n);
              const auto start = Clock::now();
              const ClassicLabeling labeling = classic_mark(tree, requested_n);
              const auto stop = Clock::now();
              row.mark_wall_time_ns = elapsed_ns(start, stop);
              row.max_label_bits = labeling.total_bits();
              std::vector<ClassicLabel> us, vs;
              gather_pairs(labeling.labels, config.queries, trial_seed ^ 0x9e3779b97f4a7c15ULL, us,
                           vs);
              row.mean_query_ns = time_queries(us, vs, [](ClassicLabel a, ClassicLabel b) {
                return classic_decide(a, b);
              });
            }
            mark_times.push_back(row.mark_wall_time_ns);
            query_times.push_back(row.mean_query_ns);
            base.max_label_bits = std::max(base.max_label_bits, row.max_label_bits);
            rows.push_back(row);
          }
          BenchRow summary = base;
          summary.trial = -1;
          summary.mark_wall_time_ns = median(mark_times);
          summary.mean_query_ns = median(query_times);
          rows.push_back(summary);
        }
      }
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "family,node_count,family_size_n,scheme,trial,max_label_bits,mark_wall_time_ns,"
         "mean_query_ns,queries_measured\n";
  out.setf(std::ios::fixed);
  out.precision(3);
  for (const auto& r : rows) {
    out << r.family << ',' << r.node_count << ',' << r.family_size << ',' << to_string(r.scheme)
        << ',' << (r.trial < 0 ? std::string("median") : std::to_string(r.trial)) << ','
        << r.max_label_bits << ',' << r.mark_wall_time_ns << ',' << r.mean_query_ns << ','
        << r.queries_measured << '\n';
  }
  return out.str();
}

}  // namespace ancestry
