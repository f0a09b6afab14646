#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ancestry {

// Raised when an internal invariant of the construction is broken. Never
// caught and clamped: it means the implementation is wrong.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Closed integer interval [lo, hi].
struct ClosedInterval {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  friend bool operator==(const ClosedInterval&, const ClosedInterval&) = default;
};

// I < I' iff I ends before I' starts.
constexpr bool precedes(ClosedInterval first, ClosedInterval second) {
  return first.hi < second.lo;
}

constexpr bool contains(ClosedInterval outer, ClosedInterval inner) {
  return outer.lo <= inner.lo && inner.hi <= outer.hi;
}

constexpr bool strictly_contains(ClosedInterval outer, ClosedInterval inner) {
  return contains(outer, inner) && !(outer == inner);
}

std::string to_string(ClosedInterval iv);

// Parameters of the labeling scheme for the family of trees with at most
// family_size() nodes. family_size() is a power of two in [2, 2^kMaxLogN].
class SchemeParams {
 public:
  // Largest log2 n for which the universe 4 n log n fits in 64 bits.
  static constexpr unsigned kMaxLogN = 56;

  // Rounds up to the next power of two (at least 2).
  static SchemeParams for_family_size(std::uint64_t requested);
  static SchemeParams from_log_n(unsigned log_n);

  std::uint64_t family_size() const noexcept { return std::uint64_t{1} << log_n_; }
  unsigned log_n() const noexcept { return log_n_; }
  // ceil(log2 log_n), and 1 when log_n == 1.
  unsigned loglog_n() const noexcept { return loglog_n_; }
  // 4 n log n; every interval endpoint lies in [1, universe()].
  std::uint64_t universe() const noexcept { return family_size() * 4 * log_n_; }
  // Largest admissible length multiplier b, 4 log n.
  std::uint64_t max_length() const noexcept { return 4 * std::uint64_t{log_n_}; }

  friend bool operator==(const SchemeParams&, const SchemeParams&) = default;

 private:
  explicit SchemeParams(unsigned log_n);

  unsigned log_n_;
  unsigned loglog_n_;
};

// The interval [2^exponent * offset, 2^exponent * (offset + length)].
struct DyadicInterval {
  unsigned exponent = 1;
  std::uint64_t offset = 1;
  std::uint64_t length = 1;

  friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;
};

// exponent in [1, log n], length in [1, 4 log n], offset >= 1 and
// 2^exponent * (offset + length) <= universe.
bool is_valid(const SchemeParams& params, DyadicInterval iv);

// Shifts and adds only. Throws std::invalid_argument when iv is not valid.
ClosedInterval endpoints(const SchemeParams& params, DyadicInterval iv);

}  // namespace ancestry
