#include "ancestry/interval.hpp"

#include <bit>

namespace ancestry {

std::string to_string(ClosedInterval iv) {
  return "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
}

SchemeParams::SchemeParams(unsigned log_n)
    : log_n_(log_n),
      loglog_n_(log_n <= 1 ? 1u : static_cast<unsigned>(std::bit_width(log_n - 1u))) {}

SchemeParams SchemeParams::from_log_n(unsigned log_n) {
  if (log_n < 1 || log_n > kMaxLogN) {
    throw std::invalid_argument("log2 of the family size must lie in [1, " +
                                std::to_string(kMaxLogN) + "], got " + std::to_string(log_n));
  }
  return SchemeParams(log_n);
}

SchemeParams SchemeParams::for_family_size(std::uint64_t requested) {
  if (requested == 0) throw std::invalid_argument("family size must be positive");
  if (requested > (std::uint64_t{1} << kMaxLogN)) {
    throw std::invalid_argument("family size " + std::to_string(requested) +
                                " exceeds 2^" + std::to_string(kMaxLogN));
  }
  const unsigned log_n = requested <= 2 ? 1u : static_cast<unsigned>(std::bit_width(requested - 1));
  return SchemeParams(log_n);
}

bool is_valid(const SchemeParams& params, DyadicInterval iv) {
  if (iv.exponent < 1 || iv.exponent > params.log_n()) return false;
  if (iv.length < 1 || iv.length > params.max_length()) return false;
  if (iv.offset < 1) return false;
  // offset + length <= universe / 2^exponent, without overflow.
  const std::uint64_t cap = params.universe() >> iv.exponent;
  return iv.offset <= cap && iv.length <= cap - iv.offset;
}

ClosedInterval endpoints(const SchemeParams& params, DyadicInterval iv) {
  if (!is_valid(params, iv)) {
    throw std::invalid_argument("dyadic interval (" + std::to_string(iv.exponent) + "," +
                                std::to_string(iv.offset) + "," + std::to_string(iv.length) +
                                ") out of range for log n = " + std::to_string(params.log_n()));
  }
  return {iv.offset << iv.exponent, (iv.offset + iv.length) << iv.exponent};
}

}  // namespace ancestry
