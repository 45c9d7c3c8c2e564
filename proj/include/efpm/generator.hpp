#pragma once

#include <cstdint>
#include <string>

#include "efpm/market.hpp"

namespace efpm {

// The sequence generator behind all instance sampling. Fixed algorithm with
// fixed constants so generated instances reproduce bit-for-bit anywhere:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// (the SplitMix64 generator of Steele, Lea and Flood).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // next() mod bound; the modulo bias is immaterial at the ranges used here
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

  // 53-bit mantissa in [0, 1)
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

enum class Distribution { uniform_real, uniform_int, tie_heavy, near_degenerate };

const char* distribution_name(Distribution d);
Distribution distribution_from_name(const std::string& name);  // throws InvalidSpec

struct GenSpec {
  std::size_t n = 0;
  Distribution distribution = Distribution::uniform_int;
  double low = 1.0;
  double high = 1.0;
  std::uint64_t seed = 0;
  std::size_t distinct_values = 2;  // tie_heavy only
};

// Draws budgets then qualities, one value per call, from the named family:
//   uniform_real    i.i.d. uniform on [low, high]
//   uniform_int     i.i.d. uniform integers on [ceil(low), floor(high)]
//   tie_heavy       i.i.d. from distinct_values equally spaced points on
//                   [low, high], forcing many sort ties
//   near_degenerate all entries equal low except one (per array) at high
// Identical specs yield identical instances.
Instance generate(const GenSpec& spec);

}  // namespace efpm
