#include "efpm/generator.hpp"

#include <cmath>

namespace efpm {

const char* distribution_name(Distribution d) {
  switch (d) {
    case Distribution::uniform_real: return "uniform_real";
    case Distribution::uniform_int: return "uniform_int";
    case Distribution::tie_heavy: return "tie_heavy";
    case Distribution::near_degenerate: return "near_degenerate";
  }
  return "?";
}

Distribution distribution_from_name(const std::string& name) {
  if (name == "uniform_real") return Distribution::uniform_real;
  if (name == "uniform_int") return Distribution::uniform_int;
  if (name == "tie_heavy") return Distribution::tie_heavy;
  if (name == "near_degenerate") return Distribution::near_degenerate;
  throw Error(Errc::invalid_spec, "unknown distribution: " + name);
}

namespace {

void check_spec(const GenSpec& spec) {
  if (spec.n < 1) throw Error(Errc::invalid_spec, "n must be at least 1");
  if (!std::isfinite(spec.low) || !std::isfinite(spec.high)) {
    throw Error(Errc::invalid_spec, "low/high must be finite");
  }
  if (spec.low <= 0.0) throw Error(Errc::invalid_spec, "low must be positive");
  if (spec.high < spec.low) throw Error(Errc::invalid_spec, "high must be >= low");
  if (spec.distribution == Distribution::uniform_int &&
      std::floor(spec.high) < std::ceil(spec.low)) {
    throw Error(Errc::invalid_spec, "no integers in [low, high]");
  }
  if (spec.distribution == Distribution::tie_heavy && spec.distinct_values < 1) {
    throw Error(Errc::invalid_spec, "distinct_values must be at least 1");
  }
}

void fill(std::vector<double>& out, const GenSpec& spec, SplitMix64& rng) {
  switch (spec.distribution) {
    case Distribution::uniform_real: {
      for (double& x : out) x = spec.low + (spec.high - spec.low) * rng.next_unit();
      break;
    }
    case Distribution::uniform_int: {
      const auto lo = static_cast<std::int64_t>(std::ceil(spec.low));
      const auto hi = static_cast<std::int64_t>(std::floor(spec.high));
      const auto span = static_cast<std::uint64_t>(hi - lo + 1);
      for (double& x : out) {
        x = static_cast<double>(lo + static_cast<std::int64_t>(rng.next_below(span)));
      }
      break;
    }
    case Distribution::tie_heavy: {
      const std::size_t d = spec.distinct_values;
      const double step =
          d > 1 ? (spec.high - spec.low) / static_cast<double>(d - 1) : 0.0;
      for (double& x : out) {
        x = spec.low + static_cast<double>(rng.next_below(d)) * step;
      }
      break;
    }
    case Distribution::near_degenerate: {
      for (double& x : out) x = spec.low;
      out[rng.next_below(out.size())] = spec.high;
      break;
    }
  }
}

}  // namespace

Instance generate(const GenSpec& spec) {
  check_spec(spec);
  SplitMix64 rng(spec.seed);
  std::vector<double> budgets(spec.n);
  std::vector<double> qualities(spec.n);
  fill(budgets, spec, rng);
  fill(qualities, spec, rng);
  return validate_instance(std::move(budgets), std::move(qualities));
}

}  // namespace efpm
