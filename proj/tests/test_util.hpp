#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "efpm/generator.hpp"
#include "efpm/market.hpp"

// Shared helpers for the unit and acceptance suites.

namespace efpm::testutil {

inline Instance make_instance(std::vector<double> budgets,
                              std::vector<double> qualities) {
  return validate_instance(std::move(budgets), std::move(qualities));
}

// Independent welfare oracle: tries every permutation. Used to cross-check
// the matching solver, so it must not share code with it.
inline double best_welfare_by_enumeration(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double best = -std::numeric_limits<double>::infinity();
  do {
    double w = 0.0;
    for (std::size_t i = 0; i < n; ++i) w += m(i, perm[i]);
    best = std::max(best, w);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

struct SuiteSpec {
  GenSpec gen;
  bool integral = false;  // every budget/quality is integer-valued
};

// Deterministic mix of the four generator families. Family parameters are
// chosen so that three of the four produce integer-valued instances (exact
// in doubles), and one exercises real-valued tolerance handling.
inline std::vector<SuiteSpec> mixed_specs(std::size_t count, std::size_t n_min,
                                          std::size_t n_max, std::uint64_t seed0) {
  std::vector<SuiteSpec> specs;
  specs.reserve(count);
  SplitMix64 pick(seed0);
  for (std::size_t i = 0; i < count; ++i) {
    SuiteSpec s;
    s.gen.n = n_min + pick.next_below(n_max - n_min + 1);
    s.gen.seed = seed0 + 1000003ull * i;
    switch (i % 4) {
      case 0:
        s.gen.distribution = Distribution::uniform_int;
        s.gen.low = 1.0;
        s.gen.high = 1000.0;
        s.integral = true;
        break;
      case 1:
        s.gen.distribution = Distribution::uniform_real;
        s.gen.low = 0.5;
        s.gen.high = 100.0;
        break;
      case 2:
        // unit spacing keeps tie-heavy draws integral
        s.gen.distribution = Distribution::tie_heavy;
        s.gen.low = 1.0;
        s.gen.distinct_values = 1 + pick.next_below(5);
        s.gen.high = static_cast<double>(s.gen.distinct_values);
        s.integral = true;
        break;
      case 3:
        s.gen.distribution = Distribution::near_degenerate;
        s.gen.low = 3.0;
        s.gen.high = 17.0;
        s.integral = true;
        break;
    }
    specs.push_back(s);
  }
  return specs;
}

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace efpm::testutil
