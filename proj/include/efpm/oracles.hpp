#pragma once

#include <optional>

#include "efpm/market.hpp"

namespace efpm {

inline constexpr std::size_t kBruteForceMaxN = 8;

struct MatchingResult {
  Assignment assignment;  // row i of the matrix -> assigned column
  double welfare = 0.0;
};

// Maximum-weight perfect matching, Kuhn-Munkres with potentials, O(n^3).
// Maximization is reduced to minimization by subtracting every entry from
// the largest one, which keeps reduced costs nonnegative. Row scan order is
// fixed, so the result is deterministic.
MatchingResult max_weight_perfect_matching(const Matrix& m);

struct Edge {
  int from;
  int to;
  double weight;
};

// Constraint graph for the maximal envy-free prices of a fixed allocation.
// Node j is item j; node n is a virtual source. Edge u -> v with weight w
// encodes p_v <= p_u + w; a source edge encodes p_v <= the assigned buyer's
// value for v. Shortest distances from the source are the coordinate-wise
// maximal feasible prices.
struct DifferenceConstraintGraph {
  int node_count = 0;  // n items plus the source (node n)
  std::vector<Edge> edges;
};

DifferenceConstraintGraph build_difference_constraint_graph(const Matrix& m,
                                                            const Assignment& a);

struct NegativeCycle {
  std::vector<int> nodes;  // item nodes in edge direction
  double weight = 0.0;
};

struct PricingResult {
  std::optional<PriceVector> prices;          // set iff feasible
  std::optional<NegativeCycle> negative_cycle;  // witness when infeasible

  bool feasible() const { return prices.has_value(); }
};

// Bellman-Ford from the virtual source with early exit. Improvements of at
// most tol in the detection sweep count as converged, which keeps real-valued
// instances from reporting phantom cycles; integer-valued matrices are exact
// with tol = 0. A genuine negative cycle means allocation `a` admits no
// envy-free prices that sell every item.
PricingResult price_by_difference_constraints(const Matrix& m, const Assignment& a,
                                              double tol = 0.0);

// Ground truth for tiny markets: enumerates all n! allocations (n <= 8 or
// InstanceTooLarge), prices each feasible one maximally, keeps the best
// revenue. Ties go to the lexicographically smallest assignment.
Outcome brute_force_solve(const Instance& inst);

// Max-weight matching plus shortest-path pricing on the rank-sorted matrix,
// translated back to original indexing. The cubic reference path.
Outcome solve_hungarian(const Instance& inst);

}  // namespace efpm
