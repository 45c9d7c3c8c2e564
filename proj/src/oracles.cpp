#include "efpm/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "efpm/kernels.hpp"

namespace efpm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double max_entry(const Matrix& m) {
  double top = -kInf;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) top = std::max(top, m(i, j));
  }
  return top;
}

}  // namespace

MatchingResult max_weight_perfect_matching(const Matrix& m) {
  if (!m.square()) {
    throw Error(Errc::non_square_matrix, "matching needs a square matrix");
  }
  const int n = static_cast<int>(m.rows());
  const double top = max_entry(m);
  // cost(i,j) = top - m(i,j) >= 0; minimizing it maximizes the weight
  const auto cost = [&](int i, int j) { return top - m(i, j); };

  // Potentials-based shortest augmenting path method, 1-indexed with a
  // virtual row/column 0.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      int j1 = 0;
      double delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }

  MatchingResult result;
  result.assignment.item_of.assign(n, -1);
  for (int j = 1; j <= n; ++j) {
    if (p[j]) result.assignment.item_of[p[j] - 1] = j - 1;
  }
  for (int i = 0; i < n; ++i) result.welfare += m(i, result.assignment.item_of[i]);
  return result;
}

DifferenceConstraintGraph build_difference_constraint_graph(const Matrix& m,
                                                            const Assignment& a) {
  if (!m.square()) {
    throw Error(Errc::non_square_matrix, "pricing needs a square matrix");
  }
  const std::size_t n = m.rows();
  if (!is_permutation(a, n)) {
    throw Error(Errc::length_mismatch, "allocation is not a permutation");
  }
  std::vector<int> buyer_of(n);  // inverse of item_of
  for (std::size_t b = 0; b < n; ++b) buyer_of[a.item_of[b]] = static_cast<int>(b);

  DifferenceConstraintGraph g;
  g.node_count = static_cast<int>(n) + 1;
  const int source = static_cast<int>(n);
  g.edges.reserve(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    const int b = buyer_of[j];
    g.edges.push_back({source, static_cast<int>(j), m(b, j)});
    for (std::size_t k = 0; k < n; ++k) {
      if (k == j) continue;
      // buyer b owns j and must not envy k: p_j <= p_k + (v_bj - v_bk)
      g.edges.push_back({static_cast<int>(k), static_cast<int>(j), m(b, j) - m(b, k)});
    }
  }
  return g;
}

namespace {

NegativeCycle extract_cycle(const DifferenceConstraintGraph& g,
                            const std::vector<int>& pred, int start,
                            const std::vector<int>& buyer_of, const Matrix& m) {
  // Walk predecessors until a node repeats; that node lies on the cycle.
  std::vector<char> seen(g.node_count, 0);
  int cur = start;
  while (cur != -1 && !seen[cur]) {
    seen[cur] = 1;
    cur = pred[cur];
  }
  NegativeCycle cycle;
  if (cur == -1) return cycle;  // should not happen; see caller
  std::vector<int> nodes;
  int x = cur;
  do {
    nodes.push_back(x);
    x = pred[x];
  } while (x != cur);
  std::reverse(nodes.begin(), nodes.end());  // pred walk is against edge direction
  cycle.nodes = nodes;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const int u = nodes[i];
    const int v = nodes[(i + 1) % nodes.size()];
    cycle.weight += m(buyer_of[v], v) - m(buyer_of[v], u);
  }
  return cycle;
}

}  // namespace

PricingResult price_by_difference_constraints(const Matrix& m, const Assignment& a,
                                              double tol) {
  const DifferenceConstraintGraph g = build_difference_constraint_graph(m, a);
  const std::size_t n = m.rows();
  std::vector<int> buyer_of(n);
  for (std::size_t b = 0; b < n; ++b) buyer_of[a.item_of[b]] = static_cast<int>(b);

  const int source = static_cast<int>(n);
  std::vector<double> dist(g.node_count, kInf);
  std::vector<int> pred(g.node_count, -1);
  dist[source] = 0.0;

  bool changed = true;
  for (int round = 0; round < g.node_count - 1 && changed; ++round) {
    changed = false;
    for (const Edge& e : g.edges) {
      if (dist[e.from] == kInf) continue;
      const double cand = dist[e.from] + e.weight;
      if (cand < dist[e.to]) {
        dist[e.to] = cand;
        pred[e.to] = e.from;
        changed = true;
      }
    }
  }

  PricingResult result;
  if (changed) {
    // One more sweep; any improvement beyond tol certifies a negative cycle.
    for (const Edge& e : g.edges) {
      if (dist[e.from] == kInf) continue;
      if (dist[e.from] + e.weight < dist[e.to] - tol) {
        dist[e.to] = dist[e.from] + e.weight;
        pred[e.to] = e.from;
        result.negative_cycle = extract_cycle(g, pred, e.to, buyer_of, m);
        return result;
      }
    }
  }

  PriceVector prices(n);
  for (std::size_t j = 0; j < n; ++j) prices[j] = dist[j];
  result.prices = std::move(prices);
  return result;
}

Outcome brute_force_solve(const Instance& inst) {
  ensure_valid(inst);
  const std::size_t n = inst.size();
  if (n > kBruteForceMaxN) {
    throw Error(Errc::instance_too_large,
                "brute force handles at most " + std::to_string(kBruteForceMaxN) +
                    " buyers");
  }

  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    kernels::scale_row(inst.budgets[i], inst.qualities.data(), m.row(i), n);
  }
  const double tol = 1e-9 * (1.0 + max_entry(m));

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);

  Outcome best;
  double best_revenue = -kInf;
  do {
    Assignment a{perm};
    const PricingResult priced = price_by_difference_constraints(m, a, tol);
    if (!priced.feasible()) continue;
    const double revenue =
        std::accumulate(priced.prices->begin(), priced.prices->end(), 0.0);
    // strict improvement keeps the lexicographically first tie, since
    // next_permutation enumerates in ascending lexicographic order
    if (revenue > best_revenue) {
      best_revenue = revenue;
      best.assignment = a;
      best.prices = *priced.prices;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  if (best_revenue == -kInf) {
    throw Error(Errc::infeasible_allocation,
                "no allocation admits envy-free prices");  // cannot happen for
                                                           // valid instances
  }
  best.revenue = best_revenue;
  best.surpluses.resize(n);
  for (std::size_t b = 0; b < n; ++b) {
    const int j = best.assignment.item_of[b];
    best.surpluses[b] = inst.budgets[b] * inst.qualities[j] - best.prices[j];
  }
  return best;
}

Outcome solve_hungarian(const Instance& inst) {
  ensure_valid(inst);
  const std::size_t n = inst.size();
  const SortedView view = sorted_view(inst);
  const Matrix m = materialize_matrix(inst, view);
  const MatchingResult match = max_weight_perfect_matching(m);
  const double tol = 1e-9 * (1.0 + max_entry(m));
  const PricingResult priced = price_by_difference_constraints(m, match.assignment, tol);
  if (!priced.feasible()) {
    throw Error(Errc::infeasible_allocation,
                "max-weight matching unexpectedly admits no envy-free prices");
  }

  Outcome out;
  out.assignment.item_of.assign(n, -1);
  out.prices.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    // rank-space buyer a got rank-space item match[a]
    out.assignment.item_of[view.buyer_order[a]] =
        view.item_order[match.assignment.item_of[a]];
  }
  for (std::size_t c = 0; c < n; ++c) {
    out.prices[view.item_order[c]] = (*priced.prices)[c];
  }
  out.revenue = std::accumulate(out.prices.begin(), out.prices.end(), 0.0);
  out.surpluses.resize(n);
  for (std::size_t b = 0; b < n; ++b) {
    const int j = out.assignment.item_of[b];
    out.surpluses[b] = inst.budgets[b] * inst.qualities[j] - out.prices[j];
  }
  return out;
}

}  // namespace efpm
