#include "efpm/market.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "efpm/kernels.hpp"

namespace efpm {

namespace {

void check_values(const std::vector<double>& xs, const char* what) {
  for (double x : xs) {
    if (!std::isfinite(x)) {
      throw Error(Errc::non_finite_value, std::string(what) + " must be finite");
    }
    if (x <= 0.0) {
      throw Error(Errc::non_positive_value,
                  std::string(what) + " must be strictly positive");
    }
  }
}

}  // namespace

void ensure_valid(const Instance& inst) {
  if (inst.budgets.size() != inst.qualities.size()) {
    throw Error(Errc::length_mismatch, "budgets and qualities differ in length");
  }
  if (inst.budgets.empty()) {
    throw Error(Errc::empty_instance, "need at least one buyer and one item");
  }
  check_values(inst.budgets, "budgets");
  check_values(inst.qualities, "qualities");
  if (!std::isfinite(max_valuation(inst))) {
    throw Error(Errc::non_finite_value, "largest valuation overflows a double");
  }
}

Instance validate_instance(std::vector<double> budgets,
                           std::vector<double> qualities) {
  Instance inst{std::move(budgets), std::move(qualities)};
  ensure_valid(inst);
  return inst;
}

double valuation(const Instance& inst, std::size_t buyer, std::size_t item) {
  if (buyer >= inst.size() || item >= inst.size()) {
    throw Error(Errc::index_out_of_range, "buyer or item index out of range");
  }
  return inst.budgets[buyer] * inst.qualities[item];
}

double max_valuation(const Instance& inst) {
  const double b = *std::max_element(inst.budgets.begin(), inst.budgets.end());
  const double q = *std::max_element(inst.qualities.begin(), inst.qualities.end());
  return b * q;
}

double default_tolerance(const Instance& inst) {
  return 1e-9 * (1.0 + max_valuation(inst));
}

namespace {

std::vector<int> rank_descending(const std::vector<double>& key) {
  std::vector<int> order(key.size());
  std::iota(order.begin(), order.end(), 0);
  // stable: equal keys stay in ascending original index
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return key[a] > key[b]; });
  return order;
}

}  // namespace

SortedView sorted_view(const Instance& inst) {
  return SortedView{rank_descending(inst.budgets), rank_descending(inst.qualities)};
}

bool is_permutation(const Assignment& a, std::size_t n) {
  if (a.item_of.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (int j : a.item_of) {
    if (j < 0 || static_cast<std::size_t>(j) >= n || seen[j]) return false;
    seen[j] = 1;
  }
  return true;
}

Matrix materialize_matrix(const Instance& inst, const SortedView& view) {
  const std::size_t n = inst.size();
  std::vector<double> qs(n);
  for (std::size_t a = 0; a < n; ++a) qs[a] = inst.qualities[view.item_order[a]];
  Matrix m(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    kernels::scale_row(inst.budgets[view.buyer_order[a]], qs.data(), m.row(a), n);
  }
  return m;
}

bool is_inverse_monge(const Matrix& m, double tol) {
  if (!m.square()) {
    throw Error(Errc::non_square_matrix, "inverse-Monge check needs a square matrix");
  }
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!kernels::monge_rows_ok(m.row(i), m.row(i + 1), n, tol)) return false;
  }
  return true;
}

double social_welfare(const Instance& inst, const Assignment& a) {
  const std::size_t n = inst.size();
  if (a.item_of.size() != n) {
    throw Error(Errc::length_mismatch, "assignment length does not match instance");
  }
  double total = 0.0;
  for (std::size_t b = 0; b < n; ++b) {
    const int j = a.item_of[b];
    if (j < 0 || static_cast<std::size_t>(j) >= n) {
      throw Error(Errc::index_out_of_range, "assignment refers to a missing item");
    }
    total += inst.budgets[b] * inst.qualities[j];
  }
  return total;
}

AuditReport audit_envy_free(const Instance& inst, const Outcome& out, double tol) {
  const std::size_t n = inst.size();
  if (out.assignment.item_of.size() != n || out.prices.size() != n ||
      out.surpluses.size() != n) {
    throw Error(Errc::length_mismatch, "outcome does not match instance size");
  }

  AuditReport report;
  report.envy_free = true;
  report.individually_rational = true;
  report.perfect = is_permutation(out.assignment, n);

  const double* q = inst.qualities.data();
  const double* p = out.prices.data();
  double worst = 0.0;

  for (std::size_t b = 0; b < n; ++b) {
    const int j = out.assignment.item_of[b];
    if (j < 0 || static_cast<std::size_t>(j) >= n) continue;  // already not perfect
    const double budget = inst.budgets[b];
    const double own_surplus = budget * q[j] - p[j];

    if (own_surplus < -tol) {
      report.individually_rational = false;
      report.violating_pairs.emplace_back(static_cast<int>(b), j);
    }
    worst = std::min(worst, own_surplus);

    // own item is included in the scan; its term equals own_surplus, so the
    // slack below is always <= 0
    const double best = kernels::best_surplus(budget, q, p, n);
    const double envy_slack = own_surplus - best;
    if (envy_slack < -tol) {
      report.envy_free = false;
      for (std::size_t k = 0; k < n; ++k) {
        if (static_cast<int>(k) == j) continue;
        if (budget * q[k] - p[k] > own_surplus + tol) {
          report.violating_pairs.emplace_back(static_cast<int>(b),
                                              static_cast<int>(k));
        }
      }
    }
    worst = std::min(worst, envy_slack);
  }

  const double price_sum = std::accumulate(out.prices.begin(), out.prices.end(), 0.0);
  report.revenue_consistent =
      std::abs(out.revenue - price_sum) <= tol * static_cast<double>(n);
  report.worst_violation = worst;
  return report;
}

}  // namespace efpm
