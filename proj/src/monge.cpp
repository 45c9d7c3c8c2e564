#include "efpm/monge.hpp"

#include <cassert>
#include <cmath>
#include <numeric>

#include "efpm/kernels.hpp"

namespace efpm {

Assignment assortative_allocate(const SortedView& view) {
  const std::size_t n = view.buyer_order.size();
  Assignment a;
  a.item_of.assign(n, -1);
  for (std::size_t r = 0; r < n; ++r) {
    a.item_of[view.buyer_order[r]] = view.item_order[r];
  }
  return a;
}

namespace {

struct Ranked {
  std::vector<double> budgets;    // descending
  std::vector<double> qualities;  // descending
};

Ranked ranked_arrays(const Instance& inst, const SortedView& view) {
  const std::size_t n = inst.size();
  Ranked r;
  r.budgets.resize(n);
  r.qualities.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    r.budgets[a] = inst.budgets[view.buyer_order[a]];
    r.qualities[a] = inst.qualities[view.item_order[a]];
  }
  return r;
}

void assert_nonincreasing([[maybe_unused]] const std::vector<double>& p) {
#ifndef NDEBUG
  for (std::size_t a = 0; a + 1 < p.size(); ++a) {
    assert(p[a] >= p[a + 1] - 1e-9 * (1.0 + std::abs(p[a + 1])));
  }
#endif
}

}  // namespace

SortedPrices compute_prices_scan(const Instance& inst, const SortedView& view) {
  const std::size_t n = inst.size();
  const Ranked r = ranked_arrays(inst, view);
  SortedPrices sp;
  sp.values.resize(n);
  auto& p = sp.values;
  p[n - 1] = r.budgets[n - 1] * r.qualities[n - 1];
  for (std::size_t a = n - 1; a-- > 0;) {
    const double best = kernels::best_surplus(
        r.budgets[a], r.qualities.data() + a + 1, p.data() + a + 1, n - 1 - a);
    p[a] = r.budgets[a] * r.qualities[a] - best;
  }
  assert_nonincreasing(p);
  return sp;
}

SortedPrices compute_prices_adjacent(const Instance& inst, const SortedView& view) {
  const std::size_t n = inst.size();
  const Ranked r = ranked_arrays(inst, view);
  SortedPrices sp;
  sp.values.resize(n);
  auto& p = sp.values;
  p[n - 1] = r.budgets[n - 1] * r.qualities[n - 1];
  for (std::size_t a = n - 1; a-- > 0;) {
    p[a] = r.budgets[a] * r.qualities[a] -
           (r.budgets[a] * r.qualities[a + 1] - p[a + 1]);
  }
  assert_nonincreasing(p);
  return sp;
}

PriceVector prices_to_original(const SortedPrices& sp, const SortedView& view) {
  const std::size_t n = sp.values.size();
  PriceVector prices(n);
  for (std::size_t a = 0; a < n; ++a) prices[view.item_order[a]] = sp.values[a];
  return prices;
}

Outcome solve_monge(const Instance& inst, Pricing pricing) {
  ensure_valid(inst);
  const SortedView view = sorted_view(inst);
  const SortedPrices sp = pricing == Pricing::full_scan
                              ? compute_prices_scan(inst, view)
                              : compute_prices_adjacent(inst, view);

  Outcome out;
  out.assignment = assortative_allocate(view);
  out.prices = prices_to_original(sp, view);
  out.revenue = std::accumulate(out.prices.begin(), out.prices.end(), 0.0);
  const std::size_t n = inst.size();
  out.surpluses.resize(n);
  for (std::size_t b = 0; b < n; ++b) {
    const int j = out.assignment.item_of[b];
    out.surpluses[b] = inst.budgets[b] * inst.qualities[j] - out.prices[j];
  }
  return out;
}

}  // namespace efpm
