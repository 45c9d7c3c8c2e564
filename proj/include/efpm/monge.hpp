#pragma once

#include "efpm/market.hpp"

namespace efpm {

// Prices in item rank order (position 0 = best item). Nonincreasing by
// construction of the recurrence.
struct SortedPrices {
  std::vector<double> values;
};

// Rank-a buyer takes the rank-a item. Returned in original indexing.
Assignment assortative_allocate(const SortedView& view);

// Backward price recurrence. The worst item goes to the poorest buyer at
// that buyer's full valuation; each better item is then priced so its buyer
// keeps exactly the best surplus available among all lower-ranked items.
// Scans every lower-ranked item, O(n^2) total.
SortedPrices compute_prices_scan(const Instance& inst, const SortedView& view);

// Same recurrence but only the next-ranked item is inspected, O(n) total.
// The scan maximum is always attained there; the equivalence is enforced by
// property tests before this path is trusted.
SortedPrices compute_prices_adjacent(const Instance& inst, const SortedView& view);

// Map rank-ordered prices back to original item indices.
PriceVector prices_to_original(const SortedPrices& sp, const SortedView& view);

enum class Pricing { full_scan, adjacent };

// Full pipeline: rank buyers and items, allocate assortatively, run the
// price recurrence, translate prices back, fill revenue and surpluses.
Outcome solve_monge(const Instance& inst, Pricing pricing = Pricing::full_scan);

}  // namespace efpm
