#include <functional>
#include <limits>

#include "doctest.h"

#include "efpm/market.hpp"
#include "efpm/monge.hpp"
#include "test_util.hpp"

using namespace efpm;
using testutil::make_instance;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::parse_error;
}

}  // namespace

TEST_CASE("validate_instance accepts well-formed input") {
  const Instance inst = validate_instance({3, 1}, {2, 1});
  CHECK(inst.size() == 2);
}

TEST_CASE("validate_instance rejects bad input") {
  CHECK(code_of([] { validate_instance({3, 0}, {2, 1}); }) == Errc::non_positive_value);
  CHECK(code_of([] { validate_instance({3, -1}, {2, 1}); }) == Errc::non_positive_value);
  CHECK(code_of([] { validate_instance({3, 1}, {2}); }) == Errc::length_mismatch);
  CHECK(code_of([] { validate_instance({}, {}); }) == Errc::empty_instance);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK(code_of([=] { validate_instance({3, nan}, {2, 1}); }) == Errc::non_finite_value);
  // finite inputs whose product overflows are rejected too
  CHECK(code_of([] { validate_instance({1e300}, {1e300}); }) == Errc::non_finite_value);
}

TEST_CASE("valuation is budget times quality") {
  const Instance inst = make_instance({3, 1}, {2, 1});
  CHECK(valuation(inst, 0, 1) == 3.0);
  CHECK(valuation(inst, 1, 0) == 2.0);
  const Instance inst3 = make_instance({4, 2, 1}, {3, 2, 1});
  CHECK(valuation(inst3, 0, 0) == 12.0);
  CHECK_THROWS_AS(valuation(inst, 2, 0), Error);
}

TEST_CASE("sorted_view ranks by descending key with index tie-break") {
  const SortedView v1 = sorted_view(make_instance({1, 3}, {1, 2}));
  CHECK(v1.buyer_order == std::vector<int>{1, 0});
  CHECK(v1.item_order == std::vector<int>{1, 0});

  const SortedView v2 = sorted_view(make_instance({2, 2}, {5, 7}));
  CHECK(v2.buyer_order == std::vector<int>{0, 1});
  CHECK(v2.item_order == std::vector<int>{1, 0});

  const SortedView v3 = sorted_view(make_instance({4, 2, 1}, {3, 2, 1}));
  CHECK(v3.buyer_order == std::vector<int>{0, 1, 2});
  CHECK(v3.item_order == std::vector<int>{0, 1, 2});
}

TEST_CASE("sorted_view is deterministic") {
  const Instance inst = make_instance({5, 5, 5, 2, 2}, {1, 1, 3, 3, 3});
  const SortedView a = sorted_view(inst);
  const SortedView b = sorted_view(inst);
  CHECK(a.buyer_order == b.buyer_order);
  CHECK(a.item_order == b.item_order);
  CHECK(a.buyer_order == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(a.item_order == std::vector<int>{2, 3, 4, 0, 1});
}

TEST_CASE("materialize_matrix lays out rank-sorted products") {
  const Instance inst = make_instance({3, 1}, {2, 1});
  const Matrix m = materialize_matrix(inst, sorted_view(inst));
  CHECK(m(0, 0) == 6.0);
  CHECK(m(0, 1) == 3.0);
  CHECK(m(1, 0) == 2.0);
  CHECK(m(1, 1) == 1.0);

  // same market with relabeled indices materializes identically
  const Instance perm = make_instance({1, 3}, {1, 2});
  const Matrix mp = materialize_matrix(perm, sorted_view(perm));
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) CHECK(mp(i, j) == m(i, j));
  }

  const Instance inst3 = make_instance({4, 2, 1}, {3, 2, 1});
  const Matrix m3 = materialize_matrix(inst3, sorted_view(inst3));
  const double expected[3][3] = {{12, 8, 4}, {6, 4, 2}, {3, 2, 1}};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(m3(i, j) == expected[i][j]);
  }
}

TEST_CASE("is_inverse_monge on hand matrices") {
  Matrix good(2, 2);
  good(0, 0) = 6; good(0, 1) = 3; good(1, 0) = 2; good(1, 1) = 1;
  CHECK(is_inverse_monge(good, 0.0));

  Matrix bad(2, 2);
  bad(0, 0) = 1; bad(0, 1) = 3; bad(1, 0) = 2; bad(1, 1) = 1;
  CHECK_FALSE(is_inverse_monge(bad, 0.0));

  Matrix rect(2, 3);
  CHECK_THROWS_AS(is_inverse_monge(rect, 0.0), Error);
}

TEST_CASE("sorted rank-1 matrices are inverse Monge") {
  for (const auto& spec : testutil::mixed_specs(60, 1, 24, 77)) {
    const Instance inst = generate(spec.gen);
    const Matrix m = materialize_matrix(inst, sorted_view(inst));
    const double tol = spec.integral ? 0.0 : 1e-9 * max_valuation(inst);
    CHECK(is_inverse_monge(m, tol));
  }
}

TEST_CASE("social_welfare sums realized valuations") {
  const Instance inst = make_instance({3, 1}, {2, 1});
  CHECK(social_welfare(inst, Assignment{{0, 1}}) == 7.0);
  CHECK(social_welfare(inst, Assignment{{1, 0}}) == 5.0);
  const Instance inst3 = make_instance({4, 2, 1}, {3, 2, 1});
  CHECK(social_welfare(inst3, Assignment{{0, 1, 2}}) == 17.0);
  CHECK_THROWS_AS(social_welfare(inst, Assignment{{0}}), Error);
  CHECK_THROWS_AS(social_welfare(inst, Assignment{{0, 5}}), Error);
}

namespace {

Outcome outcome_with_prices(const Instance& inst, Assignment a, PriceVector p) {
  Outcome out;
  out.assignment = std::move(a);
  out.prices = std::move(p);
  out.revenue = 0.0;
  for (double x : out.prices) out.revenue += x;
  out.surpluses.resize(inst.size());
  for (std::size_t b = 0; b < inst.size(); ++b) {
    const int j = out.assignment.item_of[b];
    out.surpluses[b] = inst.budgets[b] * inst.qualities[j] - out.prices[j];
  }
  return out;
}

}  // namespace

TEST_CASE("audit accepts the optimal outcome") {
  const Instance inst = make_instance({3, 1}, {2, 1});
  const AuditReport r =
      audit_envy_free(inst, outcome_with_prices(inst, {{0, 1}}, {4, 1}), 1e-9);
  CHECK(r.all_ok());
  CHECK(r.worst_violation == 0.0);
  CHECK(r.violating_pairs.empty());
}

TEST_CASE("audit flags envy") {
  const Instance inst = make_instance({3, 1}, {2, 1});
  // buyer 0: own surplus 6-5=1, but item 1 offers 3-1=2
  const AuditReport r =
      audit_envy_free(inst, outcome_with_prices(inst, {{0, 1}}, {5, 1}), 1e-9);
  CHECK_FALSE(r.envy_free);
  CHECK(r.individually_rational);
  CHECK(r.perfect);
  CHECK(r.worst_violation == -1.0);
  REQUIRE(r.violating_pairs.size() == 1);
  CHECK(r.violating_pairs[0] == std::pair<int, int>{0, 1});
}

TEST_CASE("audit flags prices above valuation") {
  const Instance inst = make_instance({3, 1}, {2, 1});
  const AuditReport r =
      audit_envy_free(inst, outcome_with_prices(inst, {{0, 1}}, {7, 1}), 1e-9);
  CHECK_FALSE(r.individually_rational);
  CHECK(r.worst_violation == -1.0);  // 6 - 7
}

TEST_CASE("audit flags duplicate sales and revenue drift") {
  const Instance inst = make_instance({3, 1}, {2, 1});
  Outcome dup = outcome_with_prices(inst, {{0, 0}}, {4, 1});
  CHECK_FALSE(audit_envy_free(inst, dup, 1e-9).perfect);

  Outcome drift = outcome_with_prices(inst, {{0, 1}}, {4, 1});
  drift.revenue += 1.0;
  CHECK_FALSE(audit_envy_free(inst, drift, 1e-9).revenue_consistent);

  Outcome short_vec = outcome_with_prices(inst, {{0, 1}}, {4, 1});
  short_vec.prices.pop_back();
  CHECK_THROWS_AS(audit_envy_free(inst, short_vec, 1e-9), Error);
}

TEST_CASE("default tolerance scales with the largest valuation") {
  const Instance inst = make_instance({4, 2, 1}, {3, 2, 1});
  CHECK(max_valuation(inst) == 12.0);
  CHECK(default_tolerance(inst) == doctest::Approx(13e-9));
}

TEST_CASE("audited outcomes from the solver have nonnegative prices") {
  for (const auto& spec : testutil::mixed_specs(40, 1, 16, 4242)) {
    const Instance inst = generate(spec.gen);
    const Outcome out = solve_monge(inst);
    const AuditReport r = audit_envy_free(inst, out, default_tolerance(inst));
    REQUIRE(r.all_ok());
    for (double p : out.prices) CHECK(p >= -default_tolerance(inst));
  }
}
