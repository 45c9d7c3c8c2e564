#include "doctest.h"

#include "efpm/io.hpp"
#include "efpm/monge.hpp"
#include "test_util.hpp"

using namespace efpm;
using testutil::make_instance;

TEST_CASE("instance JSON round trip") {
  const Instance inst = make_instance({3, 1}, {2.5, 1});
  const Instance back = io::instance_from_json(io::instance_to_json(inst));
  CHECK(back.budgets == inst.budgets);
  CHECK(back.qualities == inst.qualities);
}

TEST_CASE("instance JSON rejects malformed documents") {
  CHECK_THROWS_AS(io::instance_from_json(io::parse("[1,2]")), Error);
  CHECK_THROWS_AS(io::instance_from_json(io::parse(R"({"budgets":[1]})")), Error);
  CHECK_THROWS_AS(io::instance_from_json(io::parse(R"({"budgets":[1,"x"],"qualities":[1,2]})")),
                  Error);
  CHECK_THROWS_AS(io::parse(R"({"budgets":[1,)"), Error);
  try {
    io::parse("{");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
  }
}

TEST_CASE("instance CSV round trip and header enforcement") {
  const Instance inst = make_instance({3, 1.5}, {2, 1});
  const std::string csv = io::instance_to_csv(inst);
  CHECK(csv.substr(0, 15) == "budget,quality\n");
  const Instance back = io::instance_from_csv(csv);
  CHECK(back.budgets == inst.budgets);
  CHECK(back.qualities == inst.qualities);

  CHECK_THROWS_AS(io::instance_from_csv("b,q\n1,2\n"), Error);
  CHECK_THROWS_AS(io::instance_from_csv("budget,quality\n1\n"), Error);
  CHECK_THROWS_AS(io::instance_from_csv("budget,quality\n1,zebra\n"), Error);
}

TEST_CASE("outcome JSON round trip preserves every field") {
  const Outcome out = solve_monge(make_instance({4, 2, 1}, {3, 2, 1}));
  const Outcome back = io::outcome_from_json(io::parse(io::dump(io::outcome_to_json(out))));
  CHECK(back.assignment.item_of == out.assignment.item_of);
  CHECK(back.prices == out.prices);
  CHECK(back.revenue == out.revenue);
  CHECK(back.surpluses == out.surpluses);
}

TEST_CASE("outcome JSON field order is fixed") {
  const Outcome out = solve_monge(make_instance({3, 1}, {2, 1}));
  const std::string text = io::dump(io::outcome_to_json(out));
  CHECK(text.find("assignment") < text.find("prices"));
  CHECK(text.find("prices") < text.find("revenue"));
  CHECK(text.find("revenue") < text.find("surpluses"));
}

TEST_CASE("outcome JSON rejects inconsistent arrays") {
  CHECK_THROWS_AS(
      io::outcome_from_json(io::parse(
          R"({"assignment":[0,1],"prices":[4],"revenue":5,"surpluses":[2,0]})")),
      Error);
  CHECK_THROWS_AS(
      io::outcome_from_json(io::parse(
          R"({"assignment":[0,1],"prices":[4,1],"surpluses":[2,0]})")),
      Error);
}

TEST_CASE("audit report serializes all verdicts") {
  const Instance inst = make_instance({3, 1}, {2, 1});
  Outcome bad = solve_monge(inst);
  bad.prices[0] += 1.0;  // induce envy without breaking revenue consistency
  bad.revenue += 1.0;
  const AuditReport report = audit_envy_free(inst, bad, default_tolerance(inst));
  const auto j = io::audit_to_json(report);
  CHECK(j["envy_free"] == false);
  CHECK(j["perfect"] == true);
  CHECK(j["violating_pairs"].size() == 1);
}

TEST_CASE("gen spec JSON round trip") {
  GenSpec spec;
  spec.n = 12;
  spec.distribution = Distribution::tie_heavy;
  spec.low = 2;
  spec.high = 8;
  spec.seed = 0xDEADBEEFull;
  spec.distinct_values = 3;
  const GenSpec back = io::genspec_from_json(io::genspec_to_json(spec));
  CHECK(back.n == spec.n);
  CHECK(back.distribution == spec.distribution);
  CHECK(back.low == spec.low);
  CHECK(back.high == spec.high);
  CHECK(back.seed == spec.seed);
  CHECK(back.distinct_values == spec.distinct_values);
}

TEST_CASE("serialization is stable for equal values") {
  const Outcome a = solve_monge(make_instance({3, 1}, {2, 1}));
  const Outcome b = solve_monge(make_instance({3, 1}, {2, 1}));
  CHECK(io::dump(io::outcome_to_json(a)) == io::dump(io::outcome_to_json(b)));
}
