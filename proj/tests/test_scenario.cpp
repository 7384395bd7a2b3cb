#include <stdexcept>

#include "doctest.h"
#include "fixtures.hpp"
#include "rsnc/json_io.hpp"
#include "rsnc/scenario.hpp"

using namespace rsnc;
using test::canonical_scenario;

TEST_CASE("canonical scenario validates") {
  const Scenario s = canonical_scenario();
  const auto report = validate_scenario(s);
  CHECK(report.ok());
  CHECK(report.issues.empty());
  CHECK(s.request_count() == 3);
}

TEST_CASE("validation rejects malformed scenarios") {
  SUBCASE("wants and has overlap") {
    Scenario s = canonical_scenario();
    s.destinations[0].has.insert(PacketId{0});
    CHECK_FALSE(validate_scenario(s).ok());
  }
  SUBCASE("wanted packet without a deadline") {
    Scenario s = canonical_scenario();
    s.destinations[1].deadlines.erase(PacketId{1});
    CHECK_FALSE(validate_scenario(s).ok());
  }
  SUBCASE("deadline for an unwanted packet") {
    Scenario s = canonical_scenario();
    s.destinations[2].deadlines[PacketId{0}] = 3.0;
    CHECK_FALSE(validate_scenario(s).ok());
  }
  SUBCASE("non-positive max rate") {
    Scenario s = canonical_scenario();
    s.destinations[0].max_rate = 0.0;
    CHECK_FALSE(validate_scenario(s).ok());
  }
  SUBCASE("packet id out of range") {
    Scenario s = canonical_scenario();
    s.destinations[0].wants.insert(PacketId{7});
    s.destinations[0].deadlines[PacketId{7}] = 1.0;
    CHECK_FALSE(validate_scenario(s).ok());
  }
  SUBCASE("benefit count mismatch") {
    Scenario s = canonical_scenario();
    s.benefits.pop_back();
    CHECK_FALSE(validate_scenario(s).ok());
  }
  SUBCASE("zero deadline fails full validation but not structural") {
    Scenario s = canonical_scenario();
    s.destinations[0].deadlines[PacketId{0}] = 0.0;
    CHECK_FALSE(validate_scenario(s).ok());
    CHECK(validate_scenario_structure(s).ok());
  }
}

TEST_CASE("minimum rate requirement") {
  const Scenario s = canonical_scenario();
  CHECK(test::almost_equal(r_min(s, DestId{0}, PacketId{0}), 2500.0));
  CHECK(test::almost_equal(r_min(s, DestId{1}, PacketId{1}), 1250.0));
  CHECK_THROWS_AS(r_min(s, DestId{0}, PacketId{1}), std::domain_error);

  Scenario lapsed = canonical_scenario();
  lapsed.destinations[0].deadlines[PacketId{0}] = -1.0;
  CHECK_THROWS_AS(r_min(lapsed, DestId{0}, PacketId{0}), std::domain_error);
}

TEST_CASE("reception is a hard rate cutoff") {
  const Scenario s = canonical_scenario();
  CHECK(receives(s, DestId{1}, 2000.0));
  CHECK(receives(s, DestId{1}, 1999.9));
  CHECK_FALSE(receives(s, DestId{1}, 2000.1));
  // boundary sits inside the tolerance band
  CHECK(receives(s, DestId{1}, 2000.0 + 1e-12));
}

TEST_CASE("advancing deadlines shifts every request") {
  Scenario s = advance_deadlines(canonical_scenario(), 2.0);
  CHECK(test::almost_equal(s.deadline(DestId{0}, PacketId{0}), 2.0));
  CHECK(test::almost_equal(s.deadline(DestId{1}, PacketId{1}), 6.0));
  CHECK(test::almost_equal(s.deadline(DestId{2}, PacketId{2}), 6.0));
  s = advance_deadlines(s, 3.0);
  CHECK(test::almost_equal(s.deadline(DestId{0}, PacketId{0}), -1.0));
}

TEST_CASE("scenario json round trip") {
  const Scenario s = canonical_scenario();
  const std::string text = scenario_to_json(s);
  const Scenario back = scenario_from_json(text);
  CHECK(back.packet_size == s.packet_size);
  CHECK(back.n_packets == s.n_packets);
  CHECK(back.benefits == s.benefits);
  REQUIRE(back.destinations.size() == 3);
  for (std::size_t d = 0; d < 3; ++d) {
    CHECK(back.destinations[d].wants == s.destinations[d].wants);
    CHECK(back.destinations[d].has == s.destinations[d].has);
    CHECK(back.destinations[d].deadlines == s.destinations[d].deadlines);
    CHECK(back.destinations[d].max_rate == s.destinations[d].max_rate);
  }
}

TEST_CASE("scenario json rejects bad input") {
  CHECK_THROWS_AS(scenario_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(scenario_from_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(scenario_from_json(R"({"format":"something-else/9"})"),
                  std::invalid_argument);
  // structurally invalid content must not parse either
  Scenario s = canonical_scenario();
  s.destinations[0].has.insert(PacketId{0});
  std::string text = scenario_to_json(s);
  CHECK_THROWS_AS(scenario_from_json(text), std::invalid_argument);
}

TEST_CASE("log json round trip") {
  TransmissionLog log;
  log.algorithm = "rsnc";
  Transmission tx;
  tx.coded_set = {PacketId{1}, PacketId{2}};
  tx.rate = 2000.0;
  tx.delay = 5.0;
  tx.intended = {DestId{1}, DestId{2}};
  log.transmissions.push_back(tx);
  log.outcomes.push_back({DestId{0}, PacketId{0}, 2.0, false});
  log.outcomes.push_back({DestId{1}, PacketId{1}, std::nullopt, true});

  const std::string text = log_to_json(log);
  const TransmissionLog back = log_from_json(text);
  CHECK(back.algorithm == "rsnc");
  REQUIRE(back.transmissions.size() == 1);
  CHECK(back.transmissions[0] == tx);
  REQUIRE(back.outcomes.size() == 2);
  CHECK(back.outcomes[0].delivered_at.has_value());
  CHECK_FALSE(back.outcomes[0].missed);
  CHECK_FALSE(back.outcomes[1].delivered_at.has_value());
  CHECK(back.outcomes[1].missed);
  CHECK(back.miss_count() == 1);
}
