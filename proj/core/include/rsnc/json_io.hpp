#pragma once

#include "rsnc/scenario.hpp"
#include "rsnc/types.hpp"

namespace rsnc {

// Scenario documents carry the version tag "rsnc-scenario/1", transmission
// logs the tag "rsnc-log/1". Serialization is deterministic: fixed key order,
// packet/destination sets sorted ascending, shortest round-trip numbers.

std::string scenario_to_json(const Scenario& s);

// Parses and structurally validates. Throws std::invalid_argument on
// malformed JSON, wrong version tag, or an invalid scenario.
Scenario scenario_from_json(const std::string& text);

std::string log_to_json(const TransmissionLog& log);
TransmissionLog log_from_json(const std::string& text);

}  // namespace rsnc
