#pragma once

#include <map>

#include "rsnc/types.hpp"

namespace rsnc {

// Per-destination state: the packets it still wants, the packets it already
// holds as side information, a deadline for every wanted packet, and the
// highest rate at which it can successfully receive.
struct DestinationState {
  std::set<PacketId> wants;
  std::set<PacketId> has;
  std::map<PacketId, double> deadlines;
  double max_rate = 0.0;

  bool operator==(const DestinationState&) const = default;
};

// A single-source broadcast instance: every packet has the same size and a
// per-packet benefit weight; destinations are indexed by position.
struct Scenario {
  double packet_size = 0.0;
  std::int32_t n_packets = 0;
  std::vector<DestinationState> destinations;
  std::vector<double> benefits;

  bool operator==(const Scenario&) const = default;

  const DestinationState& dest(DestId d) const { return destinations.at(d.v); }
  double benefit(PacketId p) const { return benefits.at(p.v); }
  double max_rate(DestId d) const { return dest(d).max_rate; }
  double deadline(DestId d, PacketId p) const;

  // Total number of (destination, wanted packet) requests.
  int request_count() const;
};

struct ValidationReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};

// Full validity check: structural integrity plus positive deadlines.
ValidationReport validate_scenario(const Scenario& s);

// Structural integrity only (indices in range, wants/has disjoint, positive
// sizes/rates/benefits). Deadlines are allowed to be zero or negative so that
// mid-run states with elapsed time can still be inspected and rebuilt.
ValidationReport validate_scenario_structure(const Scenario& s);

// Minimum rate that can still meet the deadline of p at d: packet_size / T.
// Throws std::domain_error if p is not wanted by d or the deadline is not
// positive.
double r_min(const Scenario& s, DestId d, PacketId p);

// Reception predicate: d successfully receives a transmission iff its rate
// does not exceed d's link rate.
bool receives(const Scenario& s, DestId d, double rate);

// Copy of s with every deadline reduced by `elapsed` (may go nonpositive).
Scenario advance_deadlines(const Scenario& s, double elapsed);

}  // namespace rsnc
