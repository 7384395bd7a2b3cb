#pragma once

#include "rsnc/scheduler.hpp"

namespace rsnc {

// Deadline-sensitive coding baseline, rate-oblivious: builds the decodability
// graph without rate conditions, weights each request by the reciprocal of
// its remaining deadline, transmits the maximum-weight clique at the slowest
// member link rate, and drops served or lapsed requests. Coding-aware but
// blind to the rate/deadline coupling, so urgent requests can be dragged
// below their required rate by slow clique partners.
TransmissionLog run_dsf(const Scenario& s);

// Uncoded urgency baseline: each round ranks packets by the deadline slack of
// their most urgent open request divided by the number of open requests, and
// broadcasts the neediest packet uncoded at the slowest link rate among its
// still-meetable requesters. Stops when no open request is meetable. Packet
// id breaks ranking ties.
TransmissionLog run_sin1(const Scenario& s);

}  // namespace rsnc
