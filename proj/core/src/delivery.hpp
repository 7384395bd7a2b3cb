#pragma once

// Shared delivery bookkeeping for all schedulers: which request got its
// packet, and when. One code path decides reception, decoding, and deadline
// accounting so the algorithms stay comparable.

#include <map>
#include <utility>

#include "rsnc/coding_graph.hpp"
#include "rsnc/scenario.hpp"

namespace rsnc {

struct DeliveryTracker {
  using RequestKey = std::pair<DestId, PacketId>;

  std::map<RequestKey, double> delivered_at;

  bool is_delivered(DestId d, PacketId p) const {
    return delivered_at.count({d, p}) != 0;
  }

  // Applies one transmission arriving at `arrival`: every destination that
  // receives and decodes an undelivered wanted packet gets it, late or not.
  void apply(const Scenario& s, const Transmission& tx, double arrival) {
    for (std::size_t i = 0; i < s.destinations.size(); ++i) {
      const DestId d{static_cast<std::int32_t>(i)};
      auto p = decodes(s, d, tx);
      if (!p) continue;
      const RequestKey key{d, *p};
      if (!delivered_at.count(key)) delivered_at[key] = arrival;
    }
  }

  // Outcomes for every request of `original`, judged against its deadlines.
  std::vector<RequestOutcome> outcomes(const Scenario& original) const {
    std::vector<RequestOutcome> out;
    for (std::size_t i = 0; i < original.destinations.size(); ++i) {
      const DestId d{static_cast<std::int32_t>(i)};
      for (PacketId p : original.destinations[i].wants) {
        RequestOutcome o;
        o.dest = d;
        o.packet = p;
        auto it = delivered_at.find({d, p});
        if (it != delivered_at.end()) o.delivered_at = it->second;
        o.missed =
            !o.delivered_at || *o.delivered_at > original.deadline(d, p) + kEps;
        out.push_back(o);
      }
    }
    return out;
  }

  int on_time_count(const Scenario& original) const {
    int n = 0;
    for (const auto& [key, t] : delivered_at) {
      if (t <= original.deadline(key.first, key.second) + kEps) ++n;
    }
    return n;
  }
};

}  // namespace rsnc
