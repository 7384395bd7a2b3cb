#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsnc {

// Absolute tolerance for comparisons on derived reals (rates, deadlines,
// metric values). Two values within kEps of each other are treated as equal.
inline constexpr double kEps = 1e-9;

struct PacketId {
  std::int32_t v = -1;
  auto operator<=>(const PacketId&) const = default;
};

struct DestId {
  std::int32_t v = -1;
  auto operator<=>(const DestId&) const = default;
};

// One broadcast of an XOR-coded payload. `coded_set` lists the packets in the
// XOR, `intended` the destinations the sender expects to serve. `delay` is
// always packet_size / rate; factories enforce the identity.
struct Transmission {
  std::set<PacketId> coded_set;
  double rate = 0.0;
  std::set<DestId> intended;
  double delay = 0.0;

  bool operator==(const Transmission&) const = default;
};

// Outcome of a single (destination, packet) request. `delivered_at` is empty
// when the packet never reached the destination in decodable form; a late
// delivery keeps its timestamp but still counts as missed.
struct RequestOutcome {
  DestId dest;
  PacketId packet;
  std::optional<double> delivered_at;
  bool missed = true;

  bool operator==(const RequestOutcome&) const = default;
};

struct TransmissionLog {
  std::string algorithm;
  std::vector<Transmission> transmissions;
  std::vector<RequestOutcome> outcomes;  // sorted by (dest, packet)

  int miss_count() const {
    int n = 0;
    for (const auto& o : outcomes) n += o.missed ? 1 : 0;
    return n;
  }
};

// Thrown when a search is asked to exceed its configured instance limits
// (oracle vertex budget, clique enumeration cap).
struct LimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rsnc
