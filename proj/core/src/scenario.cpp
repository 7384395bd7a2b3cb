#include "rsnc/scenario.hpp"

#include <cmath>
#include <sstream>

namespace rsnc {

double Scenario::deadline(DestId d, PacketId p) const {
  const auto& dl = dest(d).deadlines;
  auto it = dl.find(p);
  if (it == dl.end()) {
    std::ostringstream msg;
    msg << "no deadline for packet " << p.v << " at destination " << d.v;
    throw std::domain_error(msg.str());
  }
  return it->second;
}

int Scenario::request_count() const {
  int n = 0;
  for (const auto& d : destinations) n += static_cast<int>(d.wants.size());
  return n;
}

namespace {

bool in_packet_range(const Scenario& s, PacketId p) {
  return p.v >= 0 && p.v < s.n_packets;
}

void check_structure(const Scenario& s, std::vector<std::string>& issues) {
  auto add = [&issues](const std::string& msg) { issues.push_back(msg); };

  if (!(s.packet_size > 0.0) || !std::isfinite(s.packet_size))
    add("packet_size must be positive and finite");
  if (s.n_packets < 0) add("n_packets must be nonnegative");
  if (static_cast<std::int32_t>(s.benefits.size()) != s.n_packets)
    add("benefits length must equal n_packets");
  for (std::size_t j = 0; j < s.benefits.size(); ++j) {
    if (!(s.benefits[j] > 0.0) || !std::isfinite(s.benefits[j]))
      add("benefit of packet " + std::to_string(j) + " must be positive");
  }

  for (std::size_t i = 0; i < s.destinations.size(); ++i) {
    const auto& d = s.destinations[i];
    const std::string who = "destination " + std::to_string(i);
    if (!(d.max_rate > 0.0) || !std::isfinite(d.max_rate))
      add(who + ": max_rate must be positive and finite");
    for (PacketId p : d.wants) {
      if (!in_packet_range(s, p))
        add(who + ": wanted packet " + std::to_string(p.v) + " out of range");
      if (d.has.count(p))
        add(who + ": packet " + std::to_string(p.v) +
            " is both wanted and held");
      if (!d.deadlines.count(p))
        add(who + ": wanted packet " + std::to_string(p.v) +
            " has no deadline");
    }
    for (PacketId p : d.has) {
      if (!in_packet_range(s, p))
        add(who + ": held packet " + std::to_string(p.v) + " out of range");
    }
    for (const auto& [p, t] : d.deadlines) {
      if (!d.wants.count(p))
        add(who + ": deadline given for unwanted packet " +
            std::to_string(p.v));
      if (!std::isfinite(t))
        add(who + ": deadline for packet " + std::to_string(p.v) +
            " must be finite");
    }
  }
}

}  // namespace

ValidationReport validate_scenario_structure(const Scenario& s) {
  ValidationReport report;
  check_structure(s, report.issues);
  return report;
}

ValidationReport validate_scenario(const Scenario& s) {
  ValidationReport report;
  check_structure(s, report.issues);
  for (std::size_t i = 0; i < s.destinations.size(); ++i) {
    for (const auto& [p, t] : s.destinations[i].deadlines) {
      if (!(t > 0.0))
        report.issues.push_back("destination " + std::to_string(i) +
                                ": deadline for packet " +
                                std::to_string(p.v) + " must be positive");
    }
  }
  return report;
}

double r_min(const Scenario& s, DestId d, PacketId p) {
  if (!s.dest(d).wants.count(p)) {
    std::ostringstream msg;
    msg << "packet " << p.v << " is not wanted by destination " << d.v;
    throw std::domain_error(msg.str());
  }
  const double t = s.deadline(d, p);
  if (!(t > 0.0)) {
    std::ostringstream msg;
    msg << "deadline for packet " << p.v << " at destination " << d.v
        << " has already lapsed";
    throw std::domain_error(msg.str());
  }
  return s.packet_size / t;
}

bool receives(const Scenario& s, DestId d, double rate) {
  return rate <= s.max_rate(d) + kEps;
}

Scenario advance_deadlines(const Scenario& s, double elapsed) {
  Scenario out = s;
  for (auto& d : out.destinations) {
    for (auto& [p, t] : d.deadlines) t -= elapsed;
  }
  return out;
}

}  // namespace rsnc
