#include "rsnc/json_io.hpp"

#include <json.hpp>

namespace rsnc {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kScenarioTag = "rsnc-scenario/1";
constexpr const char* kLogTag = "rsnc-log/1";

ordered_json id_set_to_json(const std::set<PacketId>& ids) {
  ordered_json arr = ordered_json::array();
  for (PacketId p : ids) arr.push_back(p.v);
  return arr;
}

std::set<PacketId> packet_set_from_json(const nlohmann::json& arr) {
  std::set<PacketId> out;
  for (const auto& v : arr) out.insert(PacketId{v.get<std::int32_t>()});
  return out;
}

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument(what);
}

}  // namespace

std::string scenario_to_json(const Scenario& s) {
  ordered_json j;
  j["version"] = kScenarioTag;
  j["packet_size"] = s.packet_size;
  j["benefits"] = s.benefits;
  ordered_json dests = ordered_json::array();
  for (const auto& d : s.destinations) {
    ordered_json dj;
    dj["wants"] = id_set_to_json(d.wants);
    dj["has"] = id_set_to_json(d.has);
    ordered_json dl = ordered_json::object();
    for (const auto& [p, t] : d.deadlines) dl[std::to_string(p.v)] = t;
    dj["deadlines"] = dl;
    dj["max_rate"] = d.max_rate;
    dests.push_back(std::move(dj));
  }
  j["destinations"] = std::move(dests);
  return j.dump(2) + "\n";
}

Scenario scenario_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("scenario parse error: ") + e.what());
  }
  try {
    if (!j.is_object() || j.value("version", "") != kScenarioTag)
      fail(std::string("expected scenario version tag ") + kScenarioTag);
    Scenario s;
    s.packet_size = j.at("packet_size").get<double>();
    s.benefits = j.at("benefits").get<std::vector<double>>();
    s.n_packets = static_cast<std::int32_t>(s.benefits.size());
    for (const auto& dj : j.at("destinations")) {
      DestinationState d;
      d.wants = packet_set_from_json(dj.at("wants"));
      d.has = packet_set_from_json(dj.at("has"));
      for (const auto& [key, val] : dj.at("deadlines").items())
        d.deadlines[PacketId{std::stoi(key)}] = val.get<double>();
      d.max_rate = dj.at("max_rate").get<double>();
      s.destinations.push_back(std::move(d));
    }
    auto report = validate_scenario(s);
    if (!report.ok()) fail("invalid scenario: " + report.issues.front());
    return s;
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("scenario field error: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& e) {
    fail(std::string("scenario field error: ") + e.what());
  }
}

std::string log_to_json(const TransmissionLog& log) {
  ordered_json j;
  j["version"] = kLogTag;
  j["algorithm"] = log.algorithm;
  ordered_json txs = ordered_json::array();
  for (const auto& tx : log.transmissions) {
    ordered_json tj;
    tj["coded_set"] = id_set_to_json(tx.coded_set);
    tj["rate"] = tx.rate;
    tj["delay"] = tx.delay;
    ordered_json intended = ordered_json::array();
    for (DestId d : tx.intended) intended.push_back(d.v);
    tj["intended"] = std::move(intended);
    txs.push_back(std::move(tj));
  }
  j["transmissions"] = std::move(txs);
  ordered_json outs = ordered_json::array();
  for (const auto& o : log.outcomes) {
    ordered_json oj;
    oj["dest"] = o.dest.v;
    oj["packet"] = o.packet.v;
    if (o.delivered_at)
      oj["delivered_at"] = *o.delivered_at;
    else
      oj["delivered_at"] = nullptr;
    oj["missed"] = o.missed;
    outs.push_back(std::move(oj));
  }
  j["outcomes"] = std::move(outs);
  return j.dump(2) + "\n";
}

TransmissionLog log_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("log parse error: ") + e.what());
  }
  try {
    if (!j.is_object() || j.value("version", "") != kLogTag)
      fail(std::string("expected log version tag ") + kLogTag);
    TransmissionLog log;
    log.algorithm = j.at("algorithm").get<std::string>();
    for (const auto& tj : j.at("transmissions")) {
      Transmission tx;
      tx.coded_set = packet_set_from_json(tj.at("coded_set"));
      tx.rate = tj.at("rate").get<double>();
      tx.delay = tj.at("delay").get<double>();
      for (const auto& v : tj.at("intended"))
        tx.intended.insert(DestId{v.get<std::int32_t>()});
      log.transmissions.push_back(std::move(tx));
    }
    for (const auto& oj : j.at("outcomes")) {
      RequestOutcome o;
      o.dest = DestId{oj.at("dest").get<std::int32_t>()};
      o.packet = PacketId{oj.at("packet").get<std::int32_t>()};
      if (!oj.at("delivered_at").is_null())
        o.delivered_at = oj.at("delivered_at").get<double>();
      o.missed = oj.at("missed").get<bool>();
      log.outcomes.push_back(o);
    }
    return log;
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("log field error: ") + e.what());
  }
}

}  // namespace rsnc
