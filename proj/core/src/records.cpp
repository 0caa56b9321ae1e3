#include "tiercrawl/records.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "tiercrawl/errors.hpp"

namespace tiercrawl {

std::string to_string(Tier tier) {
  switch (tier) {
    case Tier::Seed: return "seed";
    case Tier::Static: return "static";
    case Tier::Headless: return "headless";
  }
  return "static";
}

Tier tier_from_string(std::string_view name) {
  if (name == "seed") return Tier::Seed;
  if (name == "static") return Tier::Static;
  if (name == "headless") return Tier::Headless;
  throw Error("unknown tier: " + std::string(name));
}

namespace {

std::string failure_marker(FetchFailure f) {
  switch (f) {
    case FetchFailure::Timeout: return "timeout";
    case FetchFailure::DnsFailure: return "dns_failure";
    case FetchFailure::ConnectFailure: return "connect_failure";
    case FetchFailure::None: break;
  }
  return "";
}

}  // namespace

nlohmann::json record_to_json(const FetchRecord& record) {
  nlohmann::json j;
  j["uri"] = record.uri.serialize();
  j["tier"] = to_string(record.tier);
  if (record.failure == FetchFailure::None)
    j["status"] = record.http_status;
  else
    j["status"] = failure_marker(record.failure);
  j["digest"] = record.content_digest;
  auto& discovered = j["discovered"] = nlohmann::json::array();
  for (const auto& uri : record.discovered) discovered.push_back(uri.serialize());
  j["started"] = record.started;
  j["finished"] = record.finished;
  j["bytes"] = record.bytes;
  return j;
}

FetchRecord record_from_json(const nlohmann::json& j) {
  FetchRecord record;
  record.uri = NormalizedUri::parse(j.at("uri").get<std::string>());
  record.tier = tier_from_string(j.at("tier").get<std::string>());
  const auto& status = j.at("status");
  if (status.is_number()) {
    record.http_status = status.get<int>();
  } else {
    std::string marker = status.get<std::string>();
    if (marker == "timeout") record.failure = FetchFailure::Timeout;
    else if (marker == "dns_failure") record.failure = FetchFailure::DnsFailure;
    else if (marker == "connect_failure") record.failure = FetchFailure::ConnectFailure;
    else throw Error("unknown status marker: " + marker);
  }
  record.content_digest = j.at("digest").get<std::string>();
  for (const auto& uri : j.at("discovered"))
    record.discovered.push_back(NormalizedUri::parse(uri.get<std::string>()));
  record.started = j.at("started").get<double>();
  record.finished = j.at("finished").get<double>();
  record.bytes = j.at("bytes").get<std::uint64_t>();
  return record;
}

void append_crawl_record(const std::filesystem::path& log, const FetchRecord& record) {
  std::ofstream out(log, std::ios::app);
  if (!out) throw IoFailure("cannot open crawl log: " + log.string());
  out << record_to_json(record).dump() << "\n";
}

std::vector<FetchRecord> read_crawl_log(const std::filesystem::path& log) {
  std::ifstream in(log);
  if (!in) throw IoFailure("cannot open crawl log: " + log.string());
  std::vector<FetchRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    records.push_back(record_from_json(nlohmann::json::parse(line)));
  }
  return records;
}

}  // namespace tiercrawl
