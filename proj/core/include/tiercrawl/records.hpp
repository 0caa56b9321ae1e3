#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "tiercrawl/uri.hpp"

namespace tiercrawl {

enum class Tier { Seed, Static, Headless };

std::string to_string(Tier tier);
Tier tier_from_string(std::string_view name);

enum class FetchFailure { None, Timeout, DnsFailure, ConnectFailure };

/// One dereference of a URI by either tier. Timestamps are seconds on the
/// crawl's monotonic clock, so finished >= started always holds.
struct FetchRecord {
  NormalizedUri uri;
  Tier tier = Tier::Static;
  int http_status = 0;  // 0 when the fetch failed before a response
  FetchFailure failure = FetchFailure::None;
  std::string content_digest;
  std::vector<NormalizedUri> discovered;
  double started = 0.0;
  double finished = 0.0;
  std::uint64_t bytes = 0;
};

// Crawl log wire format: one JSON object per record per line with fixed
// field names (uri, tier, status, digest, discovered, started, finished,
// bytes). `status` is the integer HTTP status or a failure marker string.
nlohmann::json record_to_json(const FetchRecord& record);
FetchRecord record_from_json(const nlohmann::json& j);

void append_crawl_record(const std::filesystem::path& log, const FetchRecord& record);
std::vector<FetchRecord> read_crawl_log(const std::filesystem::path& log);

}  // namespace tiercrawl
