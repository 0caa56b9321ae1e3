#pragma once

#include <cstdint>
#include <deque>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "tiercrawl/records.hpp"
#include "tiercrawl/uri.hpp"

namespace tiercrawl {

enum class EntryState { Pending, Claimed, Done, Failed };

struct FrontierEntry {
  std::uint64_t seq = 0;
  NormalizedUri uri;
  DedupKey key;
  Tier discovered_by = Tier::Seed;
  int depth = 0;
  EntryState state = EntryState::Pending;
};

enum class AddOutcome { Inserted, Duplicate };

struct FrontierStats {
  std::size_t frontier_size = 0;  // |F|: distinct dedup keys ever inserted
  std::size_t pending = 0;
  std::size_t done = 0;
  std::size_t failed = 0;
  std::size_t by_tier_static = 0;
  std::size_t by_tier_headless = 0;
  std::size_t by_tier_seed = 0;
  double crawl_rate = 0.0;  // t_URI, filled in by the orchestrator
};

/// Deduplicating crawl frontier. Insertion identity is the dedup key under
/// the active trim policy; scheduling is FIFO within depth (breadth-first).
/// add/claim/mark are safe under concurrent callers. Optionally persists
/// inserts to an append-only JSON-lines log that rebuild() replays.
class Frontier {
 public:
  explicit Frontier(TrimPolicy policy, std::filesystem::path log_path = {});

  AddOutcome add(const NormalizedUri& uri, Tier discovered_by,
                 const FrontierEntry* parent = nullptr);

  /// Claims the oldest pending entry at the shallowest depth, or nothing.
  std::optional<FrontierEntry> claim_next();

  void mark_done(std::uint64_t seq);
  /// Returns the entry to Pending when retries remain, else marks Failed.
  void mark_failed(std::uint64_t seq, bool retry);

  std::size_t size() const;
  std::size_t pending_count() const;
  std::size_t claimed_count() const;
  FrontierStats stats() const;
  const TrimPolicy& policy() const { return policy_; }

  std::vector<DedupKey> snapshot_keys() const;
  std::vector<FrontierEntry> snapshot_entries() const;

  /// Rebuilds a frontier from its insert log; entries whose URIs appear in
  /// the crawl log are marked done, the rest return to pending.
  static Frontier rebuild(TrimPolicy policy, const std::filesystem::path& frontier_log,
                          const std::filesystem::path& crawl_log);

 private:
  AddOutcome add_locked(const NormalizedUri& uri, Tier discovered_by, int depth, bool log);

  TrimPolicy policy_;
  std::filesystem::path log_path_;
  mutable std::mutex mutex_;
  std::vector<FrontierEntry> entries_;
  std::unordered_map<std::string, std::uint64_t> by_key_;
  std::map<int, std::deque<std::uint64_t>> pending_by_depth_;
};

/// Table-4 style analytics over a finished crawl log.
struct DuplicateReport {
  std::size_t uri_duplicates = 0;
  std::size_t uri_and_entity_duplicates = 0;
  double accuracy = 0.0;
};

/// Scans records in order: a record is a URI duplicate when its dedup key
/// was seen earlier, an entity duplicate when its digest was seen earlier.
/// Accuracy treats (key dup, digest dup) as TP and (unique, unique) as TN.
DuplicateReport duplicate_report(const std::vector<FetchRecord>& records,
                                 const TrimPolicy& policy);

struct FrontierOverlap {
  std::size_t only_a = 0;
  std::size_t only_b = 0;
  std::size_t both = 0;
};

/// Euler-diagram counts for two frontiers built under the same policy.
FrontierOverlap frontier_algebra(const std::vector<DedupKey>& a, const std::vector<DedupKey>& b);

}  // namespace tiercrawl
