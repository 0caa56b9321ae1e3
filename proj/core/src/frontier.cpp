#include "tiercrawl/frontier.hpp"

#include <fstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "tiercrawl/errors.hpp"

namespace tiercrawl {

Frontier::Frontier(TrimPolicy policy, std::filesystem::path log_path)
    : policy_(std::move(policy)), log_path_(std::move(log_path)) {}

AddOutcome Frontier::add(const NormalizedUri& uri, Tier discovered_by,
                         const FrontierEntry* parent) {
  std::lock_guard lock(mutex_);
  int depth = parent ? parent->depth + 1 : 0;
  return add_locked(uri, discovered_by, depth, true);
}

AddOutcome Frontier::add_locked(const NormalizedUri& uri, Tier discovered_by, int depth,
                                bool log) {
  DedupKey key = dedup_key(uri, policy_);
  if (by_key_.contains(key.key)) return AddOutcome::Duplicate;

  FrontierEntry entry;
  entry.seq = entries_.size();
  entry.uri = uri;
  entry.key = key;
  entry.discovered_by = discovered_by;
  entry.depth = depth;
  by_key_.emplace(key.key, entry.seq);
  pending_by_depth_[depth].push_back(entry.seq);
  entries_.push_back(entry);

  if (log && !log_path_.empty()) {
    std::ofstream out(log_path_, std::ios::app);
    if (!out) throw IoFailure("cannot open frontier log: " + log_path_.string());
    nlohmann::json j;
    j["uri"] = uri.serialize();
    j["key"] = key.key;
    j["tier"] = to_string(discovered_by);
    j["depth"] = depth;
    out << j.dump() << "\n";
  }
  return AddOutcome::Inserted;
}

std::optional<FrontierEntry> Frontier::claim_next() {
  std::lock_guard lock(mutex_);
  while (!pending_by_depth_.empty()) {
    auto it = pending_by_depth_.begin();
    if (it->second.empty()) {
      pending_by_depth_.erase(it);
      continue;
    }
    std::uint64_t seq = it->second.front();
    it->second.pop_front();
    if (it->second.empty()) pending_by_depth_.erase(it);
    FrontierEntry& entry = entries_[seq];
    if (entry.state != EntryState::Pending) continue;
    entry.state = EntryState::Claimed;
    return entry;
  }
  return std::nullopt;
}

void Frontier::mark_done(std::uint64_t seq) {
  std::lock_guard lock(mutex_);
  entries_.at(seq).state = EntryState::Done;
}

void Frontier::mark_failed(std::uint64_t seq, bool retry) {
  std::lock_guard lock(mutex_);
  FrontierEntry& entry = entries_.at(seq);
  if (retry) {
    entry.state = EntryState::Pending;
    pending_by_depth_[entry.depth].push_back(seq);
  } else {
    entry.state = EntryState::Failed;
  }
}

std::size_t Frontier::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

std::size_t Frontier::pending_count() const {
  std::lock_guard lock(mutex_);
  std::size_t n = 0;
  for (const auto& e : entries_)
    if (e.state == EntryState::Pending) ++n;
  return n;
}

std::size_t Frontier::claimed_count() const {
  std::lock_guard lock(mutex_);
  std::size_t n = 0;
  for (const auto& e : entries_)
    if (e.state == EntryState::Claimed) ++n;
  return n;
}

FrontierStats Frontier::stats() const {
  std::lock_guard lock(mutex_);
  FrontierStats s;
  s.frontier_size = entries_.size();
  for (const auto& e : entries_) {
    switch (e.state) {
      case EntryState::Pending: ++s.pending; break;
      case EntryState::Done: ++s.done; break;
      case EntryState::Failed: ++s.failed; break;
      case EntryState::Claimed: break;
    }
    switch (e.discovered_by) {
      case Tier::Seed: ++s.by_tier_seed; break;
      case Tier::Static: ++s.by_tier_static; break;
      case Tier::Headless: ++s.by_tier_headless; break;
    }
  }
  return s;
}

std::vector<DedupKey> Frontier::snapshot_keys() const {
  std::lock_guard lock(mutex_);
  std::vector<DedupKey> keys;
  keys.reserve(entries_.size());
  for (const auto& e : entries_) keys.push_back(e.key);
  return keys;
}

std::vector<FrontierEntry> Frontier::snapshot_entries() const {
  std::lock_guard lock(mutex_);
  return entries_;
}

Frontier Frontier::rebuild(TrimPolicy policy, const std::filesystem::path& frontier_log,
                           const std::filesystem::path& crawl_log) {
  Frontier frontier(policy, frontier_log);
  {
    std::ifstream in(frontier_log);
    if (!in) throw IoFailure("cannot open frontier log: " + frontier_log.string());
    std::string line;
    std::lock_guard lock(frontier.mutex_);
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto j = nlohmann::json::parse(line);
      frontier.add_locked(NormalizedUri::parse(j.at("uri").get<std::string>()),
                          tier_from_string(j.at("tier").get<std::string>()),
                          j.at("depth").get<int>(), false);
    }
  }
  if (!crawl_log.empty() && std::filesystem::exists(crawl_log)) {
    std::unordered_set<std::string> completed;
    for (const auto& record : read_crawl_log(crawl_log))
      completed.insert(dedup_key(record.uri, policy).key);
    std::lock_guard lock(frontier.mutex_);
    for (auto& entry : frontier.entries_)
      if (completed.contains(entry.key.key)) entry.state = EntryState::Done;
    for (auto& [depth, queue] : frontier.pending_by_depth_) {
      std::deque<std::uint64_t> remaining;
      for (auto seq : queue)
        if (frontier.entries_[seq].state == EntryState::Pending) remaining.push_back(seq);
      queue = std::move(remaining);
    }
  }
  return frontier;
}

DuplicateReport duplicate_report(const std::vector<FetchRecord>& records,
                                 const TrimPolicy& policy) {
  if (records.empty()) throw EmptyInput("duplicate report needs at least one record");

  DuplicateReport report;
  std::unordered_set<std::string> seen_keys;
  std::unordered_set<std::string> seen_digests;
  long tp = 0, tn = 0;
  for (const auto& record : records) {
    bool key_dup = !seen_keys.insert(dedup_key(record.uri, policy).key).second;
    bool digest_dup = !seen_digests.insert(record.content_digest).second;
    if (key_dup) ++report.uri_duplicates;
    if (key_dup && digest_dup) {
      ++report.uri_and_entity_duplicates;
      ++tp;
    }
    if (!key_dup && !digest_dup) ++tn;
  }
  report.accuracy = double(tp + tn) / double(records.size());
  return report;
}

FrontierOverlap frontier_algebra(const std::vector<DedupKey>& a, const std::vector<DedupKey>& b) {
  auto policy_of = [](const std::vector<DedupKey>& keys) {
    return keys.empty() ? std::optional<TrimPolicyKind>{} : std::optional{keys.front().policy};
  };
  auto pa = policy_of(a), pb = policy_of(b);
  if (pa && pb && *pa != *pb)
    throw PolicyMismatch("frontier_algebra: sets built under different trim policies");
  for (const auto& k : a)
    if (pa && k.policy != *pa) throw PolicyMismatch("mixed policies within set a");
  for (const auto& k : b)
    if (pb && k.policy != *pb) throw PolicyMismatch("mixed policies within set b");

  std::set<std::string> sa, sb;
  for (const auto& k : a) sa.insert(k.key);
  for (const auto& k : b) sb.insert(k.key);

  FrontierOverlap overlap;
  for (const auto& k : sa)
    sb.contains(k) ? ++overlap.both : ++overlap.only_a;
  for (const auto& k : sb)
    if (!sa.contains(k)) ++overlap.only_b;
  return overlap;
}

}  // namespace tiercrawl
