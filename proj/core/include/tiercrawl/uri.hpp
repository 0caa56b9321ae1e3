#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tiercrawl {

/// One query parameter. `value` is absent for flag-style params ("?debug").
struct QueryParam {
  std::string name;
  std::optional<std::string> value;
  bool operator==(const QueryParam&) const = default;
};

/// A parsed, normalized URI. Normalization applied at parse time:
/// scheme and host lowercased, default ports dropped, dot-segments removed,
/// percent-encoding uppercased with unreserved octets decoded, fragment
/// dropped. Query parameter order is preserved from the source string.
class NormalizedUri {
 public:
  NormalizedUri() = default;

  /// Parses an absolute URI. Throws MalformedUri on junk input and
  /// RelativeUri when the reference has no scheme.
  static NormalizedUri parse(std::string_view raw);

  /// Resolves `reference` against an absolute `base` (RFC 3986 section 5).
  static NormalizedUri resolve(const NormalizedUri& base, std::string_view reference);

  const std::string& scheme() const { return scheme_; }
  const std::string& host() const { return host_; }
  const std::string& userinfo() const { return userinfo_; }
  std::optional<int> port() const { return port_; }
  const std::string& path() const { return path_; }
  const std::vector<QueryParam>& params() const { return params_; }
  bool has_authority() const { return has_authority_; }

  /// host[:port], lowercase; ports 80/443 were dropped for http/https.
  std::string authority() const;

  std::string serialize() const;
  std::string serialize_query() const;

  bool is_http() const { return scheme_ == "http" || scheme_ == "https"; }

  bool operator==(const NormalizedUri&) const = default;

  /// Replaces the parameter list; used by the trim policies.
  NormalizedUri with_params(std::vector<QueryParam> params) const;

 private:
  std::string authority_with_userinfo() const {
    return userinfo_.empty() ? authority() : userinfo_ + "@" + authority();
  }

  std::string scheme_;
  std::string userinfo_;
  std::string host_;
  std::optional<int> port_;
  std::string path_;
  std::vector<QueryParam> params_;
  bool has_authority_ = false;
};

enum class TrimPolicyKind { NoTrim, OriginTrim, BaseTrim, SessionTrim, HttpTrim };

std::string to_string(TrimPolicyKind kind);
TrimPolicyKind trim_policy_from_string(std::string_view name);

/// A duplicate-detection policy: which query parameters to strip before
/// string-matching URIs. Name lists are matched case-insensitively.
struct TrimPolicy {
  TrimPolicyKind kind = TrimPolicyKind::NoTrim;
  std::vector<std::string> origin_params{"origin", "callback", "domain", "referrer"};
  std::vector<std::string> session_params{"session",  "sessionid", "token_id",
                                          "sid",      "jsessionid", "phpsessid"};

  static TrimPolicy make(TrimPolicyKind k) {
    TrimPolicy p;
    p.kind = k;
    return p;
  }
};

/// Applies a trim policy. Never alters scheme, authority, or path.
NormalizedUri trim(const NormalizedUri& uri, const TrimPolicy& policy);

/// True when a (normalized) parameter value mentions a URI: after full
/// percent-decoding it contains "http://" / "https://", or begins with
/// "//" or "www.".
bool value_mentions_uri(std::string_view value);

/// Frontier identity under a trim policy.
struct DedupKey {
  TrimPolicyKind policy = TrimPolicyKind::NoTrim;
  std::string key;
  bool operator==(const DedupKey&) const = default;
  bool operator<(const DedupKey& o) const {
    return policy == o.policy ? key < o.key : policy < o.policy;
  }
};

DedupKey dedup_key(const NormalizedUri& uri, const TrimPolicy& policy);

/// Fully percent-decodes a string (no charset validation). Used by the
/// URI-mention detector and tests.
std::string percent_decode_all(std::string_view text);

std::string ascii_lower(std::string_view text);

}  // namespace tiercrawl
