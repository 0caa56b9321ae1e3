#include "tiercrawl/uri.hpp"

#include <algorithm>
#include <cctype>

#include "tiercrawl/errors.hpp"

namespace tiercrawl {

namespace {

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_hex(char c) {
  return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}
bool is_unreserved(char c) {
  return is_alpha(c) || is_digit(c) || c == '-' || c == '.' || c == '_' || c == '~';
}
bool is_scheme_char(char c) {
  return is_alpha(c) || is_digit(c) || c == '+' || c == '-' || c == '.';
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return c - 'A' + 10;
}

char hex_digit(int v) { return v < 10 ? char('0' + v) : char('A' + (v - 10)); }

std::string_view strip_ascii_space(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

// Uppercases hex of retained escapes and decodes escapes of unreserved
// octets. Idempotent, so serialize/parse round-trips are stable. Invalid
// escapes are kept literally; crawler input is too messy to reject here.
std::string normalize_percent(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '%' && i + 2 < s.size() && is_hex(s[i + 1]) && is_hex(s[i + 2])) {
      int byte = hex_value(s[i + 1]) * 16 + hex_value(s[i + 2]);
      if (is_unreserved(char(byte))) {
        out.push_back(char(byte));
      } else {
        out.push_back('%');
        out.push_back(hex_digit(byte / 16));
        out.push_back(hex_digit(byte % 16));
      }
      i += 2;
    } else {
      out.push_back(s[i]);
    }
  }
  return out;
}

// RFC 3986 section 5.2.4.
std::string remove_dot_segments(std::string_view path) {
  std::string input(path);
  std::string output;
  while (!input.empty()) {
    if (input.rfind("../", 0) == 0) {
      input.erase(0, 3);
    } else if (input.rfind("./", 0) == 0) {
      input.erase(0, 2);
    } else if (input.rfind("/./", 0) == 0) {
      input.replace(0, 3, "/");
    } else if (input == "/.") {
      input = "/";
    } else if (input.rfind("/../", 0) == 0) {
      input.replace(0, 4, "/");
      auto slash = output.find_last_of('/');
      output.erase(slash == std::string::npos ? 0 : slash);
    } else if (input == "/..") {
      input = "/";
      auto slash = output.find_last_of('/');
      output.erase(slash == std::string::npos ? 0 : slash);
    } else if (input == "." || input == "..") {
      input.clear();
    } else {
      size_t next = input.find('/', input[0] == '/' ? 1 : 0);
      if (next == std::string::npos) next = input.size();
      output.append(input, 0, next);
      input.erase(0, next);
    }
  }
  return output;
}

std::vector<QueryParam> parse_query(std::string_view query) {
  std::vector<QueryParam> params;
  size_t start = 0;
  while (start <= query.size()) {
    size_t amp = query.find('&', start);
    if (amp == std::string_view::npos) amp = query.size();
    std::string_view part = query.substr(start, amp - start);
    if (!part.empty()) {
      size_t eq = part.find('=');
      QueryParam p;
      if (eq == std::string_view::npos) {
        p.name = normalize_percent(part);
      } else {
        p.name = normalize_percent(part.substr(0, eq));
        p.value = normalize_percent(part.substr(eq + 1));
      }
      params.push_back(std::move(p));
    }
    if (amp == query.size()) break;
    start = amp + 1;
  }
  return params;
}

bool name_in_list(const std::string& name, const std::vector<std::string>& list) {
  std::string lower = ascii_lower(name);
  return std::any_of(list.begin(), list.end(),
                     [&](const std::string& n) { return ascii_lower(n) == lower; });
}

}  // namespace

std::string ascii_lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string percent_decode_all(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '%' && i + 2 < text.size() && is_hex(text[i + 1]) && is_hex(text[i + 2])) {
      out.push_back(char(hex_value(text[i + 1]) * 16 + hex_value(text[i + 2])));
      i += 2;
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

NormalizedUri NormalizedUri::parse(std::string_view raw) {
  std::string_view s = strip_ascii_space(raw);
  if (s.empty()) throw MalformedUri("empty input");
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || (unsigned char)c < 0x20)
      throw MalformedUri(std::string(s));
  }

  // Fragment is client-side only; drop before anything else.
  if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
  if (s.empty()) throw MalformedUri("fragment-only input");

  size_t colon = std::string_view::npos;
  if (is_alpha(s[0])) {
    size_t i = 1;
    while (i < s.size() && is_scheme_char(s[i])) ++i;
    if (i < s.size() && s[i] == ':') colon = i;
  }
  if (colon == std::string_view::npos) throw RelativeUri(std::string(s));

  NormalizedUri uri;
  uri.scheme_ = ascii_lower(s.substr(0, colon));
  std::string_view rest = s.substr(colon + 1);

  if (rest.rfind("//", 0) == 0) {
    uri.has_authority_ = true;
    rest.remove_prefix(2);
    size_t end = rest.find_first_of("/?");
    std::string_view authority = rest.substr(0, end);
    rest = end == std::string_view::npos ? std::string_view{} : rest.substr(end);

    if (auto at = authority.rfind('@'); at != std::string_view::npos) {
      uri.userinfo_ = std::string(authority.substr(0, at));
      authority = authority.substr(at + 1);
    }
    std::string_view host = authority;
    std::string_view port;
    if (!authority.empty() && authority[0] == '[') {
      auto close = authority.find(']');
      if (close == std::string_view::npos) throw MalformedUri(std::string(s));
      host = authority.substr(0, close + 1);
      if (close + 1 < authority.size()) {
        if (authority[close + 1] != ':') throw MalformedUri(std::string(s));
        port = authority.substr(close + 2);
      }
    } else if (auto pcolon = authority.rfind(':'); pcolon != std::string_view::npos) {
      host = authority.substr(0, pcolon);
      port = authority.substr(pcolon + 1);
    }
    if (host.empty()) throw MalformedUri("empty host: " + std::string(s));
    uri.host_ = ascii_lower(host);
    if (!port.empty()) {
      int value = 0;
      for (char c : port) {
        if (!is_digit(c)) throw MalformedUri("bad port: " + std::string(s));
        value = value * 10 + (c - '0');
        if (value > 65535) throw MalformedUri("bad port: " + std::string(s));
      }
      bool is_default = (uri.scheme_ == "http" && value == 80) ||
                        (uri.scheme_ == "https" && value == 443);
      if (!is_default) uri.port_ = value;
    }
  }

  std::string_view path = rest;
  std::string_view query;
  if (auto q = rest.find('?'); q != std::string_view::npos) {
    path = rest.substr(0, q);
    query = rest.substr(q + 1);
  }

  uri.path_ = normalize_percent(path);
  if (uri.has_authority_) {
    if (uri.path_.empty())
      uri.path_ = "/";
    else
      uri.path_ = remove_dot_segments(uri.path_);
    if (uri.path_.empty()) uri.path_ = "/";
  }
  uri.params_ = parse_query(query);
  return uri;
}

NormalizedUri NormalizedUri::resolve(const NormalizedUri& base, std::string_view reference) {
  std::string_view ref = strip_ascii_space(reference);
  if (auto hash = ref.find('#'); hash != std::string_view::npos) ref = ref.substr(0, hash);
  if (ref.empty()) return base;

  // Absolute reference: carries its own scheme.
  if (is_alpha(ref[0])) {
    size_t i = 1;
    while (i < ref.size() && is_scheme_char(ref[i])) ++i;
    if (i < ref.size() && ref[i] == ':') return parse(ref);
  }

  // Protocol-relative reference: inherit the base scheme.
  if (ref.rfind("//", 0) == 0) return parse(base.scheme_ + ":" + std::string(ref));

  std::string_view rpath = ref;
  std::string_view rquery;
  bool has_query = false;
  if (auto q = ref.find('?'); q != std::string_view::npos) {
    rpath = ref.substr(0, q);
    rquery = ref.substr(q + 1);
    has_query = true;
  }

  std::string target_path;
  if (rpath.empty()) {
    target_path = base.path_;
  } else if (rpath[0] == '/') {
    target_path = std::string(rpath);
  } else if (base.has_authority_ && base.path_.empty()) {
    target_path = "/" + std::string(rpath);
  } else {
    auto slash = base.path_.find_last_of('/');
    target_path = slash == std::string::npos ? std::string(rpath)
                                             : base.path_.substr(0, slash + 1) + std::string(rpath);
  }

  std::string composed = base.scheme_ + ":";
  if (base.has_authority_) composed += "//" + base.authority_with_userinfo();
  composed += target_path;
  if (has_query)
    composed += "?" + std::string(rquery);
  else if (rpath.empty())
    composed += base.params_.empty() ? "" : "?" + base.serialize_query();
  return parse(composed);
}

std::string NormalizedUri::authority() const {
  std::string out = host_;
  if (port_) out += ":" + std::to_string(*port_);
  return out;
}

std::string NormalizedUri::serialize_query() const {
  std::string out;
  for (size_t i = 0; i < params_.size(); ++i) {
    if (i) out += "&";
    out += params_[i].name;
    if (params_[i].value) out += "=" + *params_[i].value;
  }
  return out;
}

std::string NormalizedUri::serialize() const {
  std::string out = scheme_ + ":";
  if (has_authority_) out += "//" + authority_with_userinfo();
  out += path_;
  if (!params_.empty()) out += "?" + serialize_query();
  return out;
}

NormalizedUri NormalizedUri::with_params(std::vector<QueryParam> params) const {
  NormalizedUri copy = *this;
  copy.params_ = std::move(params);
  return copy;
}

std::string to_string(TrimPolicyKind kind) {
  switch (kind) {
    case TrimPolicyKind::NoTrim: return "no_trim";
    case TrimPolicyKind::OriginTrim: return "origin_trim";
    case TrimPolicyKind::BaseTrim: return "base_trim";
    case TrimPolicyKind::SessionTrim: return "session_trim";
    case TrimPolicyKind::HttpTrim: return "http_trim";
  }
  return "no_trim";
}

TrimPolicyKind trim_policy_from_string(std::string_view name) {
  std::string n = ascii_lower(name);
  if (n == "no_trim" || n == "none") return TrimPolicyKind::NoTrim;
  if (n == "origin_trim" || n == "origin") return TrimPolicyKind::OriginTrim;
  if (n == "base_trim" || n == "base") return TrimPolicyKind::BaseTrim;
  if (n == "session_trim" || n == "session") return TrimPolicyKind::SessionTrim;
  if (n == "http_trim" || n == "http") return TrimPolicyKind::HttpTrim;
  throw ConfigError("unknown trim policy: " + std::string(name));
}

bool value_mentions_uri(std::string_view value) {
  std::string decoded = ascii_lower(percent_decode_all(value));
  if (decoded.rfind("//", 0) == 0) return true;
  if (decoded.rfind("www.", 0) == 0) return true;
  return decoded.find("http://") != std::string::npos ||
         decoded.find("https://") != std::string::npos;
}

NormalizedUri trim(const NormalizedUri& uri, const TrimPolicy& policy) {
  switch (policy.kind) {
    case TrimPolicyKind::NoTrim:
      return uri;
    case TrimPolicyKind::BaseTrim:
      return uri.with_params({});
    case TrimPolicyKind::OriginTrim:
    case TrimPolicyKind::SessionTrim: {
      const auto& names = policy.kind == TrimPolicyKind::OriginTrim ? policy.origin_params
                                                                    : policy.session_params;
      std::vector<QueryParam> kept;
      for (const auto& p : uri.params())
        if (!name_in_list(p.name, names)) kept.push_back(p);
      return uri.with_params(std::move(kept));
    }
    case TrimPolicyKind::HttpTrim: {
      std::vector<QueryParam> kept;
      for (const auto& p : uri.params())
        if (!p.value || !value_mentions_uri(*p.value)) kept.push_back(p);
      return uri.with_params(std::move(kept));
    }
  }
  return uri;
}

DedupKey dedup_key(const NormalizedUri& uri, const TrimPolicy& policy) {
  return DedupKey{policy.kind, trim(uri, policy).serialize()};
}

}  // namespace tiercrawl
