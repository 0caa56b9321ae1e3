#include "tiercrawl/domains.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "tiercrawl/uri.hpp"

namespace tiercrawl {

namespace {

// Common multi-label public suffixes. Not the full suffix list; the config
// can extend it where a crawl needs more coverage.
constexpr std::array<std::string_view, 28> kMultiLabelSuffixes = {
    "co.uk",  "org.uk", "ac.uk",  "gov.uk", "net.uk", "co.jp",  "ne.jp",
    "or.jp",  "ac.jp",  "com.au", "net.au", "org.au", "edu.au", "gov.au",
    "com.br", "net.br", "org.br", "co.in",  "net.in", "org.in", "com.cn",
    "net.cn", "org.cn", "com.mx", "co.nz",  "org.nz", "co.za",  "com.ar",
};

}  // namespace

bool is_ip_literal(std::string_view host) {
  if (!host.empty() && host.front() == '[') return true;  // bracketed IPv6
  bool digits_and_dots = !host.empty();
  for (char c : host) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '.') {
      digits_and_dots = false;
      break;
    }
  }
  return digits_and_dots;
}

std::string registrable_domain(std::string_view host,
                               const std::vector<std::string>& extra_suffixes) {
  std::string h = ascii_lower(host);
  if (!h.empty() && h.back() == '.') h.pop_back();
  if (h.empty() || is_ip_literal(h)) return h;

  std::vector<std::string> labels;
  size_t start = 0;
  while (start <= h.size()) {
    size_t dot = h.find('.', start);
    if (dot == std::string::npos) {
      labels.push_back(h.substr(start));
      break;
    }
    labels.push_back(h.substr(start, dot - start));
    start = dot + 1;
  }
  if (labels.size() <= 1) return h;

  auto tail = [&](size_t n) {
    std::string out;
    for (size_t i = labels.size() - n; i < labels.size(); ++i) {
      if (!out.empty()) out += ".";
      out += labels[i];
    }
    return out;
  };

  size_t suffix_labels = 1;
  for (size_t n = 2; n <= 3 && n < labels.size(); ++n) {
    std::string candidate = tail(n);
    bool known = std::find(kMultiLabelSuffixes.begin(), kMultiLabelSuffixes.end(), candidate) !=
                 kMultiLabelSuffixes.end();
    if (!known)
      known = std::find(extra_suffixes.begin(), extra_suffixes.end(), candidate) !=
              extra_suffixes.end();
    if (known) suffix_labels = n;
  }

  size_t keep = std::min(labels.size(), suffix_labels + 1);
  return tail(keep);
}

}  // namespace tiercrawl
