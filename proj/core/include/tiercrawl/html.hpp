#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tiercrawl {

struct HtmlAttribute {
  std::string name;   // lowercase
  std::string value;  // entity-decoded
};

/// One start tag from the markup stream. `text` carries the raw element
/// body for script and style elements (everything up to the closing tag).
struct HtmlElement {
  std::string tag;  // lowercase
  std::vector<HtmlAttribute> attrs;
  std::string text;

  std::optional<std::string> attr(std::string_view name) const;
  bool has_event_handler() const;  // any on* attribute
};

/// Tolerant single-pass tag scanner. Comments and doctypes are skipped,
/// script/style bodies are treated as raw text, close tags are not
/// reported. Enough structure for link extraction and lexical feature
/// counting; not a tree builder.
std::vector<HtmlElement> scan_elements(std::string_view html);

/// url(...) references inside a CSS block, quotes stripped.
std::vector<std::string> css_urls(std::string_view css);

/// Candidate URLs from a srcset attribute value (descriptors dropped).
std::vector<std::string> srcset_urls(std::string_view srcset);

std::string decode_entities(std::string_view text);

}  // namespace tiercrawl
