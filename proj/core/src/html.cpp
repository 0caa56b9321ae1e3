#include "tiercrawl/html.hpp"

#include <algorithm>
#include <cctype>

#include "tiercrawl/uri.hpp"

namespace tiercrawl {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f'; }

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == ':';
}

size_t find_ci(std::string_view haystack, std::string_view needle, size_t from) {
  if (needle.empty() || haystack.size() < needle.size()) return std::string_view::npos;
  for (size_t i = from; i + needle.size() <= haystack.size(); ++i) {
    bool match = true;
    for (size_t j = 0; j < needle.size(); ++j) {
      if (std::tolower(static_cast<unsigned char>(haystack[i + j])) !=
          std::tolower(static_cast<unsigned char>(needle[j]))) {
        match = false;
        break;
      }
    }
    if (match) return i;
  }
  return std::string_view::npos;
}

}  // namespace

std::string decode_entities(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '&') {
      out.push_back(text[i]);
      continue;
    }
    auto semi = text.find(';', i);
    if (semi == std::string_view::npos || semi - i > 10) {
      out.push_back('&');
      continue;
    }
    std::string_view entity = text.substr(i + 1, semi - i - 1);
    if (entity == "amp") out.push_back('&');
    else if (entity == "lt") out.push_back('<');
    else if (entity == "gt") out.push_back('>');
    else if (entity == "quot") out.push_back('"');
    else if (entity == "apos" || entity == "#39") out.push_back('\'');
    else if (!entity.empty() && entity[0] == '#') {
      int code = 0;
      bool ok = entity.size() > 1;
      if (entity.size() > 2 && (entity[1] == 'x' || entity[1] == 'X')) {
        for (size_t j = 2; j < entity.size() && ok; ++j) {
          char c = entity[j];
          int v = c >= '0' && c <= '9'   ? c - '0'
                  : c >= 'a' && c <= 'f' ? c - 'a' + 10
                  : c >= 'A' && c <= 'F' ? c - 'A' + 10
                                         : -1;
          ok = v >= 0;
          code = code * 16 + v;
        }
      } else {
        for (size_t j = 1; j < entity.size() && ok; ++j) {
          ok = std::isdigit(static_cast<unsigned char>(entity[j]));
          code = code * 10 + (entity[j] - '0');
        }
      }
      if (ok && code > 0 && code < 128) {
        out.push_back(static_cast<char>(code));
      } else {
        out.push_back('&');
        continue;
      }
    } else {
      out.push_back('&');
      continue;
    }
    i = semi;
  }
  return out;
}

std::optional<std::string> HtmlElement::attr(std::string_view name) const {
  for (const auto& a : attrs)
    if (a.name == name) return a.value;
  return std::nullopt;
}

bool HtmlElement::has_event_handler() const {
  return std::any_of(attrs.begin(), attrs.end(), [](const HtmlAttribute& a) {
    return a.name.size() > 2 && a.name[0] == 'o' && a.name[1] == 'n';
  });
}

std::vector<HtmlElement> scan_elements(std::string_view html) {
  std::vector<HtmlElement> elements;
  size_t pos = 0;
  while (pos < html.size()) {
    size_t lt = html.find('<', pos);
    if (lt == std::string_view::npos) break;
    pos = lt + 1;
    if (pos >= html.size()) break;

    if (html.compare(lt, 4, "<!--") == 0) {
      auto end = html.find("-->", lt + 4);
      pos = end == std::string_view::npos ? html.size() : end + 3;
      continue;
    }
    char c = html[pos];
    if (c == '!' || c == '?') {
      auto end = html.find('>', pos);
      pos = end == std::string_view::npos ? html.size() : end + 1;
      continue;
    }
    if (c == '/') {
      auto end = html.find('>', pos);
      pos = end == std::string_view::npos ? html.size() : end + 1;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) continue;

    HtmlElement element;
    size_t name_end = pos;
    while (name_end < html.size() && is_name_char(html[name_end])) ++name_end;
    element.tag = ascii_lower(html.substr(pos, name_end - pos));
    pos = name_end;

    bool self_closed = false;
    while (pos < html.size() && html[pos] != '>') {
      while (pos < html.size() && is_space(html[pos])) ++pos;
      if (pos >= html.size() || html[pos] == '>') break;
      if (html[pos] == '/') {
        self_closed = true;
        ++pos;
        continue;
      }
      size_t attr_start = pos;
      while (pos < html.size() && !is_space(html[pos]) && html[pos] != '=' && html[pos] != '>' &&
             html[pos] != '/')
        ++pos;
      if (pos == attr_start) {
        ++pos;
        continue;
      }
      HtmlAttribute attr;
      attr.name = ascii_lower(html.substr(attr_start, pos - attr_start));
      while (pos < html.size() && is_space(html[pos])) ++pos;
      if (pos < html.size() && html[pos] == '=') {
        ++pos;
        while (pos < html.size() && is_space(html[pos])) ++pos;
        if (pos < html.size() && (html[pos] == '"' || html[pos] == '\'')) {
          char quote = html[pos++];
          size_t value_end = html.find(quote, pos);
          if (value_end == std::string_view::npos) value_end = html.size();
          attr.value = decode_entities(html.substr(pos, value_end - pos));
          pos = std::min(value_end + 1, html.size());
        } else {
          size_t value_start = pos;
          while (pos < html.size() && !is_space(html[pos]) && html[pos] != '>') ++pos;
          attr.value = decode_entities(html.substr(value_start, pos - value_start));
        }
      }
      element.attrs.push_back(std::move(attr));
    }
    if (pos < html.size()) ++pos;  // consume '>'

    if (!self_closed && (element.tag == "script" || element.tag == "style")) {
      std::string closer = "</" + element.tag;
      size_t body_end = find_ci(html, closer, pos);
      if (body_end == std::string_view::npos) {
        element.text = std::string(html.substr(pos));
        pos = html.size();
      } else {
        element.text = std::string(html.substr(pos, body_end - pos));
        auto gt = html.find('>', body_end);
        pos = gt == std::string_view::npos ? html.size() : gt + 1;
      }
    }
    elements.push_back(std::move(element));
  }
  return elements;
}

std::vector<std::string> css_urls(std::string_view css) {
  std::vector<std::string> urls;
  size_t pos = 0;
  while ((pos = find_ci(css, "url(", pos)) != std::string_view::npos) {
    pos += 4;
    auto close = css.find(')', pos);
    if (close == std::string_view::npos) break;
    std::string_view inner = css.substr(pos, close - pos);
    while (!inner.empty() && is_space(inner.front())) inner.remove_prefix(1);
    while (!inner.empty() && is_space(inner.back())) inner.remove_suffix(1);
    if (inner.size() >= 2 && (inner.front() == '"' || inner.front() == '\'') &&
        inner.back() == inner.front()) {
      inner = inner.substr(1, inner.size() - 2);
    }
    if (!inner.empty() && inner.rfind("data:", 0) != 0) urls.emplace_back(inner);
    pos = close + 1;
  }
  return urls;
}

std::vector<std::string> srcset_urls(std::string_view srcset) {
  std::vector<std::string> urls;
  size_t start = 0;
  while (start < srcset.size()) {
    size_t comma = srcset.find(',', start);
    if (comma == std::string_view::npos) comma = srcset.size();
    std::string_view candidate = srcset.substr(start, comma - start);
    while (!candidate.empty() && is_space(candidate.front())) candidate.remove_prefix(1);
    size_t space = 0;
    while (space < candidate.size() && !is_space(candidate[space])) ++space;
    candidate = candidate.substr(0, space);
    if (!candidate.empty()) urls.emplace_back(candidate);
    start = comma + 1;
  }
  return urls;
}

}  // namespace tiercrawl
