// Copyright 2026 The WikiTIG Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WIKITIG_HTML_HPP_
#define WIKITIG_HTML_HPP_

// Small forgiving HTML reader: enough tree structure to walk tables, rows,
// cells and images in Wikipedia article dumps. Not a conforming HTML5
// parser; it handles the implied end tags that matter for tables and skips
// everything else.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wikitig/error.hpp"

namespace wikitig::html {

using NodeId = std::size_t;
inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);

struct Node {
  std::string tag;  // lowercase element name; empty for text nodes
  std::vector<std::pair<std::string, std::string>> attributes;
  std::string text;  // decoded text for text nodes
  NodeId parent = kNoNode;
  std::vector<NodeId> children;
  bool closed = false;  // saw an explicit end tag (or is void/self-closing)

  bool is_text() const { return tag.empty(); }

  std::optional<std::string_view> attribute(std::string_view name) const {
    for (const auto& [k, v] : attributes) {
      if (k == name) return std::string_view(v);
    }
    return std::nullopt;
  }

  bool has_class(std::string_view token) const {
    const auto cls = attribute("class");
    if (!cls) return false;
    std::size_t i = 0;
    const std::string_view s = *cls;
    while (i < s.size()) {
      while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' ||
                              s[i] == '\r' || s[i] == '\f'))
        ++i;
      std::size_t j = i;
      while (j < s.size() && !(s[j] == ' ' || s[j] == '\t' || s[j] == '\n' ||
                               s[j] == '\r' || s[j] == '\f'))
        ++j;
      if (j > i && s.substr(i, j - i) == token) return true;
      i = j;
    }
    return false;
  }
};

class Document {
 public:
  Document() { nodes_.push_back(Node{"#document", {}, {}, kNoNode, {}, true}); }

  NodeId root() const { return 0; }
  const Node& node(NodeId id) const { return nodes_[id]; }
  std::size_t size() const { return nodes_.size(); }

  NodeId Append(NodeId parent, Node n) {
    n.parent = parent;
    nodes_.push_back(std::move(n));
    const NodeId id = nodes_.size() - 1;
    nodes_[parent].children.push_back(id);
    return id;
  }
  Node& mutable_node(NodeId id) { return nodes_[id]; }

  // Pre-order list of element descendants of `from` with the given tag.
  std::vector<NodeId> FindAll(NodeId from, std::string_view tag) const {
    std::vector<NodeId> out;
    std::vector<NodeId> stack(nodes_[from].children.rbegin(),
                              nodes_[from].children.rend());
    while (!stack.empty()) {
      const NodeId id = stack.back();
      stack.pop_back();
      if (nodes_[id].tag == tag) out.push_back(id);
      const auto& ch = nodes_[id].children;
      stack.insert(stack.end(), ch.rbegin(), ch.rend());
    }
    return out;
  }

  // Nearest ancestor (excluding `id`) with the given tag.
  NodeId Ancestor(NodeId id, std::string_view tag) const {
    for (NodeId p = nodes_[id].parent; p != kNoNode; p = nodes_[p].parent) {
      if (nodes_[p].tag == tag) return p;
    }
    return kNoNode;
  }

  // Concatenated text of the subtree. Block-level boundaries and <br> become
  // spaces; script/style contents are skipped. Whitespace is not collapsed.
  std::string TextContent(NodeId id) const {
    std::string out;
    AppendText(id, out);
    return out;
  }

 private:
  static bool IsBoundary(std::string_view tag) {
    static constexpr std::string_view kTags[] = {
        "br", "p", "div", "li", "ul", "ol", "tr", "td", "th", "table",
        "caption", "dd", "dt", "dl", "hr", "h1", "h2", "h3", "h4", "h5",
        "h6", "img"};
    return std::find(std::begin(kTags), std::end(kTags), tag) != std::end(kTags);
  }

  void AppendText(NodeId id, std::string& out) const {
    const Node& n = nodes_[id];
    if (n.is_text()) {
      out += n.text;
      return;
    }
    if (n.tag == "script" || n.tag == "style") return;
    const bool boundary = IsBoundary(n.tag);
    if (boundary) out.push_back(' ');
    for (NodeId c : n.children) AppendText(c, out);
    if (boundary) out.push_back(' ');
  }

  std::vector<Node> nodes_;
};

namespace detail {

inline bool IsValidUtf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    std::size_t len;
    std::uint32_t cp;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + len > s.size()) return false;
    for (std::size_t k = 1; k < len; ++k) {
      const auto d = static_cast<unsigned char>(s[i + k]);
      if ((d & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (d & 0x3F);
    }
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
        (len == 4 && (cp < 0x10000 || cp > 0x10FFFF)) ||
        (cp >= 0xD800 && cp <= 0xDFFF))
      return false;
    i += len;
  }
  return true;
}

inline void AppendUtf8(std::uint32_t cp, std::string& out) {
  if (cp == 0 || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = 0xFFFD;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

struct NamedEntity {
  std::string_view name;
  std::uint32_t code_point;
};

// The entities that actually occur in rendered infoboxes.
inline constexpr NamedEntity kEntities[] = {
    {"amp", '&'},      {"lt", '<'},         {"gt", '>'},
    {"quot", '"'},     {"apos", '\''},      {"nbsp", 0xA0},
    {"ndash", 0x2013}, {"mdash", 0x2014},   {"minus", 0x2212},
    {"times", 0xD7},   {"deg", 0xB0},       {"prime", 0x2032},
    {"Prime", 0x2033}, {"middot", 0xB7},    {"bull", 0x2022},
    {"hellip", 0x2026}, {"lsquo", 0x2018},  {"rsquo", 0x2019},
    {"ldquo", 0x201C}, {"rdquo", 0x201D},   {"thinsp", 0x2009},
    {"ensp", 0x2002},  {"emsp", 0x2003},    {"copy", 0xA9},
    {"reg", 0xAE},     {"sup2", 0xB2},      {"sup3", 0xB3},
    {"frac12", 0xBD},  {"frac14", 0xBC},    {"frac34", 0xBE},
    {"plusmn", 0xB1},  {"micro", 0xB5},     {"pound", 0xA3},
    {"euro", 0x20AC},  {"yen", 0xA5},       {"cent", 0xA2},
    {"sect", 0xA7},    {"para", 0xB6},      {"laquo", 0xAB},
    {"raquo", 0xBB},   {"zwj", 0x200D},     {"zwnj", 0x200C},
    {"lrm", 0x200E},   {"rlm", 0x200F},     {"shy", 0xAD},
};

inline std::string DecodeEntities(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '&') {
      out.push_back(s[i++]);
      continue;
    }
    const std::size_t semi = s.find(';', i + 1);
    if (semi == std::string_view::npos || semi - i > 12) {
      out.push_back(s[i++]);
      continue;
    }
    const std::string_view body = s.substr(i + 1, semi - i - 1);
    bool decoded = false;
    if (body.size() >= 2 && body[0] == '#') {
      std::uint32_t cp = 0;
      const bool hex = body[1] == 'x' || body[1] == 'X';
      const std::size_t start = hex ? 2 : 1;
      bool ok = start < body.size();
      for (std::size_t k = start; ok && k < body.size(); ++k) {
        const char c = body[k];
        int digit;
        if (c >= '0' && c <= '9') {
          digit = c - '0';
        } else if (hex && c >= 'a' && c <= 'f') {
          digit = c - 'a' + 10;
        } else if (hex && c >= 'A' && c <= 'F') {
          digit = c - 'A' + 10;
        } else {
          ok = false;
          break;
        }
        cp = cp * (hex ? 16 : 10) + static_cast<std::uint32_t>(digit);
        if (cp > 0x10FFFF) cp = 0x110000;
      }
      if (ok) {
        AppendUtf8(cp, out);
        decoded = true;
      }
    } else {
      for (const auto& e : kEntities) {
        if (e.name == body) {
          AppendUtf8(e.code_point, out);
          decoded = true;
          break;
        }
      }
    }
    if (decoded) {
      i = semi + 1;
    } else {
      out.push_back(s[i++]);
    }
  }
  return out;
}

inline bool IsAsciiAlpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

inline bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f';
}

inline std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

inline bool IsVoid(std::string_view tag) {
  static constexpr std::string_view kVoid[] = {
      "area", "base", "br", "col", "embed", "hr", "img", "input",
      "link", "meta", "param", "source", "track", "wbr"};
  return std::find(std::begin(kVoid), std::end(kVoid), tag) != std::end(kVoid);
}

inline std::size_t FindIgnoreCase(std::string_view hay, std::string_view needle,
                                  std::size_t from) {
  const std::string lower = Lower(hay.substr(from));
  const std::size_t pos = lower.find(needle);
  return pos == std::string::npos ? std::string_view::npos : pos + from;
}

class TreeBuilder {
 public:
  explicit TreeBuilder(Document& doc) : doc_(doc) { open_.push_back(doc.root()); }

  void Text(std::string text) {
    if (text.empty()) return;
    Node n;
    n.text = std::move(text);
    n.closed = true;
    doc_.Append(open_.back(), std::move(n));
  }

  void StartTag(std::string tag,
                std::vector<std::pair<std::string, std::string>> attrs,
                bool self_closing) {
    ImplyEndTags(tag);
    Node n;
    n.tag = tag;
    n.attributes = std::move(attrs);
    const bool is_void = IsVoid(tag) || self_closing;
    n.closed = is_void;
    const NodeId id = doc_.Append(open_.back(), std::move(n));
    if (!is_void) open_.push_back(id);
  }

  void EndTag(std::string_view tag) {
    for (std::size_t k = open_.size(); k-- > 1;) {
      const std::string& t = doc_.node(open_[k]).tag;
      if (t == tag) {
        doc_.mutable_node(open_[k]).closed = true;
        open_.resize(k);
        return;
      }
      // Cell and row end tags never reach outside their table.
      if (t == "table" && tag != "table") return;
    }
  }

 private:
  // Closes the nearest open element in `targets`, searching no further than
  // an element in `stops`.
  void CloseNearest(std::initializer_list<std::string_view> targets,
                    std::initializer_list<std::string_view> stops) {
    for (std::size_t k = open_.size(); k-- > 1;) {
      const std::string& t = doc_.node(open_[k]).tag;
      if (std::find(targets.begin(), targets.end(), t) != targets.end()) {
        open_.resize(k);
        return;
      }
      if (std::find(stops.begin(), stops.end(), t) != stops.end()) return;
    }
  }

  void ImplyEndTags(std::string_view tag) {
    if (tag == "tr") {
      CloseNearest({"tr"}, {"table"});
    } else if (tag == "td" || tag == "th") {
      CloseNearest({"td", "th"}, {"tr", "table"});
    } else if (tag == "tbody" || tag == "thead" || tag == "tfoot") {
      CloseNearest({"tbody", "thead", "tfoot"}, {"table"});
    } else if (tag == "li") {
      CloseNearest({"li"}, {"ul", "ol", "td", "th", "table"});
    } else if (tag == "p") {
      CloseNearest({"p"}, {"div", "td", "th", "table"});
    }
  }

  Document& doc_;
  std::vector<NodeId> open_;
};

}  // namespace detail

// Parses `source` into a Document. Throws Error(kParse) on input that cannot
// be read as HTML at all: invalid UTF-8, NUL bytes, or a tag or comment left
// open at end of input. Everything else is accepted and repaired.
inline Document Parse(std::string_view source) {
  using namespace detail;
  if (!IsValidUtf8(source)) throw Error(ErrorCode::kParse, "invalid UTF-8");
  if (source.find('\0') != std::string_view::npos) {
    throw Error(ErrorCode::kParse, "NUL byte in HTML");
  }
  Document doc;
  TreeBuilder builder(doc);
  std::size_t i = 0;
  std::size_t text_start = 0;
  auto flush_text = [&](std::size_t end) {
    if (end > text_start) {
      builder.Text(DecodeEntities(source.substr(text_start, end - text_start)));
    }
  };
  while (i < source.size()) {
    if (source[i] != '<') {
      ++i;
      continue;
    }
    const std::size_t lt = i;
    if (source.compare(i, 4, "<!--") == 0) {
      const std::size_t end = source.find("-->", i + 4);
      if (end == std::string_view::npos) {
        throw Error(ErrorCode::kParse, "unterminated comment");
      }
      flush_text(lt);
      i = text_start = end + 3;
      continue;
    }
    if (i + 1 < source.size() && (source[i + 1] == '!' || source[i + 1] == '?')) {
      const std::size_t end = source.find('>', i + 2);
      if (end == std::string_view::npos) {
        throw Error(ErrorCode::kParse, "unterminated declaration");
      }
      flush_text(lt);
      i = text_start = end + 1;
      continue;
    }
    const bool is_end = i + 1 < source.size() && source[i + 1] == '/';
    std::size_t j = i + (is_end ? 2 : 1);
    if (j >= source.size() || !IsAsciiAlpha(source[j])) {
      ++i;  // a bare '<' in text
      continue;
    }
    const std::size_t name_begin = j;
    while (j < source.size() && !IsSpace(source[j]) && source[j] != '>' &&
           source[j] != '/')
      ++j;
    const std::string tag = Lower(source.substr(name_begin, j - name_begin));

    std::vector<std::pair<std::string, std::string>> attrs;
    bool self_closing = false;
    bool terminated = false;
    while (j < source.size()) {
      while (j < source.size() && IsSpace(source[j])) ++j;
      if (j >= source.size()) break;
      if (source[j] == '>') {
        terminated = true;
        ++j;
        break;
      }
      if (source[j] == '/') {
        self_closing = true;
        ++j;
        continue;
      }
      const std::size_t an = j;
      while (j < source.size() && !IsSpace(source[j]) && source[j] != '=' &&
             source[j] != '>' && source[j] != '/')
        ++j;
      std::string name = Lower(source.substr(an, j - an));
      while (j < source.size() && IsSpace(source[j])) ++j;
      std::string value;
      if (j < source.size() && source[j] == '=') {
        ++j;
        while (j < source.size() && IsSpace(source[j])) ++j;
        if (j < source.size() && (source[j] == '"' || source[j] == '\'')) {
          const char quote = source[j];
          const std::size_t close = source.find(quote, j + 1);
          if (close == std::string_view::npos) break;  // unterminated
          value = DecodeEntities(source.substr(j + 1, close - j - 1));
          j = close + 1;
        } else {
          const std::size_t vb = j;
          while (j < source.size() && !IsSpace(source[j]) && source[j] != '>')
            ++j;
          value = DecodeEntities(source.substr(vb, j - vb));
        }
      }
      if (!name.empty()) attrs.emplace_back(std::move(name), std::move(value));
    }
    if (!terminated) throw Error(ErrorCode::kParse, "unterminated tag <" + tag);

    flush_text(lt);
    if (is_end) {
      builder.EndTag(tag);
      i = text_start = j;
      continue;
    }
    builder.StartTag(tag, std::move(attrs), self_closing);
    i = text_start = j;
    if (tag == "script" || tag == "style" || tag == "textarea" ||
        tag == "title") {
      const std::size_t close = FindIgnoreCase(source, "</" + tag, j);
      const std::size_t end = close == std::string_view::npos ? source.size() : close;
      if (tag == "textarea" || tag == "title") {
        builder.Text(DecodeEntities(source.substr(j, end - j)));
      } else {
        builder.Text(std::string(source.substr(j, end - j)));
      }
      i = text_start = end;
    }
  }
  flush_text(source.size());
  return doc;
}

}  // namespace wikitig::html

#endif  // WIKITIG_HTML_HPP_
