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

#ifndef WIKITIG_TEXT_HPP_
#define WIKITIG_TEXT_HPP_

#include <cstddef>
#include <string>
#include <string_view>

namespace wikitig {

namespace text_detail {

// Length in bytes of a whitespace code point starting at s[i], or 0.
// Covers ASCII whitespace plus the Unicode space separators that show up in
// rendered wiki HTML (NBSP, thin/narrow spaces, ideographic space).
inline std::size_t WhitespaceLength(std::string_view s, std::size_t i) {
  const auto c = static_cast<unsigned char>(s[i]);
  if (c == ' ' || (c >= '\t' && c <= '\r')) return 1;
  if (c == 0xC2 && i + 1 < s.size()) {
    const auto d = static_cast<unsigned char>(s[i + 1]);
    if (d == 0xA0 || d == 0x85) return 2;  // U+00A0, U+0085
    return 0;
  }
  if (i + 2 >= s.size()) return 0;
  const auto d = static_cast<unsigned char>(s[i + 1]);
  const auto e = static_cast<unsigned char>(s[i + 2]);
  if (c == 0xE1 && d == 0x9A && e == 0x80) return 3;  // U+1680
  if (c == 0xE2 && d == 0x80 &&
      (e <= 0x8A || e == 0xA8 || e == 0xA9 || e == 0xAF))
    return 3;  // U+2000..U+200A, U+2028, U+2029, U+202F
  if (c == 0xE2 && d == 0x81 && e == 0x9F) return 3;  // U+205F
  if (c == 0xE3 && d == 0x80 && e == 0x80) return 3;  // U+3000
  return 0;
}

inline char AsciiLower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

}  // namespace text_detail

// Collapses every whitespace run (ASCII or Unicode space separators) into a
// single ASCII space and trims both ends.
inline std::string CollapseWhitespace(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (std::size_t i = 0; i < raw.size();) {
    const std::size_t ws = text_detail::WhitespaceLength(raw, i);
    if (ws > 0) {
      pending_space = true;
      i += ws;
      continue;
    }
    if (pending_space && !out.empty()) out.push_back(' ');
    pending_space = false;
    out.push_back(raw[i]);
    ++i;
  }
  return out;
}

// Makes arbitrary text safe to place inside a linearized table cell:
// "|" becomes "/", every "<>" is removed (including ones formed by an
// earlier removal, so "<<>>" vanishes entirely), then whitespace is
// collapsed and trimmed. May return an empty string.
inline std::string SanitizeText(std::string_view raw) {
  std::string stripped;
  stripped.reserve(raw.size());
  for (char c : raw) {
    if (c == '|') {
      stripped.push_back('/');
    } else if (c == '>' && !stripped.empty() && stripped.back() == '<') {
      stripped.pop_back();
    } else {
      stripped.push_back(c);
    }
  }
  return CollapseWhitespace(stripped);
}

// Removes citation markers of the form "[N]" or "[#N]" (N = one or more ASCII
// digits). Whitespace is left alone; SanitizeText cleans it up afterwards.
inline std::string StripReferenceLinks(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    if (text[i] == '[') {
      std::size_t j = i + 1;
      if (j < text.size() && text[j] == '#') ++j;
      const std::size_t digits_begin = j;
      while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
      if (j > digits_begin && j < text.size() && text[j] == ']') {
        i = j + 1;
        continue;
      }
    }
    out.push_back(text[i]);
    ++i;
  }
  // A removal can expose a new marker ("[[1]2]" -> "[2]").
  if (out.size() != text.size()) {
    std::string again = StripReferenceLinks(out);
    if (again.size() != out.size()) return again;
  }
  return out;
}

inline std::string AsciiLowercase(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = text_detail::AsciiLower(c);
  return out;
}

// ASCII case-insensitive substring test; non-ASCII bytes compare exactly.
inline bool ContainsIgnoreCase(std::string_view haystack,
                               std::string_view needle) {
  if (needle.empty()) return true;
  return AsciiLowercase(haystack).find(AsciiLowercase(needle)) !=
         std::string::npos;
}

}  // namespace wikitig

#endif  // WIKITIG_TEXT_HPP_
