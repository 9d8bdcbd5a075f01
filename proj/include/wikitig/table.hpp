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

#ifndef WIKITIG_TABLE_HPP_
#define WIKITIG_TABLE_HPP_

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "wikitig/error.hpp"
#include "wikitig/text.hpp"

namespace wikitig {

inline constexpr std::string_view kRowSeparator = " <> ";
inline constexpr std::string_view kColumnSeparator = " | ";

// A single-column infobox row naming a section ("Highest point", "Naming").
struct GroupCell {
  std::string text;
  friend auto operator<=>(const GroupCell&, const GroupCell&) = default;
};

// A two-column row: header and its value.
struct PairCell {
  std::string header;
  std::string value;
  friend auto operator<=>(const PairCell&, const PairCell&) = default;
};

using Cell = std::variant<GroupCell, PairCell>;
using CellList = std::vector<Cell>;

inline Cell Group(std::string text) { return GroupCell{std::move(text)}; }
inline Cell Pair(std::string header, std::string value) {
  return PairCell{std::move(header), std::move(value)};
}

inline bool IsGroup(const Cell& cell) {
  return std::holds_alternative<GroupCell>(cell);
}

// True when `s` could have come out of SanitizeText and is non-empty.
inline bool IsValidCellText(std::string_view s) {
  return !s.empty() && SanitizeText(s) == s;
}

inline bool IsValidCell(const Cell& cell) {
  if (const auto* g = std::get_if<GroupCell>(&cell)) {
    return IsValidCellText(g->text);
  }
  const auto& p = std::get<PairCell>(cell);
  return IsValidCellText(p.header) && IsValidCellText(p.value);
}

// Ordered, non-empty list of sanitized cells.
class InfoboxTable {
 public:
  // Throws Error(kInvalidArgument) if `cells` is empty or any cell text is
  // not sanitized.
  explicit InfoboxTable(CellList cells) : cells_(std::move(cells)) {
    if (cells_.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "infobox table has no cells");
    }
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (!IsValidCell(cells_[i])) {
        throw Error(ErrorCode::kInvalidArgument,
                    "cell " + std::to_string(i) + " is empty or unsanitized");
      }
    }
  }

  const CellList& cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }

  friend bool operator==(const InfoboxTable&, const InfoboxTable&) = default;

 private:
  CellList cells_;
};

inline std::string Linearize(const CellList& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out += kRowSeparator;
    if (const auto* g = std::get_if<GroupCell>(&cells[i])) {
      out += g->text;
    } else {
      const auto& p = std::get<PairCell>(cells[i]);
      out += p.header;
      out += kColumnSeparator;
      out += p.value;
    }
  }
  return out;
}

inline std::string Linearize(const InfoboxTable& table) {
  return Linearize(table.cells());
}

enum class ParseMode { kStrict, kLenient };

namespace table_detail {

inline std::vector<std::string_view> Split(std::string_view s,
                                           std::string_view sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + sep.size();
  }
}

}  // namespace table_detail

// Parses a linearized table. Rows are split on "<>" and columns on "|"
// (surrounding spaces optional, as sanitized cells never contain either
// token). Every field is passed through SanitizeText.
//
// Strict: each row must have exactly one or two non-empty fields.
// Lenient: empty fields and rows are dropped; rows with three or more fields
// become Pair(first, rest joined by " | ") which sanitizes to "a / b".
// Both modes throw ParseError when no cell survives.
inline CellList ParseCells(std::string_view s, ParseMode mode) {
  CellList cells;
  const auto rows = table_detail::Split(s, "<>");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<std::string> fields;
    for (std::string_view raw : table_detail::Split(rows[r], "|")) {
      fields.push_back(SanitizeText(raw));
    }
    if (mode == ParseMode::kStrict) {
      if (fields.size() > 2) {
        throw ParseError(r, "row " + std::to_string(r) + " has " +
                                std::to_string(fields.size()) + " columns");
      }
      for (const auto& f : fields) {
        if (f.empty()) {
          throw ParseError(r, "row " + std::to_string(r) + " has an empty field");
        }
      }
    } else {
      std::erase_if(fields, [](const std::string& f) { return f.empty(); });
    }
    if (fields.empty()) continue;
    if (fields.size() == 1) {
      cells.push_back(GroupCell{std::move(fields[0])});
    } else if (fields.size() == 2) {
      cells.push_back(PairCell{std::move(fields[0]), std::move(fields[1])});
    } else {
      std::string rest = fields[1];
      for (std::size_t i = 2; i < fields.size(); ++i) {
        rest += kColumnSeparator;
        rest += fields[i];
      }
      cells.push_back(PairCell{std::move(fields[0]), SanitizeText(rest)});
    }
  }
  if (cells.empty()) throw ParseError(ParseError::npos, "table has no cells");
  return cells;
}

inline InfoboxTable Delinearize(std::string_view s, ParseMode mode) {
  return InfoboxTable(ParseCells(s, mode));
}

enum class CellType { kGroup = 0, kHeader = 1, kValue = 2 };

inline constexpr CellType kAllCellTypes[] = {CellType::kHeader, CellType::kGroup,
                                             CellType::kValue};

inline std::string_view CellTypeName(CellType type) {
  switch (type) {
    case CellType::kGroup: return "group";
    case CellType::kHeader: return "header";
    case CellType::kValue: return "value";
  }
  return "?";
}

// Evaluation unit. `text` is the group name or header; `value` is set only
// for Value elements, which are compared as (header, value) pairs.
struct TypedElement {
  CellType type;
  std::string text;
  std::string value;

  friend auto operator<=>(const TypedElement&, const TypedElement&) = default;
};

inline std::vector<TypedElement> TypedElements(const CellList& cells) {
  std::vector<TypedElement> out;
  out.reserve(cells.size() * 2);
  for (const auto& cell : cells) {
    if (const auto* g = std::get_if<GroupCell>(&cell)) {
      out.push_back({CellType::kGroup, g->text, {}});
    } else {
      const auto& p = std::get<PairCell>(cell);
      out.push_back({CellType::kHeader, p.header, {}});
      out.push_back({CellType::kValue, p.header, p.value});
    }
  }
  return out;
}

inline std::vector<TypedElement> TypedElements(const InfoboxTable& table) {
  return TypedElements(table.cells());
}

}  // namespace wikitig

#endif  // WIKITIG_TABLE_HPP_
