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

#ifndef WIKITIG_EXTRACTION_HPP_
#define WIKITIG_EXTRACTION_HPP_

#include <array>
#include <charconv>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wikitig/error.hpp"
#include "wikitig/html.hpp"
#include "wikitig/split.hpp"
#include "wikitig/table.hpp"
#include "wikitig/text.hpp"

namespace wikitig {

enum class ImageFormat { kJpeg, kPng, kGif };

inline std::string_view ImageFormatName(ImageFormat f) {
  switch (f) {
    case ImageFormat::kJpeg: return "jpeg";
    case ImageFormat::kPng: return "png";
    case ImageFormat::kGif: return "gif";
  }
  return "?";
}

inline ImageFormat ParseImageFormatName(std::string_view name) {
  if (name == "jpeg") return ImageFormat::kJpeg;
  if (name == "png") return ImageFormat::kPng;
  if (name == "gif") return ImageFormat::kGif;
  throw Error(ErrorCode::kParse, "unknown image format \"" + std::string(name) + "\"");
}

// Format implied by the file extension of `url` (query and fragment ignored).
inline std::optional<ImageFormat> ImageFormatFromUrl(std::string_view url) {
  url = url.substr(0, url.find_first_of("?#"));
  const std::size_t slash = url.rfind('/');
  const std::string_view file =
      slash == std::string_view::npos ? url : url.substr(slash + 1);
  const std::size_t dot = file.rfind('.');
  if (dot == std::string_view::npos) return std::nullopt;
  const std::string ext = AsciiLowercase(file.substr(dot + 1));
  if (ext == "jpg" || ext == "jpeg" || ext == "jpe") return ImageFormat::kJpeg;
  if (ext == "png") return ImageFormat::kPng;
  if (ext == "gif") return ImageFormat::kGif;
  return std::nullopt;
}

struct ImageRef {
  std::string url;
  ImageFormat format = ImageFormat::kJpeg;
  std::optional<int> width_px;
  std::optional<int> height_px;

  friend bool operator==(const ImageRef&, const ImageRef&) = default;
};

struct InfoboxRecord {
  std::string id;  // source_page_id + "#" + infobox ordinal within the page
  std::string title;
  ImageRef image;
  std::optional<std::string> caption;
  InfoboxTable table;
  std::string source_page_id;
  SplitLabel split = SplitLabel::kTrain;

  friend bool operator==(const InfoboxRecord&, const InfoboxRecord&) = default;
};

enum class RejectReason {
  kNoTitleRow,
  kNoImageRow,
  kBadImageFormat,
  kEmptyTableAfterFilter,
  kMalformedHtml,
};

inline constexpr RejectReason kAllRejectReasons[] = {
    RejectReason::kNoTitleRow, RejectReason::kNoImageRow,
    RejectReason::kBadImageFormat, RejectReason::kEmptyTableAfterFilter,
    RejectReason::kMalformedHtml};

inline std::string_view RejectReasonName(RejectReason r) {
  switch (r) {
    case RejectReason::kNoTitleRow: return "no_title_row";
    case RejectReason::kNoImageRow: return "no_image_row";
    case RejectReason::kBadImageFormat: return "bad_image_format";
    case RejectReason::kEmptyTableAfterFilter: return "empty_table_after_filter";
    case RejectReason::kMalformedHtml: return "malformed_html";
  }
  return "?";
}

struct ExtractionReport {
  std::size_t pages_seen = 0;
  std::size_t infoboxes_seen = 0;
  std::size_t records_emitted = 0;
  std::map<RejectReason, std::size_t> rejected_by_reason;

  std::size_t rejected(RejectReason r) const {
    const auto it = rejected_by_reason.find(r);
    return it == rejected_by_reason.end() ? 0 : it->second;
  }

  std::size_t total_rejected() const {
    std::size_t n = 0;
    for (const auto& [reason, count] : rejected_by_reason) n += count;
    return n;
  }

  bool conserved() const {
    return records_emitted + total_rejected() == infoboxes_seen;
  }

  ExtractionReport& operator+=(const ExtractionReport& other) {
    pages_seen += other.pages_seen;
    infoboxes_seen += other.infoboxes_seen;
    records_emitted += other.records_emitted;
    for (const auto& [reason, count] : other.rejected_by_reason) {
      rejected_by_reason[reason] += count;
    }
    return *this;
  }

  friend bool operator==(const ExtractionReport&, const ExtractionReport&) = default;
};

struct PageExtraction {
  std::vector<InfoboxRecord> records;
  ExtractionReport report;
};

// Absent stays absent. A caption that already mentions the title
// (ASCII case-insensitive) is kept; otherwise it becomes "title - caption".
inline std::optional<std::string> NormalizeCaption(
    std::string_view title, const std::optional<std::string>& caption) {
  if (!caption) return std::nullopt;
  if (ContainsIgnoreCase(*caption, title)) return caption;
  return std::string(title) + " - " + *caption;
}

namespace extraction_detail {

inline std::string CleanCellText(std::string_view raw) {
  return SanitizeText(StripReferenceLinks(raw));
}

inline std::optional<int> PositiveInt(std::optional<std::string_view> s) {
  if (!s) return std::nullopt;
  int value = 0;
  const auto* begin = s->data();
  const auto* end = s->data() + s->size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr == begin || value <= 0) return std::nullopt;
  return value;
}

inline int ColumnSpan(const html::Node& cell) {
  return PositiveInt(cell.attribute("colspan")).value_or(1);
}

// Rows owned by `table` itself (not by a nested table), in document order.
inline std::vector<html::NodeId> OwnRows(const html::Document& doc,
                                         html::NodeId table) {
  std::vector<html::NodeId> rows;
  for (html::NodeId tr : doc.FindAll(table, "tr")) {
    if (doc.Ancestor(tr, "table") == table) rows.push_back(tr);
  }
  return rows;
}

inline std::vector<html::NodeId> RowCells(const html::Document& doc,
                                          html::NodeId tr) {
  std::vector<html::NodeId> cells;
  for (html::NodeId c : doc.node(tr).children) {
    const auto& tag = doc.node(c).tag;
    if (tag == "td" || tag == "th") cells.push_back(c);
  }
  return cells;
}

inline ImageRef MakeImageRef(const html::Node& img, ImageFormat format) {
  ImageRef ref;
  ref.url = std::string(img.attribute("src").value_or(""));
  ref.format = format;
  // Prefer the original file dimensions when the thumbnail markup carries them.
  auto w = PositiveInt(img.attribute("data-file-width"));
  auto h = PositiveInt(img.attribute("data-file-height"));
  if (!w || !h) {
    w = PositiveInt(img.attribute("width"));
    h = PositiveInt(img.attribute("height"));
  }
  if (w && h) {
    ref.width_px = w;
    ref.height_px = h;
  }
  return ref;
}

struct Verdict {
  std::optional<InfoboxRecord> record;
  RejectReason reason = RejectReason::kMalformedHtml;
};

inline Verdict ExamineInfobox(const html::Document& doc, html::NodeId table,
                              std::string_view page_id, std::size_t ordinal) {
  if (!doc.node(table).closed) return {std::nullopt, RejectReason::kMalformedHtml};
  const auto rows = OwnRows(doc, table);

  if (rows.empty()) return {std::nullopt, RejectReason::kNoTitleRow};
  const auto title_cells = RowCells(doc, rows[0]);
  if (title_cells.size() != 1) return {std::nullopt, RejectReason::kNoTitleRow};
  std::string title = CleanCellText(doc.TextContent(title_cells[0]));
  if (title.empty()) return {std::nullopt, RejectReason::kNoTitleRow};

  if (rows.size() < 2) return {std::nullopt, RejectReason::kNoImageRow};
  const auto images = doc.FindAll(rows[1], "img");
  if (images.empty()) return {std::nullopt, RejectReason::kNoImageRow};
  const html::Node& img = doc.node(images.front());
  const auto format = ImageFormatFromUrl(img.attribute("src").value_or(""));
  if (!format) return {std::nullopt, RejectReason::kBadImageFormat};

  std::optional<std::string> caption;
  if (std::string text = CleanCellText(doc.TextContent(rows[1])); !text.empty()) {
    caption = std::move(text);
  }

  CellList cells;
  for (std::size_t r = 2; r < rows.size(); ++r) {
    const auto row_cells = RowCells(doc, rows[r]);
    int width = 0;
    for (html::NodeId c : row_cells) width += ColumnSpan(doc.node(c));
    if (row_cells.empty() || width > 2) continue;
    if (row_cells.size() == 1) {
      std::string text = CleanCellText(doc.TextContent(row_cells[0]));
      if (!text.empty()) cells.push_back(GroupCell{std::move(text)});
    } else {
      std::string header = CleanCellText(doc.TextContent(row_cells[0]));
      std::string value = CleanCellText(doc.TextContent(row_cells[1]));
      if (!header.empty() && !value.empty()) {
        cells.push_back(PairCell{std::move(header), std::move(value)});
      }
    }
  }
  if (cells.empty()) return {std::nullopt, RejectReason::kEmptyTableAfterFilter};

  SplitLabel split = AssignSplit(title);
  caption = NormalizeCaption(title, caption);
  return {InfoboxRecord{std::string(page_id) + "#" + std::to_string(ordinal),
                        std::move(title), MakeImageRef(img, *format),
                        std::move(caption), InfoboxTable(std::move(cells)),
                        std::string(page_id), split},
          RejectReason::kMalformedHtml};
}

}  // namespace extraction_detail

// Extracts every qualifying infobox from one article. A qualifying infobox is
// a <table> with class token "infobox" whose first row is a single title cell
// and whose second row holds an image (jpeg/png/gif). Later rows become Group
// cells (one cell) or Pair cells (two cells); rows wider than two columns,
// counting colspan, are dropped. Pages that cannot be parsed at all are
// reported as a single malformed_html rejection and never throw.
inline PageExtraction ExtractInfoboxes(std::string_view html_page,
                                       std::string_view page_id) {
  using namespace extraction_detail;
  PageExtraction out;
  out.report.pages_seen = 1;
  std::optional<html::Document> doc;
  try {
    doc.emplace(html::Parse(html_page));
  } catch (const Error&) {
    out.report.infoboxes_seen = 1;
    out.report.rejected_by_reason[RejectReason::kMalformedHtml] = 1;
    return out;
  }
  std::size_t ordinal = 0;
  for (html::NodeId table : doc->FindAll(doc->root(), "table")) {
    if (!doc->node(table).has_class("infobox")) continue;
    ++out.report.infoboxes_seen;
    Verdict v = ExamineInfobox(*doc, table, page_id, ordinal++);
    if (v.record) {
      out.records.push_back(std::move(*v.record));
      ++out.report.records_emitted;
    } else {
      ++out.report.rejected_by_reason[v.reason];
    }
  }
  return out;
}

}  // namespace wikitig

#endif  // WIKITIG_EXTRACTION_HPP_
