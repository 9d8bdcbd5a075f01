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

#ifndef WIKITIG_PAGES_HPP_
#define WIKITIG_PAGES_HPP_

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "wikitig/error.hpp"
#include "wikitig/extraction.hpp"
#include "wikitig/parallel.hpp"

namespace wikitig {

struct Page {
  std::string id;
  std::string html;
};

// A dump stream is a concatenation of pages, each introduced by a line that
// consists solely of:   <!-- page: ID -->
// Text before the first delimiter is ignored.
inline std::optional<std::string> PageDelimiterId(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
  while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
  constexpr std::string_view kOpen = "<!-- page:";
  constexpr std::string_view kClose = "-->";
  if (!line.starts_with(kOpen) || !line.ends_with(kClose)) return std::nullopt;
  std::string_view id = line.substr(kOpen.size(), line.size() - kOpen.size() - kClose.size());
  while (!id.empty() && id.front() == ' ') id.remove_prefix(1);
  while (!id.empty() && id.back() == ' ') id.remove_suffix(1);
  if (id.empty()) return std::nullopt;
  return std::string(id);
}

inline std::vector<Page> ReadDumpStream(std::istream& in) {
  std::vector<Page> pages;
  std::string line;
  while (std::getline(in, line)) {
    if (auto id = PageDelimiterId(line)) {
      pages.push_back(Page{std::move(*id), {}});
    } else if (!pages.empty()) {
      pages.back().html += line;
      pages.back().html += '\n';
    }
  }
  return pages;
}

inline std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

// A directory yields one page per *.html file (id = file stem, sorted by
// name). A file containing page delimiters is read as a dump stream; any
// other file is one page.
inline std::vector<Page> ReadPages(const std::filesystem::path& input) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (fs::is_directory(input, ec)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(input)) {
      if (entry.is_regular_file() && entry.path().extension() == ".html") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    std::vector<Page> pages;
    for (const auto& f : files) pages.push_back(Page{f.stem().string(), ReadFile(f)});
    return pages;
  }
  std::string content = ReadFile(input);
  std::istringstream stream(content);
  auto pages = ReadDumpStream(stream);
  if (pages.empty() && !content.empty()) {
    pages.push_back(Page{input.stem().string(), std::move(content)});
  }
  return pages;
}

// Extracts pages on `threads` workers; records keep page order.
inline PageExtraction ExtractPages(const std::vector<Page>& pages, std::size_t threads = 1) {
  std::vector<PageExtraction> per_page(pages.size());
  ParallelFor(pages.size(), threads, [&](std::size_t i) {
    per_page[i] = ExtractInfoboxes(pages[i].html, pages[i].id);
  });
  PageExtraction out;
  for (auto& p : per_page) {
    std::move(p.records.begin(), p.records.end(), std::back_inserter(out.records));
    out.report += p.report;
  }
  return out;
}

}  // namespace wikitig

#endif  // WIKITIG_PAGES_HPP_
