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

#include "wikitig/extraction.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <regex>
#include <sstream>

#include "test_util.hpp"
#include "wikitig/pages.hpp"

namespace wikitig {
namespace {

const std::filesystem::path kPages = std::filesystem::path(WIKITIG_FIXTURES) / "pages";

PageExtraction ExtractFixture(const std::string& name) {
  return ExtractInfoboxes(ReadFile(kPages / name), std::filesystem::path(name).stem().string());
}

TEST(Extraction, FishAndChipsInfobox) {
  const auto out = ExtractFixture("01_fish_and_chips.html");
  ASSERT_EQ(out.records.size(), 1u);
  const auto& r = out.records[0];
  EXPECT_EQ(r.title, "Fish and chips");
  EXPECT_EQ(r.id, "01_fish_and_chips#0");
  EXPECT_EQ(r.source_page_id, "01_fish_and_chips");
  EXPECT_EQ(r.image.format, ImageFormat::kJpeg);
  EXPECT_EQ(r.image.width_px, 2048);
  EXPECT_EQ(r.image.height_px, 1536);
  EXPECT_EQ(r.caption, "Fish and chips with mushy peas");
  EXPECT_EQ(r.table.cells(), testing::FishAndChipsCells());
  EXPECT_EQ(Linearize(r.table), testing::kFishAndChipsLinearized);
  EXPECT_EQ(r.split, AssignSplit("Fish and chips"));
  EXPECT_TRUE(out.report.conserved());
}

TEST(Extraction, GroupsAndReferenceMarkers) {
  const auto out = ExtractFixture("02_mount_everest.html");
  ASSERT_EQ(out.records.size(), 1u);
  const auto& r = out.records[0];
  EXPECT_EQ(r.caption, "Mount Everest - Everest's north face from the Tibetan Plateau");
  EXPECT_EQ(r.table.cells(),
            (CellList{Group("Highest point"), Pair("Elevation", "8,848.86 m (29,031.7 ft)"),
                      Pair("Prominence", "8,848.86 m (29,031.7 ft)"),
                      Pair("Listing", "Seven Summits Eight-thousander"), Group("Naming"),
                      Pair("Native name", "Chomolungma"),
                      Pair("English translation", "Holy Mother")}));
  EXPECT_EQ(r.image.width_px, 300);
  EXPECT_EQ(r.image.height_px, 200);
}

TEST(Extraction, DropsRowsWiderThanTwoColumns) {
  const auto out = ExtractFixture("03_low_pike.html");
  ASSERT_EQ(out.records.size(), 1u);
  EXPECT_EQ(out.records[0].table.cells(), (CellList{Pair("Elevation", "508 m (1,667 ft)")}));
  EXPECT_EQ(out.records[0].caption, "Low Pike from High Pike");
}

TEST(Extraction, CaptionJoinedWithTitle) {
  const auto may = ExtractFixture("04_may_lake.html");
  ASSERT_EQ(may.records.size(), 1u);
  EXPECT_EQ(may.records[0].caption, "May Lake - View from the trail up Mt. Hoffman.");
  const auto castle = ExtractFixture("05_giants_castle.html");
  ASSERT_EQ(castle.records.size(), 1u);
  EXPECT_EQ(castle.records[0].title, "Giant's Castle");
  EXPECT_EQ(castle.records[0].caption, "Panorama at Giant's Castle");
  EXPECT_EQ(castle.records[0].image.format, ImageFormat::kPng);
}

TEST(Extraction, NestedTablesAndSeparatorsInCells) {
  const auto out = ExtractFixture("06_pygmy_owl.html");
  ASSERT_EQ(out.records.size(), 1u);
  const auto& r = out.records[0];
  EXPECT_EQ(r.caption, std::nullopt);
  EXPECT_EQ(r.image.format, ImageFormat::kGif);
  EXPECT_EQ(r.table.cells(),
            (CellList{Group("Scientific classification"), Pair("Kingdom:", "Animalia"),
                      Pair("Class:", "Aves"),
                      Pair("Binomial / name", "Glaucidium brasilianum (Gmelin, 1788)"),
                      Pair("Family:", "Strigidae owls")}));
}

TEST(Extraction, RejectionReasons) {
  const auto no_image = ExtractFixture("07_no_image.html");
  EXPECT_TRUE(no_image.records.empty());
  EXPECT_EQ(no_image.report.rejected(RejectReason::kNoImageRow), 1u);

  const auto bad = ExtractFixture("08_bad_format.html");
  EXPECT_TRUE(bad.records.empty());
  EXPECT_EQ(bad.report.rejected(RejectReason::kBadImageFormat), 1u);

  const auto empty = ExtractFixture("09_empty_table.html");
  EXPECT_TRUE(empty.records.empty());
  EXPECT_EQ(empty.report.rejected(RejectReason::kEmptyTableAfterFilter), 1u);

  const auto none = ExtractFixture("10_no_infobox.html");
  EXPECT_EQ(none.report.infoboxes_seen, 0u);
  EXPECT_EQ(none.report.pages_seen, 1u);
}

TEST(Extraction, TitleRowRules) {
  const auto two_cells = ExtractInfoboxes(
      "<table class=infobox><tr><th>A</th><td>B</td></tr>"
      "<tr><td><img src=x.jpg></td></tr><tr><th>k</th><td>v</td></tr></table>",
      "p");
  EXPECT_EQ(two_cells.report.rejected(RejectReason::kNoTitleRow), 1u);
  const auto blank = ExtractInfoboxes(
      "<table class=infobox><tr><th> [1] </th></tr>"
      "<tr><td><img src=x.jpg></td></tr><tr><th>k</th><td>v</td></tr></table>",
      "p");
  EXPECT_EQ(blank.report.rejected(RejectReason::kNoTitleRow), 1u);
  const auto one_row = ExtractInfoboxes("<table class=infobox><tr><th>A</th></tr></table>", "p");
  EXPECT_EQ(one_row.report.rejected(RejectReason::kNoImageRow), 1u);
}

TEST(Extraction, MalformedPagesAreCounted) {
  const auto truncated = ExtractInfoboxes("<html><table class=\"infobox", "bad");
  EXPECT_TRUE(truncated.records.empty());
  EXPECT_EQ(truncated.report.rejected(RejectReason::kMalformedHtml), 1u);
  EXPECT_TRUE(truncated.report.conserved());

  const auto unclosed = ExtractInfoboxes(
      "<table class=infobox><tr><th>A</th></tr><tr><td><img src=a.png></td></tr>"
      "<tr><th>k</th><td>v</td></tr>",
      "open");
  EXPECT_EQ(unclosed.report.rejected(RejectReason::kMalformedHtml), 1u);
  EXPECT_TRUE(unclosed.report.conserved());
}

TEST(Extraction, MultipleInfoboxesGetOrdinals) {
  const std::string box =
      "<table class=infobox><tr><th>T</th></tr><tr><td><img src=a.png></td></tr>"
      "<tr><th>k</th><td>v</td></tr></table>";
  const auto out = ExtractInfoboxes(box + "<table class=infobox></table>" + box, "pg");
  ASSERT_EQ(out.records.size(), 2u);
  EXPECT_EQ(out.records[0].id, "pg#0");
  EXPECT_EQ(out.records[1].id, "pg#2");
  EXPECT_EQ(out.report.infoboxes_seen, 3u);
  EXPECT_TRUE(out.report.conserved());
}

TEST(Extraction, ImageFormatFromUrl) {
  EXPECT_EQ(ImageFormatFromUrl("a/b/c.JPG"), ImageFormat::kJpeg);
  EXPECT_EQ(ImageFormatFromUrl("c.jpeg?x=1"), ImageFormat::kJpeg);
  EXPECT_EQ(ImageFormatFromUrl("thumb/x.svg/220px-x.svg.png"), ImageFormat::kPng);
  EXPECT_EQ(ImageFormatFromUrl("x.gif#frag"), ImageFormat::kGif);
  EXPECT_EQ(ImageFormatFromUrl("x.svg"), std::nullopt);
  EXPECT_EQ(ImageFormatFromUrl("x.webp"), std::nullopt);
  EXPECT_EQ(ImageFormatFromUrl("noext"), std::nullopt);
  EXPECT_EQ(ImageFormatFromUrl("dir.png/noext"), std::nullopt);
}

TEST(NormalizeCaption, Examples) {
  EXPECT_EQ(NormalizeCaption("May Lake", "View from the trail up Mt. Hoffman."),
            "May Lake - View from the trail up Mt. Hoffman.");
  EXPECT_EQ(NormalizeCaption("Giant's Castle", "Panorama at Giant's Castle"),
            "Panorama at Giant's Castle");
  EXPECT_EQ(NormalizeCaption("X", std::nullopt), std::nullopt);
  EXPECT_EQ(NormalizeCaption("Fish and chips", "fish and chips wrapped"),
            "fish and chips wrapped");
}

TEST(Extraction, CorpusInvariants) {
  const auto pages = ReadPages(kPages);
  ASSERT_EQ(pages.size(), 10u);
  const auto once = ExtractPages(pages, 1);
  const auto again = ExtractPages(pages, 4);
  EXPECT_EQ(once.records, again.records);
  EXPECT_EQ(once.report, again.report);
  EXPECT_TRUE(once.report.conserved());
  const std::regex marker(R"(\[#?[0-9]+\])");
  for (const auto& r : once.records) {
    EXPECT_FALSE(std::regex_search(Linearize(r.table), marker)) << r.id;
    if (r.caption) {
      EXPECT_TRUE(ContainsIgnoreCase(*r.caption, r.title));
    }
  }
}

TEST(Pages, DumpStream) {
  std::istringstream in(
      "preamble ignored\n<!-- page: A -->\n<p>one</p>\n  <!-- page:  B  -->\r\n<p>two</p>\n");
  const auto pages = ReadDumpStream(in);
  ASSERT_EQ(pages.size(), 2u);
  EXPECT_EQ(pages[0].id, "A");
  EXPECT_EQ(pages[0].html, "<p>one</p>\n");
  EXPECT_EQ(pages[1].id, "B");
  EXPECT_EQ(PageDelimiterId("<!-- page: -->"), std::nullopt);
}

TEST(ExtractionReport, MergeIsFieldwise) {
  ExtractionReport a;
  a.pages_seen = 1;
  a.infoboxes_seen = 2;
  a.records_emitted = 1;
  a.rejected_by_reason[RejectReason::kNoImageRow] = 1;
  ExtractionReport b;
  b.pages_seen = 2;
  b.infoboxes_seen = 1;
  b.rejected_by_reason[RejectReason::kNoImageRow] = 1;
  ExtractionReport ab = a;
  ab += b;
  ExtractionReport ba = b;
  ba += a;
  EXPECT_EQ(ab, ba);
  EXPECT_EQ(ab.pages_seen, 3u);
  EXPECT_EQ(ab.rejected(RejectReason::kNoImageRow), 2u);
  EXPECT_TRUE(ab.conserved());
}

}  // namespace
}  // namespace wikitig
