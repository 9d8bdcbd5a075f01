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

#include "wikitig/split.hpp"

#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>
#include <string>

namespace wikitig {
namespace {

std::string Hex(const Sha256Digest& d) {
  static const char* kDigits = "0123456789abcdef";
  std::string out;
  for (auto b : d) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

// Residues below were computed with Python's hashlib:
//   int.from_bytes(hashlib.sha256(t.encode()).digest(), "big") % 20
TEST(AssignSplit, FrozenRegressionConstants) {
  EXPECT_EQ(Hex(Sha256("Fish and chips")),
            "789676e7ce1af27904cb9eab7e7d4a6ab8551acb48d602ff79cf6ed96b4eaa6a");
  EXPECT_EQ(TitleResidue("Fish and chips"), 18u);
  EXPECT_EQ(AssignSplit("Fish and chips"), SplitLabel::kTrain);
  EXPECT_EQ(TitleResidue("Low Pike"), 0u);
  EXPECT_EQ(AssignSplit("Low Pike"), SplitLabel::kTest);
  EXPECT_EQ(TitleResidue("Mount Everest"), 13u);
  EXPECT_EQ(AssignSplit("Fixture entity 12"), SplitLabel::kValid);
  EXPECT_EQ(AssignSplit("Fixture entity 29"), SplitLabel::kTest);
}

// Entities shown as test-set examples all land in the test split under the
// raw-digest, big-endian reading.
TEST(AssignSplit, PublishedTestExamplesAreTest) {
  for (const char* title :
       {"Low Pike", "Ferruginous Pygmy-owl", "Achlys (plant)", "Giant's Castle",
        "Upper Lake (Bhopal)", "May Lake", "Littoral Rock-thrush", "Gie\xC3\x9F" "en (region)"}) {
    EXPECT_EQ(AssignSplit(title), SplitLabel::kTest) << title;
  }
}

TEST(AssignSplit, DeterministicAndCaseSensitive) {
  EXPECT_EQ(AssignSplit("Fish and chips"), AssignSplit("Fish and chips"));
  EXPECT_NE(TitleResidue("Fish and chips"), TitleResidue("fish and chips"));
}

TEST(AssignSplit, EmptyTitleIsError) {
  EXPECT_THROW(AssignSplit(""), Error);
}

TEST(BigEndianMod, MatchesBigIntegerOracle) {
  using boost::multiprecision::cpp_int;
  std::mt19937_64 rng(99);
  for (int i = 0; i < 1000; ++i) {
    Sha256Digest d;
    for (auto& b : d) b = static_cast<std::uint8_t>(rng());
    cpp_int value;
    import_bits(value, d.begin(), d.end(), 8, /*msv_first=*/true);
    EXPECT_EQ(BigEndianMod(d, 20), static_cast<unsigned>(value % 20));
  }
}

TEST(AssignSplit, Distribution) {
  std::mt19937_64 rng(12345);
  std::array<std::size_t, 3> counts{};
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const std::string title = "title-" + std::to_string(rng());
    ++counts[static_cast<std::size_t>(AssignSplit(title))];
  }
  EXPECT_NEAR(counts[0] / double(n), 0.90, 0.005);
  EXPECT_NEAR(counts[1] / double(n), 0.05, 0.005);
  EXPECT_NEAR(counts[2] / double(n), 0.05, 0.005);
}

TEST(SplitName, RoundTrip) {
  for (auto s : kAllSplits) EXPECT_EQ(ParseSplitName(SplitName(s)), s);
  EXPECT_THROW(ParseSplitName("dev"), Error);
}

}  // namespace
}  // namespace wikitig
