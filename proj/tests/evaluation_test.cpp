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

#include "wikitig/evaluation.hpp"

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "test_util.hpp"

namespace wikitig {
namespace {

using Strings = std::vector<std::string>;

TEST(Evaluate, IdenticalTables) {
  const Strings t{testing::kFishAndChipsLinearized, "Taxonomy <> Kingdom | Animalia"};
  const MetricReport r = EvaluateStrings(t, t);
  EXPECT_EQ(r.documents, 2u);
  EXPECT_EQ(r.rouge1.f1, 1.0);
  EXPECT_EQ(r.rouge2.f1, 1.0);
  EXPECT_EQ(r.rougel.f1, 1.0);
  EXPECT_EQ(r.table_f1[TypeIndex(CellType::kHeader)].mean, 1.0);
  EXPECT_EQ(r.table_f1[TypeIndex(CellType::kValue)].mean, 1.0);
  EXPECT_EQ(r.table_f1[TypeIndex(CellType::kGroup)].mean, 1.0);
  EXPECT_EQ(r.table_f1[TypeIndex(CellType::kGroup)].included, 1u);

  const auto json = ReportToJson(r);
  EXPECT_FALSE(json.contains("config"));
  EXPECT_EQ(json["rouge"]["1"], 100.0);
  EXPECT_EQ(json["table_f1"]["value"], 100.0);
  EXPECT_EQ(json["corpus_f1"]["header"], 100.0);
  EXPECT_EQ(json["per_document"][0]["table_f1"]["group"], nullptr);
  EXPECT_EQ(json["per_document"][1]["table_f1"]["group"], 1.0);
}

TEST(Evaluate, ClippedDuplicates) {
  const MetricReport r = EvaluateStrings(Strings{"X | Y <> X | Y"}, Strings{"X | Y"});
  const auto json = ReportToJson(r, {{"mode", "lenient"}});
  EXPECT_EQ(json["config"]["mode"], "lenient");
  EXPECT_EQ(json["table_f1"]["value"], 66.7);
  EXPECT_EQ(json["table_f1"]["header"], 66.7);
  EXPECT_DOUBLE_EQ(json["raw"]["table_f1"]["value"]["mean"].get<double>(), 2.0 / 3.0);
  EXPECT_EQ(json["raw"]["corpus_f1"]["value"]["precision"], 0.5);
}

TEST(Evaluate, JsonKeyOrder) {
  const auto json = ReportToJson(EvaluateStrings(Strings{"A | B"}, Strings{"A | B"}),
                                 {{"command", "eval-table"}});
  std::vector<std::string> keys;
  for (const auto& [k, v] : json.items()) keys.push_back(k);
  EXPECT_EQ(keys, (Strings{"config", "documents", "rouge", "table_f1", "corpus_f1", "raw",
                           "per_document"}));
}

TEST(Evaluate, LenientMergesExtraColumns) {
  const MetricReport r = EvaluateStrings(Strings{"A | B | C"}, Strings{"A | B"});
  EXPECT_EQ(r.table_f1[TypeIndex(CellType::kHeader)].mean, 1.0);
  EXPECT_EQ(r.table_f1[TypeIndex(CellType::kValue)].mean, 0.0);
}

TEST(Evaluate, LenientTreatsCelllessOutputAsEmpty) {
  const MetricReport r = EvaluateStrings(Strings{" | <> | "}, Strings{"A | B"});
  EXPECT_EQ(r.table_f1[TypeIndex(CellType::kHeader)].mean, 0.0);
  EXPECT_EQ(r.table_f1[TypeIndex(CellType::kHeader)].included, 1u);
  EXPECT_EQ(r.corpus_f1[TypeIndex(CellType::kValue)].f1, 0.0);
  EXPECT_EQ(r.rouge1.f1, 0.0);
}

TEST(Evaluate, StrictReportsDocumentIndex) {
  const Strings gen{"A | B", "A | B | C"};
  const Strings ref{"A | B", "A | B"};
  EvalOptions strict;
  strict.mode = ParseMode::kStrict;
  try {
    EvaluateStrings(gen, ref, strict);
    FAIL();
  } catch (const DocumentParseError& e) {
    EXPECT_EQ(e.document(), 1u);
    EXPECT_FALSE(e.reference());
    EXPECT_EQ(e.code(), ErrorCode::kParse);
  }
}

TEST(Evaluate, MalformedReferenceAlwaysFails) {
  try {
    EvaluateStrings(Strings{"A | B"}, Strings{"A | | B"});
    FAIL();
  } catch (const DocumentParseError& e) {
    EXPECT_EQ(e.document(), 0u);
    EXPECT_TRUE(e.reference());
  }
}

TEST(Evaluate, InputErrors) {
  EXPECT_THROW(EvaluateStrings(Strings{}, Strings{}), Error);
  try {
    EvaluateStrings(Strings{"A | B"}, Strings{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLengthMismatch);
  }
}

TEST(Evaluate, ThreadCountDoesNotChangeResults) {
  std::mt19937_64 rng(5);
  Strings gen;
  Strings ref;
  for (int i = 0; i < 300; ++i) {
    gen.push_back(Linearize(testing::RandomCells(rng, 0, 8, true)));
    ref.push_back(Linearize(testing::RandomCells(rng, 1, 8, true)));
  }
  EvalOptions one;
  EvalOptions many;
  many.threads = 8;
  EXPECT_EQ(ReportToJson(EvaluateStrings(gen, ref, one)).dump(),
            ReportToJson(EvaluateStrings(gen, ref, many)).dump());
}

TEST(DisplayScore, RoundsToOneDecimal) {
  EXPECT_EQ(DisplayScore(2.0 / 3.0), 66.7);
  EXPECT_EQ(DisplayScore(1.0), 100.0);
  EXPECT_EQ(DisplayScore(0.0), 0.0);
  EXPECT_EQ(DisplayScore(0.12345), 12.3);
}

class CompareReportsTest : public ::testing::Test {
 protected:
  static nlohmann::json Report(const Strings& gen, const Strings& ref) {
    return ReportToJson(EvaluateStrings(gen, ref));
  }
};

TEST_F(CompareReportsTest, ScoresEveryMetric) {
  const Strings ref{"A | B <> C | D", "E | F", "G <> H | I", "J | K <> L | M"};
  const Strings good = ref;
  const Strings bad{"A | X", "E | Y", "Q | Z", "J | K"};
  const auto sig = CompareReports(Report(good, ref), Report(bad, ref), 1000, 1);
  ASSERT_EQ(sig.size(), 6u);
  EXPECT_EQ(sig[0].metric, "rouge1");
  EXPECT_EQ(sig[5].metric, "table_f1.value");
  EXPECT_EQ(sig[0].documents, 4u);
  ASSERT_TRUE(sig[0].result.has_value());
  EXPECT_LT(sig[0].result->p_value, 0.05);
  // Only document 2 has a group cell.
  EXPECT_EQ(sig[4].metric, "table_f1.group");
  EXPECT_EQ(sig[4].documents, 1u);
  EXPECT_FALSE(sig[4].result.has_value());
}

TEST_F(CompareReportsTest, PairsById) {
  const Strings ref{"A | B", "C | D", "E | F"};
  auto a = Report(Strings{"A | B", "C | X", "E | F"}, ref);
  auto b = Report(Strings{"A | B", "C | D", "E | X"}, ref);
  auto reversed = b;
  std::reverse(reversed["per_document"].begin(), reversed["per_document"].end());
  const auto x = CompareReports(a, b, 500, 3);
  const auto y = CompareReports(a, reversed, 500, 3);
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_EQ(x[i].result, y[i].result);
}

TEST_F(CompareReportsTest, Errors) {
  const Strings ref{"A | B", "C | D"};
  auto a = Report(ref, ref);
  auto b = a;
  b["per_document"][1]["id"] = "other";
  try {
    CompareReports(a, b, 10, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIdMismatch);
    EXPECT_NE(std::string(e.what()).find("other"), std::string::npos);
  }
  EXPECT_THROW(CompareReports(a, a, 0, 0), Error);
  EXPECT_THROW(CompareReports(nlohmann::json::object(), a, 10, 0), Error);
}

}  // namespace
}  // namespace wikitig
