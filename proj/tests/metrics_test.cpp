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

#include "wikitig/metrics.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

namespace wikitig {
namespace {

TypedElement V(std::string h, std::string v) { return {CellType::kValue, std::move(h), std::move(v)}; }
TypedElement H(std::string h) { return {CellType::kHeader, std::move(h), {}}; }

TEST(ClippedMatch, Examples) {
  CellMultiset gen(CellType::kHeader);
  CellMultiset ref(CellType::kHeader);
  gen.Add(H("X"), 2);
  ref.Add(H("X"));
  EXPECT_EQ(ClippedMatch(gen, ref, H("X")), 1u);

  CellMultiset only(CellType::kHeader);
  only.Add(H("X"));
  EXPECT_EQ(ClippedMatch(only, CellMultiset(CellType::kHeader), H("X")), 0u);

  CellMultiset three(CellType::kHeader);
  three.Add(H("X"), 3);
  EXPECT_EQ(ClippedMatch(three, three, H("X")), 3u);
}

TEST(ClippedMatch, TypeMismatch) {
  CellMultiset header(CellType::kHeader);
  CellMultiset group(CellType::kGroup);
  EXPECT_THROW(ClippedMatch(header, group, H("X")), Error);
  EXPECT_THROW(ClippedMatch(header, header, V("X", "Y")), Error);
  EXPECT_THROW(header.Add(V("X", "Y")), Error);
}

TEST(CellMultiset, TotalsMatchElementCounts) {
  const CellList cells{Pair("A", "B"), Pair("A", "C"), Group("G"), Pair("A", "B")};
  EXPECT_EQ(CellMultiset(CellType::kHeader, cells).total(), 3u);
  EXPECT_EQ(CellMultiset(CellType::kHeader, cells).count(H("A")), 3u);
  EXPECT_EQ(CellMultiset(CellType::kValue, cells).count(V("A", "B")), 2u);
  EXPECT_EQ(CellMultiset(CellType::kGroup, cells).total(), 1u);
}

TEST(TableF1, Identity) {
  std::mt19937_64 rng(1);
  std::vector<CellList> docs;
  for (int i = 0; i < 10; ++i) docs.push_back(testing::RandomCells(rng, 1, 6, true));
  for (CellType t : kAllCellTypes) {
    const auto r = TableF1(docs, docs, t);
    if (r.included == 0) continue;
    EXPECT_DOUBLE_EQ(r.mean, 1.0);
    EXPECT_EQ(CorpusF1(docs, docs, t), (PRF{1.0, 1.0, 1.0}));
  }
}

TEST(TableF1, ClippingFixture) {
  // Hand evaluation: Match = min(2, 1) = 1; P = 1/2, R = 1/1, F1 = 2/3.
  const std::vector<CellList> gen{{Pair("X", "Y"), Pair("X", "Y")}};
  const std::vector<CellList> ref{{Pair("X", "Y")}};
  const auto r = TableF1(gen, ref, CellType::kValue);
  EXPECT_EQ(r.mean, 2.0 / 3.0);
  EXPECT_EQ(r.included, 1u);
  const auto prf = CorpusF1(gen, ref, CellType::kValue);
  EXPECT_EQ(prf.precision, 0.5);
  EXPECT_EQ(prf.recall, 1.0);
  const auto oracle = testing::BruteForceTableF1(gen, ref, CellType::kValue);
  EXPECT_DOUBLE_EQ(oracle.first, 2.0 / 3.0);
}

TEST(TableF1, NoOverlapIsZero) {
  const std::vector<CellList> gen{{Pair("A", "B")}};
  const std::vector<CellList> ref{{Pair("C", "D")}};
  for (CellType t : {CellType::kHeader, CellType::kValue}) {
    EXPECT_EQ(TableF1(gen, ref, t).mean, 0.0);
  }
}

TEST(TableF1, InclusionRule) {
  // doc0: no groups on either side (excluded); doc1: groups only in ref
  // (included, F1 0); doc2: identical groups (F1 1).
  const std::vector<CellList> gen{{Pair("A", "B")}, {Pair("A", "B")}, {Group("G")}};
  const std::vector<CellList> ref{{Pair("A", "B")}, {Group("G")}, {Group("G")}};
  const auto r = TableF1(gen, ref, CellType::kGroup);
  EXPECT_EQ(r.included, 2u);
  EXPECT_EQ(r.per_doc[0], std::nullopt);
  EXPECT_EQ(r.per_doc[1], 0.0);
  EXPECT_EQ(r.per_doc[2], 1.0);
  EXPECT_DOUBLE_EQ(r.mean, 0.5);
}

TEST(TableF1, EmptyGenerationScoresZero) {
  const std::vector<CellList> gen{{}};
  const std::vector<CellList> ref{{Pair("A", "B")}};
  EXPECT_EQ(TableF1(gen, ref, CellType::kHeader).mean, 0.0);
  EXPECT_EQ(TableF1(gen, ref, CellType::kHeader).included, 1u);
  EXPECT_EQ(CorpusF1(gen, ref, CellType::kHeader), (PRF{0.0, 0.0, 0.0}));
}

TEST(TableF1, Errors) {
  const std::vector<CellList> one{{Group("A")}};
  const std::vector<CellList> two{{Group("A")}, {Group("B")}};
  try {
    TableF1(one, two, CellType::kGroup);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLengthMismatch);
  }
  try {
    CorpusF1({}, {}, CellType::kGroup);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyInput);
  }
}

TEST(CorpusF1, PooledFixture) {
  // Pooled gen {A:2}, ref {A:1, B:1}: match 1, P = 1/2, R = 1/2, F1 = 1/2.
  const std::vector<CellList> gen{{Group("A")}, {Group("A")}};
  const std::vector<CellList> ref{{Group("A")}, {Group("B")}};
  EXPECT_EQ(CorpusF1(gen, ref, CellType::kGroup), (PRF{0.5, 0.5, 0.5}));
  const auto oracle = testing::BruteForceCorpusF1(gen, ref, CellType::kGroup);
  EXPECT_EQ(oracle.f1, 0.5);
}

TEST(CorpusF1, AllEmptyGenerations) {
  const std::vector<CellList> gen{{}, {}};
  const std::vector<CellList> ref{{Group("A")}, {Pair("B", "C")}};
  for (CellType t : kAllCellTypes) EXPECT_EQ(CorpusF1(gen, ref, t).f1, 0.0);
}

TEST(Metrics, MatchBruteForceOracle) {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> docs(1, 4);
    std::vector<CellList> gen;
    std::vector<CellList> ref;
    const int n = docs(rng);
    for (int d = 0; d < n; ++d) {
      gen.push_back(testing::RandomCells(rng, 0, 6, true));
      ref.push_back(testing::RandomCells(rng, 1, 6, true));
    }
    for (CellType t : kAllCellTypes) {
      const auto lib = TableF1(gen, ref, t);
      const auto [mean, included] = testing::BruteForceTableF1(gen, ref, t);
      EXPECT_NEAR(lib.mean, mean, 1e-9);
      EXPECT_EQ(lib.included, included);
      const auto c = CorpusF1(gen, ref, t);
      const auto o = testing::BruteForceCorpusF1(gen, ref, t);
      EXPECT_NEAR(c.precision, o.precision, 1e-9);
      EXPECT_NEAR(c.recall, o.recall, 1e-9);
      EXPECT_NEAR(c.f1, o.f1, 1e-9);
    }
  }
}

TEST(Metrics, SwapSymmetryAndBounds) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const std::vector<CellList> gen{testing::RandomCells(rng, 0, 6, true)};
    const std::vector<CellList> ref{testing::RandomCells(rng, 0, 6, true)};
    for (CellType t : kAllCellTypes) {
      const auto ab = CorpusF1(gen, ref, t);
      const auto ba = CorpusF1(ref, gen, t);
      EXPECT_EQ(ab.precision, ba.recall);
      EXPECT_EQ(ab.recall, ba.precision);
      EXPECT_EQ(ab.f1, ba.f1);
      for (double x : {ab.precision, ab.recall, ab.f1}) {
        EXPECT_GE(x, 0.0);
        EXPECT_LE(x, 1.0);
      }
    }
  }
}

TEST(Metrics, SingleDocumentCorpusEqualsTable) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    const std::vector<CellList> gen{testing::RandomCells(rng, 0, 6, true)};
    const std::vector<CellList> ref{testing::RandomCells(rng, 1, 6, true)};
    for (CellType t : kAllCellTypes) {
      const auto table = TableF1(gen, ref, t);
      const auto corpus = CorpusF1(gen, ref, t);
      EXPECT_EQ(table.mean, corpus.f1);
    }
  }
}

TEST(Metrics, DuplicationNeverExceedsReferenceCount) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    CellList gen = testing::RandomCells(rng, 1, 5, true);
    const CellList ref = testing::RandomCells(rng, 1, 5, true);
    const CellMultiset r(CellType::kValue, ref);
    for (int k = 0; k < 4; ++k) {
      gen.push_back(gen.front());
      const CellMultiset g(CellType::kValue, gen);
      for (const auto& [e, n] : g.counts()) {
        EXPECT_LE(ClippedMatch(g, r, e), r.count(e));
      }
      EXPECT_LE(TotalClippedMatch(g, r), r.total());
    }
  }
}

TEST(MakePrf, ZeroDenominators) {
  EXPECT_EQ(MakePrf(0, 0, 0), (PRF{0.0, 0.0, 0.0}));
  EXPECT_EQ(MakePrf(0, 3, 0), (PRF{0.0, 0.0, 0.0}));
  const auto x = MakePrf(1, 2, 4);
  EXPECT_EQ(x.f1, 2 * 0.5 * 0.25 / 0.75);
}

}  // namespace
}  // namespace wikitig
