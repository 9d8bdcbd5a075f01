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

#ifndef WIKITIG_EVALUATION_HPP_
#define WIKITIG_EVALUATION_HPP_

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "wikitig/error.hpp"
#include "wikitig/metrics.hpp"
#include "wikitig/parallel.hpp"
#include "wikitig/table.hpp"

namespace wikitig {

struct EvalDocument {
  std::string id;
  std::string generated;  // linearized model output
  std::string reference;  // linearized gold table
};

struct EvalOptions {
  ParseMode mode = ParseMode::kLenient;
  RougeOptions rouge;
  std::size_t threads = 1;
};

// A generated or reference string that could not be parsed.
class DocumentParseError : public ParseError {
 public:
  DocumentParseError(std::size_t document, bool reference, const ParseError& cause)
      : ParseError(cause.row(), std::string(reference ? "reference" : "generated") +
                                    " table of document " + std::to_string(document) +
                                    ": " + cause.what()),
        document_(document),
        reference_(reference) {}

  std::size_t document() const noexcept { return document_; }
  bool reference() const noexcept { return reference_; }

 private:
  std::size_t document_;
  bool reference_;
};

inline std::size_t TypeIndex(CellType t) { return static_cast<std::size_t>(t); }

struct DocumentScores {
  std::string id;
  PRF rouge1;
  PRF rouge2;
  PRF rougel;
  std::array<std::optional<double>, 3> table_f1;  // indexed by TypeIndex
};

struct MetricReport {
  std::size_t documents = 0;
  // Means of the per-document precision, recall and F1.
  PRF rouge1;
  PRF rouge2;
  PRF rougel;
  std::array<TableF1Result, 3> table_f1;
  std::array<PRF, 3> corpus_f1;
  std::vector<DocumentScores> per_document;
};

// Scores generated tables against references. Generated strings are parsed
// with `options.mode`; in lenient mode an unparseable output counts as an
// empty table. References are always parsed strictly. ROUGE runs on the raw
// strings.
inline MetricReport Evaluate(std::span<const EvalDocument> docs,
                             const EvalOptions& options = {}) {
  if (docs.empty()) throw Error(ErrorCode::kEmptyInput, "no documents to evaluate");
  const std::size_t n = docs.size();
  std::vector<CellList> gen(n);
  std::vector<CellList> ref(n);
  MetricReport report;
  report.documents = n;
  report.per_document.resize(n);

  ParallelFor(n, options.threads, [&](std::size_t d) {
    try {
      ref[d] = ParseCells(docs[d].reference, ParseMode::kStrict);
    } catch (const ParseError& e) {
      throw DocumentParseError(d, true, e);
    }
    try {
      gen[d] = ParseCells(docs[d].generated, options.mode);
    } catch (const ParseError& e) {
      if (options.mode == ParseMode::kStrict) throw DocumentParseError(d, false, e);
      gen[d].clear();
    }
    auto& s = report.per_document[d];
    s.id = docs[d].id;
    const auto g = RougePreprocess(docs[d].generated, options.rouge);
    const auto r = RougePreprocess(docs[d].reference, options.rouge);
    s.rouge1 = RougeN(g, r, 1);
    s.rouge2 = RougeN(g, r, 2);
    s.rougel = RougeL(g, r);
  });

  auto accumulate = [n](PRF& total, const PRF& x) {
    total.precision += x.precision / static_cast<double>(n);
    total.recall += x.recall / static_cast<double>(n);
    total.f1 += x.f1 / static_cast<double>(n);
  };
  for (const auto& s : report.per_document) {
    accumulate(report.rouge1, s.rouge1);
    accumulate(report.rouge2, s.rouge2);
    accumulate(report.rougel, s.rougel);
  }
  for (CellType t : kAllCellTypes) {
    const std::size_t k = TypeIndex(t);
    report.table_f1[k] = TableF1(gen, ref, t);
    report.corpus_f1[k] = CorpusF1(gen, ref, t);
    for (std::size_t d = 0; d < n; ++d) {
      report.per_document[d].table_f1[k] = report.table_f1[k].per_doc[d];
    }
  }
  return report;
}

// Convenience form for in-memory string lists; ids are "0", "1", ...
inline MetricReport EvaluateStrings(std::span<const std::string> generated,
                                    std::span<const std::string> reference,
                                    const EvalOptions& options = {}) {
  if (generated.size() != reference.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "generated and reference lists differ in length (" +
                    std::to_string(generated.size()) + " vs " +
                    std::to_string(reference.size()) + ")");
  }
  std::vector<EvalDocument> docs;
  docs.reserve(generated.size());
  for (std::size_t i = 0; i < generated.size(); ++i) {
    docs.push_back({std::to_string(i), generated[i], reference[i]});
  }
  return Evaluate(docs, options);
}

// One decimal on the 0-100 scale, for display columns.
inline double DisplayScore(double fraction) {
  return std::round(fraction * 1000.0) / 10.0;
}

namespace evaluation_detail {

using Json = nlohmann::ordered_json;

inline Json PrfJson(const PRF& x) {
  return Json{{"precision", x.precision}, {"recall", x.recall}, {"f1", x.f1}};
}

inline Json OptionalJson(const std::optional<double>& x) {
  return x ? Json(*x) : Json(nullptr);
}

}  // namespace evaluation_detail

// Headline columns are F1 x100 rounded to one decimal; "raw" keeps full
// precision fractions, "per_document" keeps what significance testing needs.
inline nlohmann::ordered_json ReportToJson(const MetricReport& report,
                                           const nlohmann::ordered_json& config = {}) {
  using evaluation_detail::Json;
  using evaluation_detail::OptionalJson;
  using evaluation_detail::PrfJson;
  Json out;
  if (!config.is_null()) out["config"] = config;
  out["documents"] = report.documents;
  out["rouge"] = Json{{"1", DisplayScore(report.rouge1.f1)},
                      {"2", DisplayScore(report.rouge2.f1)},
                      {"l", DisplayScore(report.rougel.f1)}};
  Json table = Json::object();
  Json corpus = Json::object();
  Json raw_table = Json::object();
  Json raw_corpus = Json::object();
  for (CellType t : kAllCellTypes) {
    const std::string name(CellTypeName(t));
    const std::size_t k = TypeIndex(t);
    table[name] = DisplayScore(report.table_f1[k].mean);
    corpus[name] = DisplayScore(report.corpus_f1[k].f1);
    raw_table[name] = Json{{"mean", report.table_f1[k].mean},
                           {"included", report.table_f1[k].included}};
    raw_corpus[name] = PrfJson(report.corpus_f1[k]);
  }
  out["table_f1"] = table;
  out["corpus_f1"] = corpus;
  out["raw"] = Json{{"rouge", Json{{"1", PrfJson(report.rouge1)},
                                   {"2", PrfJson(report.rouge2)},
                                   {"l", PrfJson(report.rougel)}}},
                    {"table_f1", raw_table},
                    {"corpus_f1", raw_corpus}};
  Json docs = Json::array();
  for (const auto& s : report.per_document) {
    Json tf = Json::object();
    for (CellType t : kAllCellTypes) {
      tf[std::string(CellTypeName(t))] = OptionalJson(s.table_f1[TypeIndex(t)]);
    }
    docs.push_back(Json{{"id", s.id},
                        {"rouge", Json{{"1", s.rouge1.f1}, {"2", s.rouge2.f1},
                                       {"l", s.rougel.f1}}},
                        {"table_f1", tf}});
  }
  out["per_document"] = std::move(docs);
  return out;
}

// ---------------------------------------------------------------------------
// Significance between two evaluation reports over the same documents.

struct MetricSignificance {
  std::string metric;  // "rouge1", "table_f1.value", ...
  std::size_t documents = 0;
  std::optional<BootstrapResult> result;  // nullopt: fewer than 2 paired docs
};

namespace evaluation_detail {

struct PerDocColumns {
  std::vector<std::string> ids;
  std::map<std::string, std::vector<std::optional<double>>> columns;
};

inline const char* const kSignificanceMetrics[] = {
    "rouge1", "rouge2", "rougel", "table_f1.header", "table_f1.group", "table_f1.value"};

inline PerDocColumns ReadPerDocument(const nlohmann::json& report) {
  if (!report.contains("per_document") || !report["per_document"].is_array()) {
    throw Error(ErrorCode::kParse, "report has no per_document array");
  }
  PerDocColumns out;
  for (const auto& doc : report["per_document"]) {
    out.ids.push_back(doc.at("id").get<std::string>());
    auto value = [](const nlohmann::json& v) -> std::optional<double> {
      if (v.is_null()) return std::nullopt;
      return v.get<double>();
    };
    const auto& rouge = doc.at("rouge");
    out.columns["rouge1"].push_back(value(rouge.at("1")));
    out.columns["rouge2"].push_back(value(rouge.at("2")));
    out.columns["rougel"].push_back(value(rouge.at("l")));
    const auto& tf = doc.at("table_f1");
    for (const char* type : {"header", "group", "value"}) {
      out.columns[std::string("table_f1.") + type].push_back(value(tf.at(type)));
    }
  }
  return out;
}

}  // namespace evaluation_detail

// Pairs documents by id. Table-F1 columns only use documents scored by both
// systems. Corpus-F1 is not decomposable per document and is not tested.
inline std::vector<MetricSignificance> CompareReports(const nlohmann::json& report_a,
                                                      const nlohmann::json& report_b,
                                                      std::size_t n_resamples,
                                                      std::uint64_t seed) {
  if (n_resamples == 0) {
    throw Error(ErrorCode::kInvalidArgument, "n_resamples must be positive");
  }
  const auto a = evaluation_detail::ReadPerDocument(report_a);
  const auto b = evaluation_detail::ReadPerDocument(report_b);
  std::map<std::string, std::size_t> b_index;
  for (std::size_t i = 0; i < b.ids.size(); ++i) {
    if (!b_index.emplace(b.ids[i], i).second) {
      throw Error(ErrorCode::kDuplicateId, "duplicate document id " + b.ids[i]);
    }
  }
  std::set<std::string> a_ids(a.ids.begin(), a.ids.end());
  if (a_ids.size() != a.ids.size()) {
    throw Error(ErrorCode::kDuplicateId, "duplicate document id in first report");
  }
  std::string missing;
  for (const auto& id : a.ids) {
    if (!b_index.count(id)) missing += " " + id;
  }
  for (const auto& id : b.ids) {
    if (!a_ids.count(id)) missing += " " + id;
  }
  if (!missing.empty()) {
    throw Error(ErrorCode::kIdMismatch, "document ids differ between reports:" + missing);
  }

  std::vector<MetricSignificance> out;
  for (const char* metric : evaluation_detail::kSignificanceMetrics) {
    const auto& col_a = a.columns.at(metric);
    const auto& col_b = b.columns.at(metric);
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t i = 0; i < a.ids.size(); ++i) {
      const auto& x = col_a[i];
      const auto& y = col_b[b_index.at(a.ids[i])];
      if (x && y) {
        xs.push_back(*x);
        ys.push_back(*y);
      }
    }
    MetricSignificance m{metric, xs.size(), std::nullopt};
    if (xs.size() >= 2) m.result = PairedBootstrap(xs, ys, n_resamples, seed);
    out.push_back(std::move(m));
  }
  return out;
}

inline nlohmann::ordered_json BootstrapToJson(const BootstrapResult& r) {
  return nlohmann::ordered_json{{"p_value", r.p_value},     {"wins", r.wins},
                                {"ties", r.ties},           {"losses", r.losses},
                                {"n_resamples", r.n_resamples}, {"seed", r.seed},
                                {"mean_a", r.mean_a},       {"mean_b", r.mean_b}};
}

}  // namespace wikitig

#endif  // WIKITIG_EVALUATION_HPP_
