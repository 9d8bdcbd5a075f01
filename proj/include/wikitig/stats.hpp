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

#ifndef WIKITIG_STATS_HPP_
#define WIKITIG_STATS_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "wikitig/error.hpp"
#include "wikitig/extraction.hpp"
#include "wikitig/split.hpp"
#include "wikitig/table.hpp"

namespace wikitig {

struct TypeCounts {
  std::size_t type_frequency = 0;        // distinct elements
  std::size_t appearance_frequency = 0;  // occurrences
  friend bool operator==(const TypeCounts&, const TypeCounts&) = default;
};

struct SplitFrequencies {
  std::array<TypeCounts, 3> by_type{};  // indexed by CellType

  const TypeCounts& operator[](CellType t) const {
    return by_type[static_cast<std::size_t>(t)];
  }
};

struct FrequencyTable {
  SplitFrequencies overall;
  std::array<SplitFrequencies, 3> per_split{};  // indexed by SplitLabel

  const SplitFrequencies& split(SplitLabel s) const {
    return per_split[static_cast<std::size_t>(s)];
  }
};

struct DistributionSummary {
  double mean = 0.0;
  double std = 0.0;  // population
  double max = 0.0;
  double min = 0.0;
  std::size_t count = 0;
};

inline DistributionSummary Summarize(std::span<const double> xs) {
  if (xs.empty()) throw Error(ErrorCode::kEmptyInput, "cannot summarize an empty sample");
  DistributionSummary s;
  s.count = xs.size();
  s.min = *std::min_element(xs.begin(), xs.end());
  s.max = *std::max_element(xs.begin(), xs.end());
  double sum = 0.0;
  for (double x : xs) sum += x;
  s.mean = sum / static_cast<double>(xs.size());
  double sq = 0.0;
  for (double x : xs) sq += (x - s.mean) * (x - s.mean);
  s.std = std::sqrt(sq / static_cast<double>(xs.size()));
  // Guard the invariant min <= mean <= max against rounding.
  s.mean = std::clamp(s.mean, s.min, s.max);
  return s;
}

namespace stats_detail {

inline void CheckNonEmpty(std::span<const InfoboxRecord> dataset) {
  if (dataset.empty()) throw Error(ErrorCode::kEmptyInput, "dataset is empty");
}

inline SplitFrequencies Count(std::span<const InfoboxRecord> dataset,
                              std::optional<SplitLabel> only) {
  std::array<std::set<TypedElement>, 3> distinct;
  SplitFrequencies out;
  for (const auto& r : dataset) {
    if (only && r.split != *only) continue;
    for (auto& e : TypedElements(r.table)) {
      const auto k = static_cast<std::size_t>(e.type);
      ++out.by_type[k].appearance_frequency;
      distinct[k].insert(std::move(e));
    }
  }
  for (std::size_t k = 0; k < 3; ++k) out.by_type[k].type_frequency = distinct[k].size();
  return out;
}

}  // namespace stats_detail

// Distinct and total Group/Header/Value elements, overall and per split.
// Distinct counts are computed independently per split, so split type
// frequencies need not add up to the overall one.
inline FrequencyTable CellTypeFrequencies(std::span<const InfoboxRecord> dataset) {
  stats_detail::CheckNonEmpty(dataset);
  FrequencyTable out;
  out.overall = stats_detail::Count(dataset, std::nullopt);
  for (SplitLabel s : kAllSplits) {
    out.per_split[static_cast<std::size_t>(s)] = stats_detail::Count(dataset, s);
  }
  return out;
}

struct HeaderValueStats {
  DistributionSummary type_frequency;        // distinct values per header
  DistributionSummary appearance_frequency;  // value occurrences per header
};

struct HeaderValueReport {
  HeaderValueStats overall;
  std::array<std::optional<HeaderValueStats>, 3> per_split;  // nullopt: no pairs
};

namespace stats_detail {

inline std::optional<HeaderValueStats> HeaderValues(std::span<const InfoboxRecord> dataset,
                                                    std::optional<SplitLabel> only) {
  std::map<std::string, std::pair<std::set<std::string>, std::size_t>> per_header;
  for (const auto& r : dataset) {
    if (only && r.split != *only) continue;
    for (const auto& cell : r.table.cells()) {
      if (const auto* p = std::get_if<PairCell>(&cell)) {
        auto& slot = per_header[p->header];
        slot.first.insert(p->value);
        ++slot.second;
      }
    }
  }
  if (per_header.empty()) return std::nullopt;
  std::vector<double> types;
  std::vector<double> appearances;
  for (const auto& [header, slot] : per_header) {
    types.push_back(static_cast<double>(slot.first.size()));
    appearances.push_back(static_cast<double>(slot.second));
  }
  return HeaderValueStats{Summarize(types), Summarize(appearances)};
}

}  // namespace stats_detail

// Per header: how many distinct values and how many value occurrences.
// Group cells are ignored. Throws if the dataset has no Pair cells.
inline HeaderValueReport PerHeaderValueStats(std::span<const InfoboxRecord> dataset) {
  auto overall = stats_detail::HeaderValues(dataset, std::nullopt);
  if (!overall) throw Error(ErrorCode::kEmptyInput, "dataset has no pair cells");
  HeaderValueReport out{*overall, {}};
  for (SplitLabel s : kAllSplits) {
    out.per_split[static_cast<std::size_t>(s)] = stats_detail::HeaderValues(dataset, s);
  }
  return out;
}

struct CellsPerTableReport {
  DistributionSummary overall;
  std::array<std::optional<DistributionSummary>, 3> per_split;
};

// Cells per table; a Pair row counts as one cell.
inline CellsPerTableReport CellsPerTableStats(std::span<const InfoboxRecord> dataset) {
  stats_detail::CheckNonEmpty(dataset);
  std::vector<double> all;
  std::array<std::vector<double>, 3> by_split;
  for (const auto& r : dataset) {
    const auto n = static_cast<double>(r.table.size());
    all.push_back(n);
    by_split[static_cast<std::size_t>(r.split)].push_back(n);
  }
  CellsPerTableReport out{Summarize(all), {}};
  for (std::size_t k = 0; k < 3; ++k) {
    if (!by_split[k].empty()) out.per_split[k] = Summarize(by_split[k]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rendering

struct DatasetStats {
  FrequencyTable frequencies;
  std::optional<HeaderValueReport> header_values;  // nullopt: no pair cells
  CellsPerTableReport cells_per_table;
};

inline DatasetStats ComputeDatasetStats(std::span<const InfoboxRecord> dataset) {
  DatasetStats out{CellTypeFrequencies(dataset), std::nullopt, CellsPerTableStats(dataset)};
  try {
    out.header_values = PerHeaderValueStats(dataset);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kEmptyInput) throw;
  }
  return out;
}

namespace stats_detail {

inline std::string Thousands(std::size_t n) {
  std::string digits = std::to_string(n);
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i > 0 && (digits.size() - i) % 3 == 0) out.push_back(',');
    out.push_back(digits[i]);
  }
  return out;
}

inline std::string Fixed1(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f", x);
  return buf;
}

inline std::string Row(const std::vector<std::string>& cols) {
  std::string out;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    std::string c = cols[i];
    const std::size_t width = i == 0 ? 8 : 12;
    if (c.size() < width) c.append(width - c.size(), ' ');
    out += c;
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out + "\n";
}

inline std::string SummaryRow(const std::string& label,
                              const std::optional<DistributionSummary>& s) {
  if (!s) return Row({label, "-", "-", "-", "-"});
  return Row({label, Fixed1(s->mean), Fixed1(s->std),
              Thousands(static_cast<std::size_t>(s->max)),
              Thousands(static_cast<std::size_t>(s->min))});
}

inline nlohmann::ordered_json SummaryJson(const std::optional<DistributionSummary>& s) {
  if (!s) return nullptr;
  return nlohmann::ordered_json{{"mean", s->mean}, {"std", s->std}, {"max", s->max},
                                {"min", s->min},   {"count", s->count}};
}

inline const char* const kSplitColumns[] = {"Train", "Valid", "Test"};

}  // namespace stats_detail

// Aligned plain-text tables: cell-type frequencies, values per header, and
// cells per table, each with All/Train/Valid/Test.
inline std::string RenderStatsText(const DatasetStats& s) {
  using namespace stats_detail;
  std::string out;
  auto freq_block = [&](const char* heading, bool appearance) {
    out += std::string(heading) + "\n";
    out += Row({"Type", "Total", "Train", "Valid", "Test"});
    for (CellType t : kAllCellTypes) {
      auto pick = [&](const SplitFrequencies& f) {
        return Thousands(appearance ? f[t].appearance_frequency : f[t].type_frequency);
      };
      std::string name(CellTypeName(t));
      name[0] = static_cast<char>(name[0] - 'a' + 'A');
      out += Row({name, pick(s.frequencies.overall),
                  pick(s.frequencies.split(SplitLabel::kTrain)),
                  pick(s.frequencies.split(SplitLabel::kValid)),
                  pick(s.frequencies.split(SplitLabel::kTest))});
    }
  };
  freq_block("Type Frequency", false);
  out += "\n";
  freq_block("Appearance Frequency", true);

  auto summary_block = [&](const char* heading,
                           const std::optional<DistributionSummary>& all,
                           const std::array<std::optional<DistributionSummary>, 3>& splits) {
    out += "\n" + std::string(heading) + "\n";
    out += Row({"Split", "Mean", "Std.", "Max", "Min"});
    out += SummaryRow("All", all);
    for (std::size_t k = 0; k < 3; ++k) out += SummaryRow(kSplitColumns[k], splits[k]);
  };
  std::array<std::optional<DistributionSummary>, 3> types{};
  std::array<std::optional<DistributionSummary>, 3> appearances{};
  std::optional<DistributionSummary> all_types;
  std::optional<DistributionSummary> all_appearances;
  if (s.header_values) {
    all_types = s.header_values->overall.type_frequency;
    all_appearances = s.header_values->overall.appearance_frequency;
    for (std::size_t k = 0; k < 3; ++k) {
      if (const auto& hv = s.header_values->per_split[k]) {
        types[k] = hv->type_frequency;
        appearances[k] = hv->appearance_frequency;
      }
    }
  }
  summary_block("Type frequencies of values for each header", all_types, types);
  summary_block("Appearance frequencies of values for each header", all_appearances,
                appearances);
  summary_block("Number of cells in tables", s.cells_per_table.overall,
                s.cells_per_table.per_split);
  return out;
}

inline nlohmann::ordered_json StatsToJson(const DatasetStats& s) {
  using stats_detail::SummaryJson;
  using Json = nlohmann::ordered_json;
  auto freq_json = [](const SplitFrequencies& f) {
    Json j = Json::object();
    for (CellType t : kAllCellTypes) {
      j[std::string(CellTypeName(t))] =
          Json{{"type_frequency", f[t].type_frequency},
               {"appearance_frequency", f[t].appearance_frequency}};
    }
    return j;
  };
  Json freqs = Json{{"all", freq_json(s.frequencies.overall)}};
  for (SplitLabel sp : kAllSplits) {
    freqs[std::string(SplitName(sp))] = freq_json(s.frequencies.split(sp));
  }
  Json hv = nullptr;
  if (s.header_values) {
    auto pair_json = [](const std::optional<HeaderValueStats>& x) -> Json {
      if (!x) return nullptr;
      return Json{{"type_frequency", SummaryJson(x->type_frequency)},
                  {"appearance_frequency", SummaryJson(x->appearance_frequency)}};
    };
    hv = Json{{"all", pair_json(s.header_values->overall)}};
    for (SplitLabel sp : kAllSplits) {
      hv[std::string(SplitName(sp))] =
          pair_json(s.header_values->per_split[static_cast<std::size_t>(sp)]);
    }
  }
  Json cells = Json{{"all", SummaryJson(s.cells_per_table.overall)}};
  for (SplitLabel sp : kAllSplits) {
    cells[std::string(SplitName(sp))] =
        SummaryJson(s.cells_per_table.per_split[static_cast<std::size_t>(sp)]);
  }
  return Json{{"cell_type_frequencies", freqs},
              {"header_value_frequencies", hv},
              {"cells_per_table", cells}};
}

}  // namespace wikitig

#endif  // WIKITIG_STATS_HPP_
