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

#ifndef WIKITIG_DATASET_HPP_
#define WIKITIG_DATASET_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "wikitig/error.hpp"
#include "wikitig/extraction.hpp"
#include "wikitig/geometry.hpp"
#include "wikitig/prompt.hpp"
#include "wikitig/split.hpp"
#include "wikitig/table.hpp"

namespace wikitig {

using OrderedJson = nlohmann::ordered_json;

enum class Task { kTableGen, kImageGen };

inline std::string_view TaskName(Task t) {
  return t == Task::kTableGen ? "table" : "image";
}

// Which inputs the table-generation model sees; decides the prompt form.
enum class TableInput { kTitle, kImage, kBoth };

struct EmitOptions {
  Task task = Task::kTableGen;
  int cap = 480;                         // table generation short-side limit
  TableInput table_input = TableInput::kBoth;
  bool image_prompt_with_table = true;   // image generation: append the table
};

// Record line. Keys and their order are part of the file format.
inline OrderedJson RecordToJson(const InfoboxRecord& r) {
  OrderedJson cells = OrderedJson::array();
  for (const auto& cell : r.table.cells()) {
    if (const auto* g = std::get_if<GroupCell>(&cell)) {
      cells.push_back(OrderedJson{{"type", "group"}, {"text", g->text}});
    } else {
      const auto& p = std::get<PairCell>(cell);
      cells.push_back(
          OrderedJson{{"type", "pair"}, {"header", p.header}, {"value", p.value}});
    }
  }
  OrderedJson j;
  j["id"] = r.id;
  j["title"] = r.title;
  j["image_url"] = r.image.url;
  j["image_format"] = ImageFormatName(r.image.format);
  j["image_w"] = r.image.width_px ? OrderedJson(*r.image.width_px) : OrderedJson(nullptr);
  j["image_h"] = r.image.height_px ? OrderedJson(*r.image.height_px) : OrderedJson(nullptr);
  j["caption"] = r.caption ? OrderedJson(*r.caption) : OrderedJson(nullptr);
  j["table_linearized"] = Linearize(r.table);
  j["cells"] = std::move(cells);
  j["split"] = SplitName(r.split);
  return j;
}

// Inverse of RecordToJson. The page id is recovered from the record id.
// Throws Error(kParse) on schema violations or when "table_linearized"
// disagrees with "cells".
inline InfoboxRecord RecordFromJson(const nlohmann::json& j) {
  try {
    CellList cells;
    for (const auto& c : j.at("cells")) {
      const auto type = c.at("type").get<std::string>();
      if (type == "group") {
        cells.push_back(GroupCell{c.at("text").get<std::string>()});
      } else if (type == "pair") {
        cells.push_back(PairCell{c.at("header").get<std::string>(),
                                 c.at("value").get<std::string>()});
      } else {
        throw Error(ErrorCode::kParse, "unknown cell type \"" + type + "\"");
      }
    }
    InfoboxTable table(std::move(cells));
    if (Linearize(table) != j.at("table_linearized").get<std::string>()) {
      throw Error(ErrorCode::kParse, "table_linearized does not match cells");
    }
    ImageRef image;
    image.url = j.at("image_url").get<std::string>();
    image.format = ParseImageFormatName(j.at("image_format").get<std::string>());
    if (!j.at("image_w").is_null()) image.width_px = j.at("image_w").get<int>();
    if (!j.at("image_h").is_null()) image.height_px = j.at("image_h").get<int>();
    std::optional<std::string> caption;
    if (!j.at("caption").is_null()) caption = j.at("caption").get<std::string>();
    auto id = j.at("id").get<std::string>();
    const auto hash = id.rfind('#');
    std::string page = hash == std::string::npos ? id : id.substr(0, hash);
    auto title = j.at("title").get<std::string>();
    if (title.empty()) throw Error(ErrorCode::kParse, "empty title");
    return InfoboxRecord{std::move(id),
                         std::move(title),
                         std::move(image),
                         std::move(caption),
                         std::move(table),
                         std::move(page),
                         ParseSplitName(j.at("split").get<std::string>())};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("bad record: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParse) throw;
    throw Error(ErrorCode::kParse, std::string("bad record: ") + e.what());
  }
}

inline std::vector<InfoboxRecord> ReadRecords(std::istream& in,
                                              std::string_view source = "<stream>") {
  std::vector<InfoboxRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(RecordFromJson(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kParse, std::string(source) + ":" +
                                         std::to_string(line_no) + ": " + e.what());
    } catch (const Error& e) {
      throw Error(e.code(), std::string(source) + ":" + std::to_string(line_no) +
                                ": " + e.what());
    }
  }
  return out;
}

inline std::vector<InfoboxRecord> ReadRecordsFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  return ReadRecords(in, path.string());
}

struct PromptedExample {
  std::string id;
  std::string prompt;
  std::string target;
  SplitLabel split = SplitLabel::kTrain;
};

// nullopt when the record is not usable for the task (image generation
// without a caption).
inline std::optional<PromptedExample> MakePrompt(const InfoboxRecord& r,
                                                 const EmitOptions& options) {
  if (options.task == Task::kTableGen) {
    std::optional<std::string> title;
    if (options.table_input != TableInput::kImage) title = r.title;
    return PromptedExample{r.id, FormatTablePrompt(title, true), Linearize(r.table),
                           r.split};
  }
  if (!r.caption) return std::nullopt;
  return PromptedExample{
      r.id,
      FormatImagePrompt(*r.caption, options.image_prompt_with_table ? &r.table : nullptr),
      r.image.url, r.split};
}

// Resize/crop plan for one record; null when dimensions are unknown.
inline OrderedJson GeometryJson(const InfoboxRecord& r, const EmitOptions& options) {
  if (!r.image.width_px || !r.image.height_px) return nullptr;
  const int w = *r.image.width_px;
  const int h = *r.image.height_px;
  if (options.task == Task::kTableGen) {
    const ScaledSize s = TableGenGeometry(w, h, options.cap);
    return OrderedJson{{"id", r.id}, {"scaled_w", s.width}, {"scaled_h", s.height}};
  }
  const CropGeometry g = ImageGenGeometry(w, h);
  return OrderedJson{{"id", r.id},         {"scaled_w", g.scaled_w},
                     {"scaled_h", g.scaled_h}, {"crop_x", g.crop_x},
                     {"crop_y", g.crop_y},     {"crop_side", g.crop_side}};
}

struct EmitSummary {
  std::array<std::size_t, 3> records_per_split{};  // indexed by SplitLabel
  std::size_t skipped_without_caption = 0;
  std::vector<std::string> warnings;
  std::vector<std::filesystem::path> files;

  std::size_t total() const {
    return records_per_split[0] + records_per_split[1] + records_per_split[2];
  }
};

// Writes, per split, "<split>.jsonl" (records), "<split>.prompts.jsonl"
// ({"id","prompt","target"}) and "<split>.geometry.jsonl" into `out_dir`.
// Records are written sorted by title, then id. Image generation keeps only
// captioned records. Files are created even when empty.
inline EmitSummary EmitDataset(std::span<const InfoboxRecord> records,
                               const EmitOptions& options,
                               const std::filesystem::path& out_dir) {
  if (options.task == Task::kTableGen && !IsValidCap(options.cap)) {
    throw Error(ErrorCode::kInvalidArgument, "cap must be 256, 384 or 480");
  }
  std::set<std::string_view> ids;
  for (const auto& r : records) {
    if (!ids.insert(r.id).second) {
      throw Error(ErrorCode::kDuplicateId, "duplicate record id " + r.id);
    }
  }
  std::vector<const InfoboxRecord*> sorted;
  sorted.reserve(records.size());
  for (const auto& r : records) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(), [](const auto* a, const auto* b) {
    return std::tie(a->title, a->id) < std::tie(b->title, b->id);
  });

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + out_dir.string() + ": " + ec.message());

  EmitSummary summary;
  for (SplitLabel split : kAllSplits) {
    const std::string name(SplitName(split));
    const auto records_path = out_dir / (name + ".jsonl");
    const auto prompts_path = out_dir / (name + ".prompts.jsonl");
    const auto geometry_path = out_dir / (name + ".geometry.jsonl");
    std::ofstream rec_out(records_path, std::ios::binary | std::ios::trunc);
    std::ofstream prompt_out(prompts_path, std::ios::binary | std::ios::trunc);
    std::ofstream geo_out(geometry_path, std::ios::binary | std::ios::trunc);
    if (!rec_out || !prompt_out || !geo_out) {
      throw Error(ErrorCode::kIo, "cannot write into " + out_dir.string());
    }
    for (const auto* r : sorted) {
      if (r->split != split) continue;
      const auto prompt = MakePrompt(*r, options);
      if (!prompt) {
        ++summary.skipped_without_caption;
        continue;
      }
      rec_out << RecordToJson(*r).dump() << '\n';
      prompt_out << OrderedJson{{"id", prompt->id},
                                {"prompt", prompt->prompt},
                                {"target", prompt->target}}
                        .dump()
                 << '\n';
      if (auto geo = GeometryJson(*r, options); !geo.is_null()) {
        geo_out << geo.dump() << '\n';
      }
      ++summary.records_per_split[static_cast<std::size_t>(split)];
    }
    if (!rec_out.flush() || !prompt_out.flush() || !geo_out.flush()) {
      throw Error(ErrorCode::kIo, "write failed in " + out_dir.string());
    }
    summary.files.insert(summary.files.end(), {records_path, prompts_path, geometry_path});
  }
  if (records.empty()) summary.warnings.push_back("no records to emit; wrote empty files");
  return summary;
}

}  // namespace wikitig

#endif  // WIKITIG_DATASET_HPP_
